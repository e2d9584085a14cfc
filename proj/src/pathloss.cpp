// SPDX-License-Identifier: Apache-2.0
#include "nanorelay/pathloss.hpp"

#include <cmath>
#include <stdexcept>

namespace nanorelay {

PathLossDb pathloss_db(DistanceMm d, FrequencyThz f, double n_ducts) {
  if (!std::isfinite(n_ducts) || n_ducts < 0.0) {
    throw std::invalid_argument("n_ducts must be finite and >= 0");
  }
  using namespace pathloss_model;
  const double duct_term = kDuctOffset * n_ducts + kBase;
  const double dist_term =
      (kDistCoeffPerDuct * n_ducts + kDistCoeffBase) * std::pow(d.mm(), kDistExponent);
  const double freq_term =
      (kFreqCoeffPerDuct * n_ducts + kFreqCoeffBase) * std::pow(f.thz(), kFreqExponent);
  return PathLossDb{duct_term + dist_term + freq_term};
}

SnrLinear mean_hop_snr(const SystemConfig& cfg, PowerDbm tx_power, DistanceMm d) {
  cfg.validate();
  const double loss = pathloss_db(d, cfg.f, cfg.n_ducts).db;
  const double noise = noise_power_dbm(cfg.noise_psd, cfg.bw).dbm();
  return SnrLinear{db_to_linear(tx_power.dbm() - loss - noise)};
}

}  // namespace nanorelay
