// SPDX-License-Identifier: Apache-2.0
#include "nanorelay/quantities.hpp"

#include <string>

namespace nanorelay {

namespace {

void require_finite(double x, const char* what) {
  if (!std::isfinite(x)) {
    throw std::invalid_argument(std::string(what) + " must be finite");
  }
}

}  // namespace

double db_to_linear(double db) {
  require_finite(db, "dB value");
  return std::pow(10.0, db / 10.0);
}

double linear_to_db(double ratio) {
  require_finite(ratio, "linear ratio");
  if (ratio <= 0.0) {
    throw std::invalid_argument("linear ratio must be > 0 to convert to dB");
  }
  return 10.0 * std::log10(ratio);
}

PowerDbm::PowerDbm(double dbm) : dbm_(dbm) { require_finite(dbm, "power [dBm]"); }

double PowerDbm::watts() const { return std::pow(10.0, (dbm_ - 30.0) / 10.0); }

double dbm_to_watt(PowerDbm p) { return p.watts(); }

FrequencyThz::FrequencyThz(double thz) : thz_(thz) {
  require_finite(thz, "frequency [THz]");
  if (thz <= 0.0) throw std::invalid_argument("frequency must be > 0");
}

BandwidthHz::BandwidthHz(double hz) : hz_(hz) {
  require_finite(hz, "bandwidth [Hz]");
  if (hz <= 0.0) throw std::invalid_argument("bandwidth must be > 0");
}

DistanceMm::DistanceMm(double mm) : mm_(mm) {
  require_finite(mm, "distance [mm]");
  if (mm < 0.0) throw std::invalid_argument("distance must be >= 0");
}

SnrDb::SnrDb(double db) : db_(db) { require_finite(db, "SNR [dB]"); }

SnrLinear SnrDb::linear() const { return SnrLinear{db_to_linear(db_)}; }

SnrLinear::SnrLinear(double ratio) : ratio_(ratio) {
  require_finite(ratio, "SNR [linear]");
  if (ratio < 0.0) throw std::invalid_argument("linear SNR must be >= 0");
}

SnrDb SnrLinear::db() const { return SnrDb{linear_to_db(ratio_)}; }

NoisePsdDbmPerHz::NoisePsdDbmPerHz(double dbm_per_hz) : dbm_per_hz_(dbm_per_hz) {
  require_finite(dbm_per_hz, "noise PSD [dBm/Hz]");
}

PowerDbm noise_power_dbm(NoisePsdDbmPerHz psd, BandwidthHz bw) {
  return PowerDbm{psd.dbm_per_hz() + 10.0 * std::log10(bw.hz())};
}

void SystemConfig::validate() const {
  if (!std::isfinite(n_ducts) || n_ducts < 0.0) {
    throw std::invalid_argument("n_ducts must be finite and >= 0");
  }
  // Remaining fields are validated by their types on construction.
}

}  // namespace nanorelay
