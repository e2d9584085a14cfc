// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "nanorelay/quantities.hpp"

namespace nanorelay {

struct PathLossDb {
  double db;
};

/// Coefficients of the empirical in-body THz attenuation fit, in one place
/// so the unit convention is visible: distance enters in MILLIMETERS,
/// frequency in TERAHERTZ, and the result is in dB. N is the sweat-duct
/// count, kept real-valued to allow sensitivity sweeps.
namespace pathloss_model {
inline constexpr double kDuctOffset = -0.2;
inline constexpr double kBase = 3.98;
inline constexpr double kDistCoeffBase = 98.48;
inline constexpr double kDistCoeffPerDuct = 0.44;
inline constexpr double kDistExponent = 0.65;
inline constexpr double kFreqCoeffBase = 2.4;
inline constexpr double kFreqCoeffPerDuct = 0.068;
inline constexpr double kFreqExponent = 4.07;

// Range the polynomial was fitted over; the CLI warns outside it.
inline constexpr double kFitDistMinMm = 0.1;
inline constexpr double kFitDistMaxMm = 0.4;
inline constexpr double kFitFreqMinThz = 0.5;
inline constexpr double kFitFreqMaxThz = 1.5;
}  // namespace pathloss_model

/// Attenuation in dB between two in-body nodes at distance d and carrier f,
/// for n_ducts sweat ducts:
///   -0.2*N + 3.98 + (0.44*N + 98.48)*d^0.65 + (0.068*N + 2.4)*f^4.07
PathLossDb pathloss_db(DistanceMm d, FrequencyThz f, double n_ducts);

/// Mean received SNR of a single hop under unit-mean fading:
/// tx_power - pathloss - noise floor, converted to a linear ratio.
SnrLinear mean_hop_snr(const SystemConfig& cfg, PowerDbm tx_power, DistanceMm d);

}  // namespace nanorelay
