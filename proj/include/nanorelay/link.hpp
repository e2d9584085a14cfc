// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <span>
#include <vector>

#include "nanorelay/quantities.hpp"
#include "nanorelay/rng.hpp"

namespace nanorelay {

/// Squared channel-gain magnitudes for the two hops of each relay branch.
/// Unit-mean exponential under the CN(0,1) fading model.
struct HopGains {
  std::vector<double> g_sr;
  std::vector<double> g_rd;
};

/// Draws |h|^2 for every hop of an m-relay trial. Relay k reads fading
/// substreams 2k (Tx->relay) and 2k+1 (relay->Rx).
HopGains draw_hop_gains(int m, const TrialRng& rng);

/// Receiver-combined SNR through m amplify-and-forward branches:
///   sum_i  s1_i*s2_i / (s1_i + s2_i + 1),  s1_i = g_sr[i]*mean_sr[i], ...
/// The direct Tx->Rx path carries no term; only relay branches contribute.
double combined_snr(std::span<const double> g_sr, std::span<const double> g_rd,
                    std::span<const double> mean_sr, std::span<const double> mean_rd);

SnrLinear combined_snr(const HopGains& gains, const std::vector<SnrLinear>& mean_sr,
                       const std::vector<SnrLinear>& mean_rd);

/// sum_i min(s1_i, s2_i): upper-bounds combined_snr term by term, which
/// makes its outage a closed-form lower bound used for cross-checks.
double min_bound_snr(std::span<const double> g_sr, std::span<const double> g_rd,
                     std::span<const double> mean_sr, std::span<const double> mean_rd);

SnrLinear min_bound_snr(const HopGains& gains, const std::vector<SnrLinear>& mean_sr,
                        const std::vector<SnrLinear>& mean_rd);

}  // namespace nanorelay
