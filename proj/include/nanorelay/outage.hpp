// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <utility>

#include "nanorelay/quantities.hpp"
#include "nanorelay/topology.hpp"

namespace nanorelay {

/// Monte Carlo outage estimate with provenance. For fixed inputs the result
/// is bit-identical regardless of worker count.
struct OutageEstimate {
  double p_hat = 0.0;
  double ci_low = 0.0;
  double ci_high = 0.0;
  std::uint64_t trials = 0;
  std::uint64_t failures = 0;
  std::uint64_t master_seed = 0;
  std::uint64_t config_digest = 0;
};

/// Inverse standard-normal CDF, solved to machine precision. p in (0, 1).
double normal_quantile(double p);

/// Wilson score interval for a binomial proportion.
std::pair<double, double> wilson_ci(std::uint64_t failures, std::uint64_t trials,
                                    double confidence = 0.95);

/// FNV-1a digest of the full scalar configuration and placement, recorded in
/// every estimate so result files can be traced back to their inputs.
std::uint64_t config_digest(const SystemConfig& cfg, const PlacementSpec& placement);

/// Estimates P(combined received SNR < gamma_th) over `trials` fading
/// realizations of the given geometry. RandomDisk placements are redrawn
/// every trial unless the spec freezes them. Workers = 0 picks the hardware
/// default, capped by NANO_SIM_THREADS; the worker count never changes the
/// result, only the wall time.
OutageEstimate estimate_outage(const SystemConfig& cfg, const PlacementSpec& placement,
                               std::uint64_t trials, std::uint64_t master_seed,
                               unsigned workers = 0);

/// Exact single-relay outage P(s1*s2/(s1+s2+1) < t) for independent
/// exponential branch SNRs with the given means, by adaptive quadrature of
/// the conditional-CDF integral to 1e-9 absolute. Independent of the Monte
/// Carlo path; used to validate it.
double single_relay_oracle(SnrLinear mean1, SnrLinear mean2, SnrLinear gamma_th);

/// Closed-form outage of min(s1, s2): 1 - exp(-t*(1/mean1 + 1/mean2)).
/// Lower-bounds the true AF outage.
double min_bound_outage_closed_form(SnrLinear mean1, SnrLinear mean2, SnrLinear gamma_th);

/// Worker count actually used for a request (applies the NANO_SIM_THREADS
/// cap and the hardware default).
unsigned resolve_worker_count(unsigned requested);

}  // namespace nanorelay
