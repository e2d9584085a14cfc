// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cstdint>

namespace nanorelay {

/// Philox 4x32 keyed counter permutation, 10 rounds.
///
/// Counter-based generation is what makes the Monte Carlo engine
/// reproducible under any worker count: every random variate is a pure
/// function of (key, counter), so trials can be evaluated in any order or
/// on any thread without coordination.
std::array<std::uint32_t, 4> philox4x32_10(std::array<std::uint32_t, 4> counter,
                                           std::array<std::uint32_t, 2> key);

/// One independent random stream, identified by (master seed, trial index,
/// substream id). Distinct ids never share Philox counters.
class RandomStream {
 public:
  RandomStream(std::uint64_t master_seed, std::uint64_t trial, std::uint32_t substream);

  /// Uniform on [0, 1) with 53 random bits.
  double next_uniform();

  /// Unit-mean exponential variate (squared magnitude of a CN(0,1) draw).
  double next_unit_exp();

 private:
  std::uint64_t next_u64();

  std::array<std::uint32_t, 2> key_;
  std::array<std::uint32_t, 4> counter_;
  std::array<std::uint32_t, 4> block_{};
  int available_ = 0;
};

/// Substream namespace for per-relay placement draws; hop fading draws use
/// substreams [0, 2M).
inline constexpr std::uint32_t kPlacementSubstreamBase = 0x80000000u;

/// Handle for all randomness of one Monte Carlo trial. Cheap to construct;
/// streams derive lazily.
struct TrialRng {
  std::uint64_t master_seed = 0;
  std::uint64_t trial = 0;

  RandomStream stream(std::uint32_t substream) const {
    return RandomStream{master_seed, trial, substream};
  }
};

}  // namespace nanorelay
