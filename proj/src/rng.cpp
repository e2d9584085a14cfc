// SPDX-License-Identifier: Apache-2.0
#include "nanorelay/rng.hpp"

#include <cmath>

namespace nanorelay {

namespace {

constexpr std::uint32_t kPhiloxM0 = 0xD2511F53u;
constexpr std::uint32_t kPhiloxM1 = 0xCD9E8D57u;
constexpr std::uint32_t kPhiloxW0 = 0x9E3779B9u;
constexpr std::uint32_t kPhiloxW1 = 0xBB67AE85u;

inline std::array<std::uint32_t, 4> round_once(const std::array<std::uint32_t, 4>& x,
                                               const std::array<std::uint32_t, 2>& k) {
  const std::uint64_t p0 = std::uint64_t{kPhiloxM0} * x[0];
  const std::uint64_t p1 = std::uint64_t{kPhiloxM1} * x[2];
  const auto hi0 = static_cast<std::uint32_t>(p0 >> 32);
  const auto lo0 = static_cast<std::uint32_t>(p0);
  const auto hi1 = static_cast<std::uint32_t>(p1 >> 32);
  const auto lo1 = static_cast<std::uint32_t>(p1);
  return {hi1 ^ x[1] ^ k[0], lo1, hi0 ^ x[3] ^ k[1], lo0};
}

}  // namespace

std::array<std::uint32_t, 4> philox4x32_10(std::array<std::uint32_t, 4> counter,
                                           std::array<std::uint32_t, 2> key) {
  for (int round = 0; round < 10; ++round) {
    if (round > 0) {
      key[0] += kPhiloxW0;
      key[1] += kPhiloxW1;
    }
    counter = round_once(counter, key);
  }
  return counter;
}

RandomStream::RandomStream(std::uint64_t master_seed, std::uint64_t trial,
                           std::uint32_t substream)
    : key_{static_cast<std::uint32_t>(master_seed),
           static_cast<std::uint32_t>(master_seed >> 32)},
      counter_{static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(trial >> 32),
               substream, 0u} {}

std::uint64_t RandomStream::next_u64() {
  if (available_ == 0) {
    block_ = philox4x32_10(counter_, key_);
    ++counter_[3];  // block index within the substream
    available_ = 2;
  }
  const int base = (available_ == 2) ? 0 : 2;
  --available_;
  return (std::uint64_t{block_[base]} << 32) | block_[base + 1];
}

double RandomStream::next_uniform() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double RandomStream::next_unit_exp() {
  // -log(1-u) with u in [0,1): argument stays in (0,1], result in [0, 53 ln 2].
  return -std::log(1.0 - next_uniform());
}

}  // namespace nanorelay
