// SPDX-License-Identifier: Apache-2.0
#include "nanorelay/link.hpp"

#include <algorithm>
#include <stdexcept>

namespace nanorelay {

namespace {

void check_lengths(std::size_t g1, std::size_t g2, std::size_t m1, std::size_t m2) {
  if (g1 != g2 || g1 != m1 || g1 != m2) {
    throw std::invalid_argument("gain and mean-SNR lists must all have length M");
  }
}

std::vector<double> ratios(const std::vector<SnrLinear>& v) {
  std::vector<double> out;
  out.reserve(v.size());
  for (const auto& s : v) out.push_back(s.ratio());
  return out;
}

}  // namespace

HopGains draw_hop_gains(int m, const TrialRng& rng) {
  if (m < 1) throw std::invalid_argument("draw_hop_gains requires m >= 1");
  HopGains gains;
  gains.g_sr.reserve(static_cast<std::size_t>(m));
  gains.g_rd.reserve(static_cast<std::size_t>(m));
  for (int k = 0; k < m; ++k) {
    gains.g_sr.push_back(rng.stream(2 * static_cast<std::uint32_t>(k)).next_unit_exp());
    gains.g_rd.push_back(rng.stream(2 * static_cast<std::uint32_t>(k) + 1).next_unit_exp());
  }
  return gains;
}

double combined_snr(std::span<const double> g_sr, std::span<const double> g_rd,
                    std::span<const double> mean_sr, std::span<const double> mean_rd) {
  check_lengths(g_sr.size(), g_rd.size(), mean_sr.size(), mean_rd.size());
  double sum = 0.0;
  for (std::size_t i = 0; i < g_sr.size(); ++i) {
    const double s1 = g_sr[i] * mean_sr[i];
    const double s2 = g_rd[i] * mean_rd[i];
    sum += s1 * s2 / (s1 + s2 + 1.0);
  }
  return sum;
}

SnrLinear combined_snr(const HopGains& gains, const std::vector<SnrLinear>& mean_sr,
                       const std::vector<SnrLinear>& mean_rd) {
  return SnrLinear{combined_snr(gains.g_sr, gains.g_rd, ratios(mean_sr), ratios(mean_rd))};
}

double min_bound_snr(std::span<const double> g_sr, std::span<const double> g_rd,
                     std::span<const double> mean_sr, std::span<const double> mean_rd) {
  check_lengths(g_sr.size(), g_rd.size(), mean_sr.size(), mean_rd.size());
  double sum = 0.0;
  for (std::size_t i = 0; i < g_sr.size(); ++i) {
    sum += std::min(g_sr[i] * mean_sr[i], g_rd[i] * mean_rd[i]);
  }
  return sum;
}

SnrLinear min_bound_snr(const HopGains& gains, const std::vector<SnrLinear>& mean_sr,
                        const std::vector<SnrLinear>& mean_rd) {
  return SnrLinear{min_bound_snr(gains.g_sr, gains.g_rd, ratios(mean_sr), ratios(mean_rd))};
}

}  // namespace nanorelay
