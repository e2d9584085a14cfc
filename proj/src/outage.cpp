// SPDX-License-Identifier: Apache-2.0
#include "nanorelay/outage.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "nanorelay/link.hpp"
#include "nanorelay/pathloss.hpp"

namespace nanorelay {

namespace {

// ---------------------------------------------------------------------------
// Inverse normal CDF: bisection-safeguarded Newton on Phi(z) - p = 0 using
// erfc, so there are no approximation constants to get wrong.

double normal_cdf(double z) { return 0.5 * std::erfc(-z / std::sqrt(2.0)); }

double normal_pdf(double z) {
  return std::exp(-0.5 * z * z) / std::sqrt(2.0 * std::acos(-1.0));
}

}  // namespace

double normal_quantile(double p) {
  if (!(p > 0.0 && p < 1.0)) {
    throw std::invalid_argument("normal_quantile requires p in (0, 1)");
  }
  const double q = std::min(p, 1.0 - p);
  double lo = 0.0;
  double hi = std::sqrt(-2.0 * std::log(q)) + 1.0;  // crude tail bound
  double z = hi / 2.0;
  for (int it = 0; it < 200; ++it) {
    const double err = normal_cdf(-z) - q;  // solve for the lower tail
    if (err > 0.0) {
      lo = z;
    } else {
      hi = z;
    }
    const double step = err / normal_pdf(z);
    double next = z + step;
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    if (std::abs(next - z) < 1e-15 * std::max(1.0, z)) {
      z = next;
      break;
    }
    z = next;
  }
  return (p < 0.5) ? -z : z;
}

std::pair<double, double> wilson_ci(std::uint64_t failures, std::uint64_t trials,
                                    double confidence) {
  if (trials == 0) throw std::invalid_argument("wilson_ci requires trials >= 1");
  if (failures > trials) throw std::invalid_argument("failures must not exceed trials");
  if (!(confidence > 0.0 && confidence < 1.0)) {
    throw std::invalid_argument("confidence must lie in (0, 1)");
  }
  const double z = normal_quantile(0.5 + confidence / 2.0);
  const double n = static_cast<double>(trials);
  const double p = static_cast<double>(failures) / n;
  const double z2n = z * z / n;
  const double denom = 1.0 + z2n;
  const double center = (p + z2n / 2.0) / denom;
  const double half = z * std::sqrt(p * (1.0 - p) / n + z2n / (4.0 * n)) / denom;
  return {std::clamp(center - half, 0.0, 1.0), std::clamp(center + half, 0.0, 1.0)};
}

// ---------------------------------------------------------------------------
// Config digest

namespace {

std::uint64_t fnv1a(std::uint64_t h, const char* data, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    h ^= static_cast<unsigned char>(data[i]);
    h *= 0x100000001b3ull;
  }
  return h;
}

void hash_field(std::uint64_t& h, const char* name, double v) {
  char buf[40];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::hex);
  h = fnv1a(h, name, std::char_traits<char>::length(name));
  h = fnv1a(h, "=", 1);
  h = fnv1a(h, buf, static_cast<std::size_t>(end - buf));
  h = fnv1a(h, ";", 1);
}

}  // namespace

std::uint64_t config_digest(const SystemConfig& cfg, const PlacementSpec& placement) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  hash_field(h, "n_ducts", cfg.n_ducts);
  hash_field(h, "f_thz", cfg.f.thz());
  hash_field(h, "bw_hz", cfg.bw.hz());
  hash_field(h, "p_source_dbm", cfg.p_source.dbm());
  hash_field(h, "p_relay_dbm", cfg.p_relay.dbm());
  hash_field(h, "gamma_th_db", cfg.gamma_th.db());
  hash_field(h, "noise_psd_dbm_hz", cfg.noise_psd.dbm_per_hz());
  hash_field(h, "d_mm", cfg.d.mm());

  const std::string label = placement_label(placement);
  h = fnv1a(h, label.data(), label.size());
  h = fnv1a(h, "{", 1);
  std::visit(
      [&h](const auto& s) {
        using T = std::decay_t<decltype(s)>;
        hash_field(h, "d", s.d.mm());
        hash_field(h, "m", static_cast<double>(s.m));
        if constexpr (std::is_same_v<T, VerticalAngular>) {
          hash_field(h, "spacing", s.spacing_deg);
          hash_field(h, "x_frac", s.x_frac);
        } else if constexpr (std::is_same_v<T, VerticalOffset>) {
          hash_field(h, "spacing", s.spacing_deg);
          hash_field(h, "x_offset", s.x_offset.mm());
        } else {
          hash_field(h, "radius", s.radius ? s.radius->mm() : s.d.mm() / 2.0);
          hash_field(h, "redraw", s.redraw_per_trial ? 1.0 : 0.0);
        }
      },
      placement);
  h = fnv1a(h, "}", 1);
  return h;
}

// ---------------------------------------------------------------------------
// Worker resolution

unsigned resolve_worker_count(unsigned requested) {
  unsigned workers = requested;
  if (workers == 0) {
    workers = std::max(1u, std::thread::hardware_concurrency());
  }
  if (const char* env = std::getenv("NANO_SIM_THREADS")) {
    char* end = nullptr;
    const unsigned long cap = std::strtoul(env, &end, 10);
    if (end != env && cap >= 1) {
      workers = std::min<unsigned long>(workers, cap);
    }
  }
  return std::max(1u, workers);
}

// ---------------------------------------------------------------------------
// Monte Carlo engine

namespace {

struct MeanPairs {
  std::vector<double> sr;
  std::vector<double> rd;
};

MeanPairs hop_means(const SystemConfig& cfg, const Topology& topo) {
  MeanPairs means;
  const auto hops = hop_distances(topo);
  means.sr.reserve(hops.size());
  means.rd.reserve(hops.size());
  for (const auto& hop : hops) {
    means.sr.push_back(mean_hop_snr(cfg, cfg.p_source, DistanceMm{hop.d_sr_mm}).ratio());
    means.rd.push_back(mean_hop_snr(cfg, cfg.p_relay, DistanceMm{hop.d_rd_mm}).ratio());
  }
  return means;
}

std::uint64_t run_trials(const SystemConfig& cfg, const PlacementSpec& placement,
                         std::uint64_t begin, std::uint64_t end, std::uint64_t seed,
                         double gamma_lin, const MeanPairs* fixed_means) {
  const int m = relay_count(placement);
  const auto mz = static_cast<std::size_t>(m);
  std::vector<double> g1(mz), g2(mz);
  MeanPairs scratch;

  const auto* disk = std::get_if<RandomDisk>(&placement);
  std::uint64_t failures = 0;
  for (std::uint64_t trial = begin; trial < end; ++trial) {
    const TrialRng rng{seed, trial};

    const MeanPairs* means = fixed_means;
    if (disk != nullptr && disk->redraw_per_trial) {
      scratch = hop_means(cfg, place_random(*disk, rng));
      means = &scratch;
    }

    for (std::size_t k = 0; k < mz; ++k) {
      g1[k] = rng.stream(2 * static_cast<std::uint32_t>(k)).next_unit_exp();
      g2[k] = rng.stream(2 * static_cast<std::uint32_t>(k) + 1).next_unit_exp();
    }
    const double snr = combined_snr(g1, g2, means->sr, means->rd);
    if (snr < gamma_lin) ++failures;
  }
  return failures;
}

}  // namespace

OutageEstimate estimate_outage(const SystemConfig& cfg, const PlacementSpec& placement,
                               std::uint64_t trials, std::uint64_t master_seed,
                               unsigned workers) {
  cfg.validate();
  validate(placement);
  if (trials == 0) throw std::invalid_argument("estimate_outage requires trials >= 1");
  if (span(placement).mm() != cfg.d.mm()) {
    throw std::invalid_argument("placement span and config Tx-Rx distance disagree");
  }

  const double gamma_lin = cfg.gamma_th.linear().ratio();

  // Deterministic placements (and frozen random ones) share one geometry.
  MeanPairs fixed;
  bool have_fixed = false;
  if (const auto* disk = std::get_if<RandomDisk>(&placement)) {
    if (!disk->redraw_per_trial) {
      fixed = hop_means(cfg, place_random(*disk, TrialRng{master_seed, 0}));
      have_fixed = true;
    }
  } else {
    fixed = hop_means(cfg, place(placement));
    have_fixed = true;
  }
  const MeanPairs* fixed_ptr = have_fixed ? &fixed : nullptr;

  const unsigned n_workers =
      static_cast<unsigned>(std::min<std::uint64_t>(resolve_worker_count(workers), trials));

  std::uint64_t failures = 0;
  if (n_workers <= 1) {
    failures = run_trials(cfg, placement, 0, trials, master_seed, gamma_lin, fixed_ptr);
  } else {
    std::vector<std::uint64_t> counts(n_workers, 0);
    std::vector<std::exception_ptr> errors(n_workers);
    std::vector<std::thread> pool;
    pool.reserve(n_workers);
    for (unsigned w = 0; w < n_workers; ++w) {
      const std::uint64_t begin = trials * w / n_workers;
      const std::uint64_t end = trials * (w + 1) / n_workers;
      pool.emplace_back([&, w, begin, end] {
        try {
          counts[w] = run_trials(cfg, placement, begin, end, master_seed, gamma_lin, fixed_ptr);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
    for (auto& t : pool) t.join();
    for (const auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
    for (std::uint64_t c : counts) failures += c;  // exact integer merge
  }

  OutageEstimate est;
  est.trials = trials;
  est.failures = failures;
  est.p_hat = static_cast<double>(failures) / static_cast<double>(trials);
  std::tie(est.ci_low, est.ci_high) = wilson_ci(failures, trials);
  est.master_seed = master_seed;
  est.config_digest = config_digest(cfg, placement);
  return est;
}

// ---------------------------------------------------------------------------
// Single-relay oracle

namespace {

// Recursive adaptive Simpson with the standard |S2 - S| / 15 error estimate.
template <typename F>
double adaptive_simpson(const F& f, double a, double b, double fa, double fm, double fb,
                        double whole, double tol, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = f(lm);
  const double frm = f(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const double err = left + right - whole;
  if (std::abs(err) <= 15.0 * tol) {
    return left + right + err / 15.0;
  }
  if (depth <= 0) {
    throw std::runtime_error("single_relay_oracle: quadrature did not converge");
  }
  return adaptive_simpson(f, a, m, fa, flm, fm, left, tol / 2.0, depth - 1) +
         adaptive_simpson(f, m, b, fm, frm, fb, right, tol / 2.0, depth - 1);
}

template <typename F>
double integrate(const F& f, double a, double b, double tol) {
  const double m = 0.5 * (a + b);
  const double fa = f(a);
  const double fm = f(m);
  const double fb = f(b);
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return adaptive_simpson(f, a, b, fa, fm, fb, whole, tol, 52);
}

}  // namespace

double single_relay_oracle(SnrLinear mean1, SnrLinear mean2, SnrLinear gamma_th) {
  const double m1 = mean1.ratio();
  const double m2 = mean2.ratio();
  const double t = gamma_th.ratio();
  if (m1 <= 0.0 || m2 <= 0.0) {
    throw std::invalid_argument("single_relay_oracle requires positive mean SNRs");
  }
  if (t <= 0.0) {
    throw std::invalid_argument("single_relay_oracle requires gamma_th > 0");
  }

  const double l1 = 1.0 / m1;
  const double l2 = 1.0 / m2;
  // Outage iff s1 <= t, or s1 > t and s2 < t + (t^2+t)/(s1-t). Integrating the
  // survival of that condition over s1 = t + u:
  //   P(no outage) = int_0^inf l1*exp(-l1*(t+u) - l2*(t + (t^2+t)/u)) du.
  const double c = l2 * (t * t + t);
  const auto integrand = [&](double u) {
    if (u <= 0.0) return 0.0;
    return l1 * std::exp(-l1 * (t + u) - l2 * t - c / u);
  };

  // The integrand peaks near u* = sqrt(c/l1) and decays like exp(-l1*u);
  // split there and cut the tail where it is below 1e-18 of the budget.
  const double peak = std::max(std::sqrt(c / l1), 1e-12);
  const double upper = std::max(peak * 4.0, t + 45.0 / l1);
  const double tol = 1e-9;
  const double survive = integrate(integrand, 0.0, peak, tol / 3.0) +
                         integrate(integrand, peak, std::min(4.0 * peak, upper), tol / 3.0) +
                         (4.0 * peak < upper
                              ? integrate(integrand, 4.0 * peak, upper, tol / 3.0)
                              : 0.0);
  return std::clamp(1.0 - survive, 0.0, 1.0);
}

double min_bound_outage_closed_form(SnrLinear mean1, SnrLinear mean2, SnrLinear gamma_th) {
  const double m1 = mean1.ratio();
  const double m2 = mean2.ratio();
  if (m1 <= 0.0 || m2 <= 0.0) {
    throw std::invalid_argument("min_bound_outage_closed_form requires positive mean SNRs");
  }
  return 1.0 - std::exp(-gamma_th.ratio() * (1.0 / m1 + 1.0 / m2));
}

}  // namespace nanorelay
