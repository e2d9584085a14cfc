// SPDX-License-Identifier: Apache-2.0
#include "nanorelay/topology.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace nanorelay {

namespace {

double fan_angle_deg(int k, int m, double spacing_deg) {
  return (static_cast<double>(k) - (static_cast<double>(m) - 1.0) / 2.0) * spacing_deg;
}

void validate_fan(int m, double spacing_deg) {
  if (m < 1) throw std::invalid_argument("placement needs at least one relay");
  if (!std::isfinite(spacing_deg) || spacing_deg < 0.0) {
    throw std::invalid_argument("relay angular spacing must be finite and >= 0");
  }
  const double extreme = std::abs(fan_angle_deg(m - 1, m, spacing_deg));
  if (extreme >= 90.0) {
    throw std::invalid_argument("relay fan angle reaches 90 degrees; relay would be at infinity");
  }
}

Topology fan_topology(double d, double x, int m, double spacing_deg) {
  Topology t;
  t.tx = {0.0, 0.0};
  t.rx = {d, 0.0};
  t.relays.reserve(static_cast<std::size_t>(m));
  for (int k = 0; k < m; ++k) {
    const double theta = fan_angle_deg(k, m, spacing_deg) * std::numbers::pi / 180.0;
    t.relays.push_back({x, x * std::tan(theta)});
  }
  return t;
}

double disk_radius(const RandomDisk& spec) {
  return spec.radius ? spec.radius->mm() : spec.d.mm() / 2.0;
}

}  // namespace

void validate(const PlacementSpec& spec) {
  std::visit(
      [](const auto& s) {
        using T = std::decay_t<decltype(s)>;
        if (s.d.mm() <= 0.0) throw std::invalid_argument("Tx-Rx distance must be > 0");
        if constexpr (std::is_same_v<T, VerticalAngular>) {
          validate_fan(s.m, s.spacing_deg);
          if (!(s.x_frac > 0.0 && s.x_frac < 1.0)) {
            throw std::invalid_argument("x_frac must lie strictly between 0 and 1");
          }
        } else if constexpr (std::is_same_v<T, VerticalOffset>) {
          validate_fan(s.m, s.spacing_deg);
          if (s.x_offset.mm() > s.d.mm()) {
            throw std::invalid_argument("x_offset must not exceed the Tx-Rx distance");
          }
        } else {
          if (s.m < 1) throw std::invalid_argument("placement needs at least one relay");
          if (disk_radius(s) <= 0.0) throw std::invalid_argument("disk radius must be > 0");
        }
      },
      spec);
}

int relay_count(const PlacementSpec& spec) {
  return std::visit([](const auto& s) { return s.m; }, spec);
}

DistanceMm span(const PlacementSpec& spec) {
  return std::visit([](const auto& s) { return s.d; }, spec);
}

std::string placement_label(const PlacementSpec& spec) {
  return std::visit(
      [](const auto& s) -> std::string {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, VerticalAngular>) return "vertical_angular";
        if constexpr (std::is_same_v<T, VerticalOffset>) return "vertical_offset";
        return "random_disk";
      },
      spec);
}

bool is_random(const PlacementSpec& spec) {
  return std::holds_alternative<RandomDisk>(spec);
}

PlacementSpec with_relay_count(PlacementSpec spec, int m) {
  std::visit([m](auto& s) { s.m = m; }, spec);
  return spec;
}

PlacementSpec with_span(PlacementSpec spec, DistanceMm d) {
  std::visit([d](auto& s) { s.d = d; }, spec);
  return spec;
}

Topology place(const PlacementSpec& spec) {
  validate(spec);
  if (const auto* va = std::get_if<VerticalAngular>(&spec)) {
    return fan_topology(va->d.mm(), va->x_frac * va->d.mm(), va->m, va->spacing_deg);
  }
  if (const auto* vo = std::get_if<VerticalOffset>(&spec)) {
    return fan_topology(vo->d.mm(), vo->x_offset.mm(), vo->m, vo->spacing_deg);
  }
  throw std::invalid_argument("random placement requires place_random with a random stream");
}

Topology place_random(const RandomDisk& spec, const TrialRng& rng) {
  validate(PlacementSpec{spec});
  const double radius = disk_radius(spec);
  const double cx = spec.d.mm() / 2.0;

  Topology t;
  t.tx = {0.0, 0.0};
  t.rx = {spec.d.mm(), 0.0};
  t.relays.reserve(static_cast<std::size_t>(spec.m));
  for (int k = 0; k < spec.m; ++k) {
    auto stream = rng.stream(kPlacementSubstreamBase + static_cast<std::uint32_t>(k));
    // r = R*sqrt(u) makes the density uniform over the disk area.
    const double r = radius * std::sqrt(stream.next_uniform());
    const double phi = 2.0 * std::numbers::pi * stream.next_uniform();
    t.relays.push_back({cx + r * std::cos(phi), r * std::sin(phi)});
  }
  return t;
}

std::vector<HopPair> hop_distances(const Topology& t) {
  std::vector<HopPair> hops;
  hops.reserve(t.relays.size());
  for (const auto& relay : t.relays) {
    hops.push_back({std::hypot(relay.x_mm - t.tx.x_mm, relay.y_mm - t.tx.y_mm),
                    std::hypot(t.rx.x_mm - relay.x_mm, t.rx.y_mm - relay.y_mm)});
  }
  return hops;
}

}  // namespace nanorelay
