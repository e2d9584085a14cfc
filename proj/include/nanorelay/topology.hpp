// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "nanorelay/quantities.hpp"
#include "nanorelay/rng.hpp"

namespace nanorelay {

struct Point2D {
  double x_mm = 0.0;
  double y_mm = 0.0;
};

/// Node geometry: Tx at the origin, Rx on the positive x axis, relays
/// anywhere in the plane.
struct Topology {
  Point2D tx;
  Point2D rx;
  std::vector<Point2D> relays;
};

struct HopPair {
  double d_sr_mm = 0.0;
  double d_rd_mm = 0.0;
};

/// Relays on the vertical line x = x_frac*d, fanned so adjacent relays
/// subtend `spacing_deg` at the Tx, symmetric about the Tx-Rx axis:
/// theta_k = (k - (M-1)/2)*spacing, y_k = x*tan(theta_k).
struct VerticalAngular {
  DistanceMm d{0.2};
  int m = 1;
  double spacing_deg = 30.0;
  double x_frac = 0.5;
};

/// Same fan anchored at the Tx, but at an absolute horizontal offset.
struct VerticalOffset {
  DistanceMm d{0.2};
  int m = 1;
  double spacing_deg = 30.0;
  DistanceMm x_offset{0.1};
};

/// Relays drawn independently and uniformly from the disk of the given
/// radius (default d/2) centered on the Tx-Rx midpoint. redraw_per_trial
/// controls whether the Monte Carlo engine redraws positions every trial
/// or freezes one draw for the whole run.
struct RandomDisk {
  DistanceMm d{0.2};
  int m = 1;
  std::optional<DistanceMm> radius;  // defaults to d/2 at realization
  bool redraw_per_trial = true;
};

using PlacementSpec = std::variant<VerticalAngular, VerticalOffset, RandomDisk>;

/// Throws std::invalid_argument if the spec violates its invariants
/// (m >= 1, d > 0, 0 < x_frac < 1, 0 <= x_offset <= d, radius > 0, all
/// fan angles strictly inside (-90, 90) degrees).
void validate(const PlacementSpec& spec);

int relay_count(const PlacementSpec& spec);
DistanceMm span(const PlacementSpec& spec);
std::string placement_label(const PlacementSpec& spec);
bool is_random(const PlacementSpec& spec);

PlacementSpec with_relay_count(PlacementSpec spec, int m);
PlacementSpec with_span(PlacementSpec spec, DistanceMm d);

/// Realizes a deterministic placement. Throws on RandomDisk; use
/// place_random for that variant. Identical specs produce bit-identical
/// topologies.
Topology place(const PlacementSpec& spec);

/// Realizes a RandomDisk placement from the trial's placement substreams
/// (relay k draws from substream kPlacementSubstreamBase + k).
Topology place_random(const RandomDisk& spec, const TrialRng& rng);

/// Per-relay Euclidean hop lengths (Tx->relay, relay->Rx), in relay order.
std::vector<HopPair> hop_distances(const Topology& t);

}  // namespace nanorelay
