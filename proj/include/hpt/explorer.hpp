#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "hpt/map.hpp"
#include "hpt/rng.hpp"
#include "hpt/sampler.hpp"

namespace hpt {

// Output of the ball-growing exploration: one record per completed radius.
struct RadiusRecord {
  std::int64_t r;
  std::int64_t tau;        // peeling steps until the hull of B_r is revealed
  std::int64_t boundary;   // X_{tau_r}: revealed frontier arc length
  std::int64_t volume;     // V_{tau_r}: vertices revealed so far
  std::int64_t delta_tau;  // tau_r - tau_{r-1}
};

struct HullTrace {
  std::vector<RadiusRecord> radii;
  bool truncated = false;            // a resource cap cut the run short
  std::int64_t steps = 0;            // peeling steps executed
  std::int64_t law_truncations = 0;  // swallow sizes capped at the table edge
  std::vector<std::int64_t> x_series;  // per-step counting boundary X_n (X_0 = 2)
  std::vector<std::int64_t> v_series;  // per-step V_n when recorded
};

struct ExploreOptions {
  std::int64_t radius = 1;
  bool with_geometry = false;  // keep faces/edges (needed for walks, BFS checks)
  bool fill_geometry = true;   // triangulate swallowed holes (geometry mode only)
  bool record_steps = false;   // keep full X_n, V_n series
  std::int64_t max_steps = std::numeric_limits<std::int64_t>::max();
  std::int64_t max_volume = std::numeric_limits<std::int64_t>::max();
};

struct ExploreResult {
  HullTrace trace;
  std::optional<HalfPlaneMap> map;  // present when with_geometry
};

// Grows the ball around the root radius by radius: marks the current hull
// boundary, then repeatedly peels at the edge right of the leftmost marked
// vertex until every mark has been swallowed. After round r the revealed
// region is the hull of B_r and the frontier is its boundary.
ExploreResult explore(const PeelSampler& sampler, const ExploreOptions& opts,
                      RngStream& rng);

// Nash-Williams partial sums: resistance from the root to the boundary of
// B_R is at least sum_k 1 / (2 delta_tau_k), since each peeling step of
// round k adds at most two edges to the cutset between the consecutive
// hull boundaries. Entry k is the partial sum through radius k+1.
std::vector<double> resistance_lower_bound(const HullTrace& trace);

// Slope estimate of tau_r, discarding the first half as burn-in.
double stationary_gamma(const HullTrace& trace);

}  // namespace hpt
