#pragma once

#include <cstdint>
#include <vector>

#include "hpt/map.hpp"
#include "hpt/rng.hpp"

namespace hpt {

enum class BoundaryMode : std::uint8_t {
  Ordinary,  // original-boundary vertices are regular vertices (default)
  Absorb,    // walk also stops on the original half-plane boundary
};

struct WalkRecord {
  std::uint64_t seed = 0;
  std::int64_t steps = 0;  // steps actually taken (may stop early at the frontier)
  std::vector<std::int64_t> dyadic_times;
  std::vector<std::int64_t> displacement;  // d(root, X_t) at the dyadic times
  std::int64_t returns_to_root = 0;
  bool hit_frontier = false;
};

// Simple random walk from the root: a uniformly chosen incident edge per
// step, so multi-edges carry their multiplicity. The frontier acts as an
// absorbing screen; statistics are censored at the first hit.
WalkRecord run_srw(const HalfPlaneMap& map, std::int64_t steps, RngStream& rng,
                   BoundaryMode mode = BoundaryMode::Ordinary);

struct ReturnSeries {
  std::vector<double> p_hat;        // p_hat[t]: fraction of walks at the root at time t
  std::vector<double> alive;        // fraction not yet absorbed at time t
  std::int64_t walks = 0;
};

// Empirical return probabilities up to n_max (all times; even/odd split is
// left to the consumer since triangulations have odd cycles).
ReturnSeries return_probability(const HalfPlaneMap& map, std::int64_t n_max,
                                std::int64_t walks, RngStream& rng,
                                BoundaryMode mode = BoundaryMode::Ordinary);

}  // namespace hpt
