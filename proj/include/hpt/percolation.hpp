#pragma once

#include <cstdint>
#include <vector>

#include "hpt/params.hpp"
#include "hpt/rng.hpp"
#include "hpt/sampler.hpp"
#include "hpt/step_law.hpp"

namespace hpt {

enum class InterfaceOutcome : std::uint8_t {
  BlackDied,        // black segment swallowed and sealed off by white
  WhiteDied,        // white segment swallowed and sealed off by black
  BothExceededCap,  // min(W, B) grew past the cap: declared infinite
  CapSteps,         // step budget exhausted undecided
};

// Boundary-only percolation state: a finite contiguous white segment
// followed by a finite contiguous black segment, free vertices elsewhere.
struct PercFrontier {
  std::int64_t white_len = 1;
  std::int64_t black_len = 1;
  double p = 0.5;
  std::int64_t step_count = 0;
  InterfaceOutcome outcome = InterfaceOutcome::CapSteps;
};

struct ClusterWalkResult {
  bool survived = false;
  std::int64_t steps = 0;
};

// Throws for alpha <= 2/3: the single-edge cutsets force p_c = 1 there,
// so threshold exploration is refused rather than silently degenerate.
void require_supercritical(const ModelParams& params);

// Peeling walk of the black boundary segment B_k attached to the root:
// +1 w.p. alpha p (alpha-step revealing black), -i w.p. p_i / 2 on (R, i),
// 0 otherwise. Absorbed at B_k <= 0; survives when B_k reaches cap.
ClusterWalkResult root_cluster_walk(const StepLaw& law, double p, RngStream& rng,
                                    std::int64_t cap);

// One step-increment draw of the variable B above (for drift checks).
std::int64_t cluster_increment(const StepLaw& law, double p, RngStream& rng);

struct InterfaceResult {
  bool infinite = false;
  PercFrontier frontier;
};

// Joint (W_k, B_k) evolution at a black/white junction. Peels the junction
// edge; an alpha-step grows one segment by the revealed color; a swallow
// shortens a segment, and when it wipes a whole segment the apex color
// decides: same color keeps the interface alive with a fresh unit segment,
// opposite color seals the interface (dead) after the geometric refill of
// the opposite segment. Declared infinite when min(W, B) > cap.
InterfaceResult interface_walk(const StepLaw& law, double p, RngStream& rng,
                               std::int64_t cap,
                               std::int64_t w0 = 1, std::int64_t b0 = 1,
                               std::int64_t max_steps = 100'000'000);

struct PcEstimate {
  double p_c = 0.0;
  double half_width = 0.0;       // bisection bracket half-width
  double survival_at_pc = 0.0;   // empirical survival at the returned p
  double stderr_survival = 0.0;
};

// Bisects p for the survival frequency of root_cluster_walk crossing
// `threshold`, refined to +-0.005.
PcEstimate estimate_pc(const StepLaw& law, RngStream& rng, std::int64_t trials,
                       std::int64_t cap, double threshold = 0.02);

struct DensityEstimate {
  double rho_hat = 0.0;         // (frequency of infinite root interfaces) / 2
  double ek_over_k = 0.0;       // infinite-interface edges per unit boundary
  double wk_inf_over_k = 0.0;   // infinite white clusters per unit boundary
  std::int64_t max_wb_gap = 0;  // max |W_k_inf - B_k_inf| over replicas
  std::int64_t replicas = 0;
};

// Two estimators of the interface density rho along a boundary stretch of
// length k, under i.i.d. boundary colors.
DensityEstimate interface_density(const StepLaw& law, double p, RngStream& rng,
                                  std::int64_t k, std::int64_t replicas,
                                  std::int64_t cap = 1000);

struct ReachPoint {
  double p = 0.0;
  double reach_freq = 0.0;      // union-find: root cluster touches the frontier
  double walk_survival = 0.0;   // boundary walk survival at the same p
};

// Full-map cross-check: explores hulls of radius R with geometry, colors
// vertices i.i.d. (root forced black), and labels the root cluster by
// union-find. Compared against the boundary-only walk on a p grid.
std::vector<ReachPoint> full_map_percolation_check(const ModelParams& params,
                                                   const std::vector<double>& p_grid,
                                                   RngStream& rng, std::int64_t R,
                                                   std::int64_t replicas,
                                                   std::int64_t walk_cap = 10'000,
                                                   std::int64_t max_volume = 4'000'000);

}  // namespace hpt
