#include "hpt/percolation.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "hpt/explorer.hpp"

namespace hpt {

void require_supercritical(const ModelParams& params) {
  if (!params.supercritical()) {
    throw std::domain_error(
        "percolation: alpha <= 2/3 has p_c = 1 (every boundary cutset is "
        "eventually swallowed); threshold exploration only makes sense for "
        "supercritical alpha > 2/3");
  }
}

std::int64_t cluster_increment(const StepLaw& law, double p, RngStream& rng) {
  const std::int64_t y = law.sample_y(rng);
  if (y == 0) return rng.bernoulli(p) ? 1 : 0;
  return rng.bernoulli(0.5) ? -y : 0;  // (R, i) halves the side coin
}

ClusterWalkResult root_cluster_walk(const StepLaw& law, double p, RngStream& rng,
                                    std::int64_t cap) {
  require_supercritical(law.params());
  ClusterWalkResult res;
  std::int64_t b = 1;
  // safety valve for near-critical p; a walk alive this long counts as surviving
  constexpr std::int64_t kMaxSteps = 50'000'000;
  while (b > 0 && b < cap && res.steps < kMaxSteps) {
    b += cluster_increment(law, p, rng);
    ++res.steps;
  }
  res.survived = b > 0;
  return res;
}

InterfaceResult interface_walk(const StepLaw& law, double p, RngStream& rng,
                               std::int64_t cap, std::int64_t w0, std::int64_t b0,
                               std::int64_t max_steps) {
  require_supercritical(law.params());
  InterfaceResult res;
  PercFrontier& f = res.frontier;
  f.white_len = w0;
  f.black_len = b0;
  f.p = p;
  while (f.step_count < max_steps) {
    if (f.white_len > cap && f.black_len > cap) {
      f.outcome = InterfaceOutcome::BothExceededCap;
      res.infinite = true;
      return res;
    }
    ++f.step_count;
    const std::int64_t y = law.sample_y(rng);
    if (y == 0) {
      if (rng.bernoulli(p)) ++f.black_len; else ++f.white_len;
      continue;
    }
    if (rng.bernoulli(0.5)) {
      // (R, i): eats into the black segment
      if (y < f.black_len) {
        f.black_len -= y;
        continue;
      }
      // segment wiped; the apex is a free vertex whose color decides
      if (rng.bernoulli(p)) {
        f.black_len = 1;
        continue;
      }
      // sealed off by white: refill the boundary rightwards until black
      f.white_len += 1 + (p > 0.0 ? rng.geometric_failures(p) : 0);
      f.black_len = 1;
      f.outcome = InterfaceOutcome::BlackDied;
      return res;
    }
    // (L, i): eats into the white segment
    if (y < f.white_len) {
      f.white_len -= y;
      continue;
    }
    if (rng.bernoulli(1.0 - p)) {
      f.white_len = 1;
      continue;
    }
    f.black_len += 1 + (p < 1.0 ? rng.geometric_failures(1.0 - p) : 0);
    f.white_len = 1;
    f.outcome = InterfaceOutcome::WhiteDied;
    return res;
  }
  f.outcome = InterfaceOutcome::CapSteps;
  return res;
}

PcEstimate estimate_pc(const StepLaw& law, RngStream& rng, std::int64_t trials,
                       std::int64_t cap, double threshold) {
  require_supercritical(law.params());
  const auto survival = [&](double p) {
    std::int64_t hits = 0;
    for (std::int64_t t = 0; t < trials; ++t) {
      if (root_cluster_walk(law, p, rng, cap).survived) ++hits;
    }
    return static_cast<double>(hits) / static_cast<double>(trials);
  };
  double lo = 0.0, hi = 1.0;
  double s = 0.0;
  while (hi - lo > 0.01) {
    const double mid = 0.5 * (lo + hi);
    s = survival(mid);
    if (s >= threshold) hi = mid; else lo = mid;
  }
  PcEstimate out;
  out.p_c = 0.5 * (lo + hi);
  out.half_width = 0.5 * (hi - lo);
  out.survival_at_pc = s;
  out.stderr_survival = std::sqrt(std::max(s * (1.0 - s), 1e-12) /
                                  static_cast<double>(trials));
  return out;
}

DensityEstimate interface_density(const StepLaw& law, double p, RngStream& rng,
                                  std::int64_t k, std::int64_t replicas,
                                  std::int64_t cap) {
  require_supercritical(law.params());
  DensityEstimate out;
  out.replicas = replicas;

  // estimator (a): the root edge under i.i.d. colors
  std::int64_t infinite_roots = 0;
  for (std::int64_t t = 0; t < replicas; ++t) {
    const bool left_black = rng.bernoulli(p);
    const bool right_black = rng.bernoulli(p);
    if (left_black == right_black) continue;  // no interface crosses this edge
    // reflection symmetry reduces black|white edges to white|black ones
    const double q = left_black ? 1.0 - p : p;
    // initial segments are the full monochromatic runs of the i.i.d. coloring
    const std::int64_t w0 =
        1 + static_cast<std::int64_t>(rng.geometric_failures(q));
    const std::int64_t b0 =
        1 + static_cast<std::int64_t>(rng.geometric_failures(1.0 - q));
    if (interface_walk(law, q, rng, cap, w0, b0).infinite) ++infinite_roots;
  }
  out.rho_hat = 0.5 * static_cast<double>(infinite_roots) / static_cast<double>(replicas);

  // estimator (b): every bichromatic edge along a stretch of length k
  std::int64_t total_edges = 0;
  std::int64_t total_w_inf = 0;
  std::int64_t density_reps = std::max<std::int64_t>(1, replicas / std::max<std::int64_t>(k, 1));
  for (std::int64_t rep = 0; rep < density_reps; ++rep) {
    std::vector<char> color(static_cast<std::size_t>(k) + 1);
    for (auto& c : color) c = rng.bernoulli(p) ? 1 : 0;
    std::vector<char> orientation;  // 1 when white sits left of the interface
    for (std::int64_t e = 0; e < k; ++e) {
      const bool lb = color[static_cast<std::size_t>(e)] != 0;
      const bool rb = color[static_cast<std::size_t>(e) + 1] != 0;
      if (lb == rb) continue;
      // segment lengths adjacent to the junction from the sampled stretch
      std::int64_t left_run = 1;
      for (std::int64_t j = e - 1; j >= 0 && (color[static_cast<std::size_t>(j)] != 0) == lb; --j)
        ++left_run;
      std::int64_t right_run = 1;
      for (std::int64_t j = e + 2; j <= k && (color[static_cast<std::size_t>(j)] != 0) == rb; ++j)
        ++right_run;
      const double q = lb ? 1.0 - p : p;
      const std::int64_t w0 = left_run, b0 = right_run;
      if (interface_walk(law, q, rng, cap, w0, b0).infinite) {
        ++total_edges;
        orientation.push_back(lb ? 0 : 1);
      }
    }
    // infinite clusters alternate along the boundary between consecutive
    // infinite interfaces: W + B = E + 1 and the counts differ by at most 1
    const auto e_cnt = static_cast<std::int64_t>(orientation.size());
    std::int64_t w_inf;
    if (e_cnt == 0) {
      w_inf = p < 0.5 ? 1 : 0;  // single infinite cluster, majority-colored
    } else {
      const std::int64_t total_clusters = e_cnt + 1;
      w_inf = orientation.front() ? (total_clusters + 1) / 2 : total_clusters / 2;
    }
    const std::int64_t b_inf = e_cnt == 0 ? 1 - w_inf : e_cnt + 1 - w_inf;
    out.max_wb_gap = std::max(out.max_wb_gap, std::abs(w_inf - b_inf));
    total_w_inf += w_inf;
  }
  out.ek_over_k = static_cast<double>(total_edges) /
                  static_cast<double>(density_reps * std::max<std::int64_t>(k, 1));
  out.wk_inf_over_k = static_cast<double>(total_w_inf) /
                      static_cast<double>(density_reps * std::max<std::int64_t>(k, 1));
  return out;
}

namespace {

struct UnionFind {
  std::vector<std::int32_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  std::int32_t find(std::int32_t x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] =
          parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  }
  void unite(std::int32_t a, std::int32_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[static_cast<std::size_t>(b)] = a;
  }
};

}  // namespace

std::vector<ReachPoint> full_map_percolation_check(const ModelParams& params,
                                                   const std::vector<double>& p_grid,
                                                   RngStream& rng, std::int64_t R,
                                                   std::int64_t replicas,
                                                   std::int64_t walk_cap,
                                                   std::int64_t max_volume) {
  require_supercritical(params);
  const PeelSampler sampler(params);
  std::vector<std::int64_t> reach(p_grid.size(), 0);
  std::vector<std::int64_t> survive(p_grid.size(), 0);
  std::int64_t usable = 0;

  for (std::int64_t rep = 0; rep < replicas; ++rep) {
    ExploreOptions opts;
    opts.radius = R;
    opts.with_geometry = true;
    opts.max_volume = max_volume;
    ExploreResult er = explore(sampler, opts, rng);
    if (er.trace.truncated || !er.map) {
      throw std::runtime_error("full_map_percolation_check: volume cap hit, lower R");
    }
    const HalfPlaneMap& map = *er.map;
    const auto n = static_cast<std::size_t>(map.vertex_count());
    // monotone coupling: one uniform per vertex shared across the p grid
    std::vector<double> u(n);
    for (auto& x : u) x = rng.next_double();
    std::vector<char> on_frontier(n, 0);
    for (const auto& node : map.frontier()) on_frontier[static_cast<std::size_t>(node.v)] = 1;
    ++usable;
    for (std::size_t ip = 0; ip < p_grid.size(); ++ip) {
      const double p = p_grid[ip];
      UnionFind uf(n);
      const auto black = [&](std::int32_t v) {
        return v == map.root_vertex() || u[static_cast<std::size_t>(v)] < p;
      };
      for (const auto& [a, b] : map.edges()) {
        if (black(a) && black(b)) uf.unite(a, b);
      }
      const std::int32_t root_cluster = uf.find(map.root_vertex());
      bool reached = false;
      for (std::size_t v = 0; v < n && !reached; ++v) {
        if (on_frontier[v] && black(static_cast<std::int32_t>(v)) &&
            uf.find(static_cast<std::int32_t>(v)) == root_cluster) {
          reached = true;
        }
      }
      if (reached) ++reach[ip];
    }
  }

  const StepLaw law(params);
  for (std::size_t ip = 0; ip < p_grid.size(); ++ip) {
    for (std::int64_t t = 0; t < replicas; ++t) {
      if (root_cluster_walk(law, p_grid[ip], rng, walk_cap).survived) ++survive[ip];
    }
  }

  std::vector<ReachPoint> out(p_grid.size());
  for (std::size_t ip = 0; ip < p_grid.size(); ++ip) {
    out[ip].p = p_grid[ip];
    out[ip].reach_freq = static_cast<double>(reach[ip]) / static_cast<double>(std::max<std::int64_t>(usable, 1));
    out[ip].walk_survival = static_cast<double>(survive[ip]) / static_cast<double>(replicas);
  }
  return out;
}

}  // namespace hpt
