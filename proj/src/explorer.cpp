#include "hpt/explorer.hpp"

#include <stdexcept>

namespace hpt {

ExploreResult explore(const PeelSampler& sampler, const ExploreOptions& opts,
                      RngStream& rng) {
  if (opts.radius < 1) throw std::domain_error("explore: radius >= 1");
  ExploreResult out;
  HalfPlaneMap map(opts.with_geometry);
  HullTrace& trace = out.trace;

  auto& frontier = map.frontier();
  frontier.begin()->marked = true;  // ball of radius 0 is the root
  std::int64_t marks = 1;
  auto lm = frontier.begin();  // leftmost marked vertex
  std::int64_t prev_tau = 0;

  const bool fill = opts.with_geometry && opts.fill_geometry;
  bool capped = false;
  for (std::int64_t r = 1; r <= opts.radius && !capped; ++r) {
    while (marks > 0) {
      if (trace.steps >= opts.max_steps || map.volume() >= opts.max_volume) {
        capped = true;
        break;
      }
      // with geometry fills, the hole content is drawn by the free-law
      // filler itself, so only the step shape is sampled here
      const PeelEvent ev = fill ? sampler.sample_step_shape(rng) : sampler.sample_step(rng);
      if (ev.truncated) ++trace.law_truncations;
      const HalfPlaneMap::StepResult res =
          map.apply_step(lm, ev, rng, fill, fill ? &sampler.free_law() : nullptr);
      ++trace.steps;
      marks -= res.marks_removed;
      if (opts.record_steps) {
        trace.x_series.push_back(map.counting_boundary());
        trace.v_series.push_back(map.volume());
      }
      if (ev.kind == PeelKind::Swallow && ev.side == Side::Left) {
        // the leftmost mark was swallowed; the next one is to the right
        lm = res.left;
        if (marks > 0) {
          while (!lm->marked) ++lm;
        }
      }
    }
    if (capped) {
      trace.truncated = true;
      break;
    }
    const std::int64_t tau = map.step_count();
    trace.radii.push_back({r, tau, map.boundary_length(), map.volume(), tau - prev_tau});
    prev_tau = tau;
    for (auto& node : frontier) node.marked = true;
    marks = map.boundary_length();
    lm = frontier.begin();
  }

  if (opts.with_geometry) out.map.emplace(std::move(map));
  return out;
}

std::vector<double> resistance_lower_bound(const HullTrace& trace) {
  std::vector<double> sums;
  sums.reserve(trace.radii.size());
  double acc = 0.0;
  for (const RadiusRecord& rec : trace.radii) {
    if (rec.delta_tau > 0) acc += 0.5 / static_cast<double>(rec.delta_tau);
    sums.push_back(acc);
  }
  return sums;
}

double stationary_gamma(const HullTrace& trace) {
  if (trace.radii.size() < 2) {
    throw std::domain_error("stationary_gamma: need at least two completed radii");
  }
  const std::size_t half = trace.radii.size() / 2;
  const RadiusRecord& a = trace.radii[half - (half > 0 ? 1 : 0)];
  const RadiusRecord& b = trace.radii.back();
  if (b.r == a.r) throw std::domain_error("stationary_gamma: degenerate trace");
  return static_cast<double>(b.tau - a.tau) / static_cast<double>(b.r - a.r);
}

}  // namespace hpt
