#include "hpt/walker.hpp"

#include <stdexcept>

namespace hpt {

namespace {

std::vector<char> frontier_mask(const HalfPlaneMap& map) {
  std::vector<char> mask(static_cast<std::size_t>(map.vertex_count()), 0);
  for (const auto& node : map.frontier()) mask[static_cast<std::size_t>(node.v)] = 1;
  return mask;
}

}  // namespace

WalkRecord run_srw(const HalfPlaneMap& map, std::int64_t steps, RngStream& rng,
                   BoundaryMode mode) {
  if (!map.track_geometry()) throw std::logic_error("run_srw: geometry not tracked");
  const auto& adj = map.adjacency();
  const std::vector<std::int32_t> dist = map.distances_from_root();
  const std::vector<char> stop = frontier_mask(map);

  WalkRecord rec;
  std::int32_t pos = map.root_vertex();
  std::int64_t next_dyadic = 1;
  for (std::int64_t t = 1; t <= steps; ++t) {
    const auto& nbrs = adj[static_cast<std::size_t>(pos)];
    if (nbrs.empty()) break;  // isolated root on an unexplored map
    pos = nbrs[static_cast<std::size_t>(
                   rng.next_below(static_cast<std::uint64_t>(nbrs.size())))]
              .first;
    rec.steps = t;
    if (pos == map.root_vertex()) ++rec.returns_to_root;
    if (t == next_dyadic) {
      rec.dyadic_times.push_back(t);
      rec.displacement.push_back(dist[static_cast<std::size_t>(pos)]);
      next_dyadic *= 2;
    }
    if (stop[static_cast<std::size_t>(pos)]) {
      rec.hit_frontier = true;
      break;
    }
    if (mode == BoundaryMode::Absorb && pos != map.root_vertex() &&
        map.on_original_boundary(pos)) {
      break;
    }
  }
  // always record the stopping position, wherever the walk ended
  if (rec.steps > 0 && (rec.dyadic_times.empty() || rec.dyadic_times.back() != rec.steps)) {
    rec.dyadic_times.push_back(rec.steps);
    rec.displacement.push_back(dist[static_cast<std::size_t>(pos)]);
  }
  return rec;
}

ReturnSeries return_probability(const HalfPlaneMap& map, std::int64_t n_max,
                                std::int64_t walks, RngStream& rng,
                                BoundaryMode mode) {
  if (!map.track_geometry()) throw std::logic_error("return_probability: geometry not tracked");
  const auto& adj = map.adjacency();
  const std::vector<char> stop = frontier_mask(map);

  ReturnSeries out;
  out.walks = walks;
  std::vector<std::int64_t> at_root(static_cast<std::size_t>(n_max) + 1, 0);
  std::vector<std::int64_t> alive(static_cast<std::size_t>(n_max) + 1, 0);
  at_root[0] = walks;
  alive[0] = walks;
  for (std::int64_t wlk = 0; wlk < walks; ++wlk) {
    std::int32_t pos = map.root_vertex();
    for (std::int64_t t = 1; t <= n_max; ++t) {
      const auto& nbrs = adj[static_cast<std::size_t>(pos)];
      if (nbrs.empty()) break;
      pos = nbrs[static_cast<std::size_t>(
                     rng.next_below(static_cast<std::uint64_t>(nbrs.size())))]
                .first;
      ++alive[static_cast<std::size_t>(t)];
      if (pos == map.root_vertex()) ++at_root[static_cast<std::size_t>(t)];
      if (stop[static_cast<std::size_t>(pos)]) break;
      if (mode == BoundaryMode::Absorb && pos != map.root_vertex() &&
          map.on_original_boundary(pos)) {
        break;
      }
    }
  }
  out.p_hat.resize(at_root.size());
  out.alive.resize(alive.size());
  for (std::size_t t = 0; t < at_root.size(); ++t) {
    out.p_hat[t] = static_cast<double>(at_root[t]) / static_cast<double>(walks);
    out.alive[t] = static_cast<double>(alive[t]) / static_cast<double>(walks);
  }
  return out;
}

}  // namespace hpt
