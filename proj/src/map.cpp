#include "hpt/map.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <cstdio>
#include <deque>
#include <istream>
#include <ostream>
#include <queue>
#include <sstream>
#include <stdexcept>
#include <string>

namespace hpt {

HalfPlaneMap::HalfPlaneMap(bool track_geometry) : track_geometry_(track_geometry) {
  const std::int32_t root = new_vertex(kRoot);
  frontier_.push_back(Node{root, -1, false});
  frontier_size_ = 1;
}

std::int32_t HalfPlaneMap::new_vertex(std::uint8_t boundary_flag) {
  const auto id = static_cast<std::int32_t>(vertex_flags_.size());
  vertex_flags_.push_back(boundary_flag);
  if (boundary_flag != kInterior) ++boundary_vertex_count_;
  vertex_step_.push_back(step_);
  return id;
}

std::int32_t HalfPlaneMap::new_edge_handle(std::int32_t u, std::int32_t v) {
  const auto h = static_cast<std::int32_t>(handles_.size());
  handles_.push_back(static_cast<std::int32_t>(edges_.size()));
  edges_.emplace_back(u, v);
  return h;
}

std::int32_t HalfPlaneMap::new_pending_handle() {
  const auto h = static_cast<std::int32_t>(handles_.size());
  handles_.push_back(-1);
  return h;
}

std::int32_t HalfPlaneMap::materialize(std::int32_t handle, std::int32_t u, std::int32_t v) {
  auto& slot = handles_[static_cast<std::size_t>(handle)];
  assert(slot == -1);
  slot = static_cast<std::int32_t>(edges_.size());
  edges_.emplace_back(u, v);
  return slot;
}

void HalfPlaneMap::glue(std::int32_t pending, std::int32_t real) {
  auto& slot = handles_[static_cast<std::size_t>(pending)];
  assert(slot == -1);
  slot = resolve(real);
  assert(slot >= 0);
}

void HalfPlaneMap::add_face(std::int32_t a, std::int32_t b, std::int32_t c,
                            std::int32_t ha, std::int32_t hb, std::int32_t hc) {
  faces_.push_back({a, b, c});
  face_edges_.push_back({ha, hb, hc});
  face_step_.push_back(step_);
}

void HalfPlaneMap::invalidate_caches() {
  adjacency_valid_ = false;
  adjacency_.clear();
}

HalfPlaneMap::FIter HalfPlaneMap::ensure_next(FIter it) {
  auto nxt = std::next(it);
  if (nxt != frontier_.end()) return nxt;
  const std::int32_t v = new_vertex(kRightBoundary);
  Node node{v, -1, false};
  if (track_geometry_) it->edge_to_next = new_edge_handle(it->v, v);
  ++frontier_size_;
  return frontier_.insert(frontier_.end(), node);
}

HalfPlaneMap::FIter HalfPlaneMap::ensure_prev(FIter it) {
  if (it != frontier_.begin()) return std::prev(it);
  const std::int32_t v = new_vertex(kLeftBoundary);
  Node node{v, -1, false};
  if (track_geometry_) node.edge_to_next = new_edge_handle(v, it->v);
  ++frontier_size_;
  frontier_.push_front(node);
  return frontier_.begin();
}

namespace {

// Conditioned free triangulation of a hole: recursively places the triangle
// adjacent to the root edge, with branch weights given by ratios of the
// triangulation counts phi. The root edge of every sub-polygon is a pending
// handle; all other boundary edges are already real. An empty 2-gon is
// resolved by gluing its two sides into a single edge, which is what makes
// cut edges possible in the filled map.
struct FillPolygon {
  // Deques so a split can shrink the polygon into its larger part in place
  // (holes can have ~10^5 boundary vertices; copying the big side on every
  // split would be quadratic).
  std::deque<std::int32_t> v;  // boundary vertices in cyclic order
  std::deque<std::int32_t> h;  // h[i] joins v[i], v[i+1 mod m]; h.back() is the root
  std::int64_t n;              // internal vertices still to place
};

}  // namespace

class PolygonFiller {
 public:
  // With free_law set, the fill is drawn from the free Boltzmann law (poly.n
  // is ignored); otherwise it is conditioned to place exactly poly.n internal
  // vertices, with branch weights given by ratios of the counts phi.
  explicit PolygonFiller(HalfPlaneMap& map, const FreeLaw* free_law = nullptr)
      : map_(map), free_(free_law) {}

  void run(FillPolygon&& top, RngStream& rng) {
    std::vector<FillPolygon> stack;
    stack.push_back(std::move(top));
    while (!stack.empty()) {
      FillPolygon poly = std::move(stack.back());
      stack.pop_back();
      step(std::move(poly), stack, rng);
    }
  }

  // internal vertices placed so far (the realized hole size in free mode)
  std::int64_t placed() const { return placed_; }

 private:
  void step(FillPolygon&& poly, std::vector<FillPolygon>& stack, RngStream& rng) {
    if (free_ != nullptr) {
      free_step(std::move(poly), stack, rng);
      return;
    }
    const auto m = static_cast<std::int64_t>(poly.v.size());
    const std::int64_t n = poly.n;
    assert(m >= 2);
    if (m == 2 && n == 0) {
      map_.glue(poly.h[1], poly.h[0]);
      return;
    }
    double u = rng.next_double();
    bool take_apex = false;
    if (m == 2) {
      take_apex = true;  // phi_{n,2} = phi_{n-1,3}: the root triangle has an apex
    } else if (n >= 1) {
      const double apex_p = std::exp(log_phi(n - 1, m + 1) - log_phi(n, m));
      take_apex = u < apex_p;
      u -= apex_p;
    }
    if (take_apex) {
      apex(std::move(poly), stack);
      return;
    }
    split(std::move(poly), stack, u);
  }

  // Free-law step: apex with probability q Z_{m+1} / Z_m (a 2-gon is empty
  // with the complementary probability 1 / Z_2), split at d with weight
  // Z_{d+1} Z_{m-d} / Z_m. The split weights have 5/2-power tails from both
  // ends, so the alternating two-ended scan costs O(1) on average.
  void free_step(FillPolygon&& poly, std::vector<FillPolygon>& stack, RngStream& rng) {
    const auto m = static_cast<std::int64_t>(poly.v.size());
    assert(m >= 2);
    double u = rng.next_double();
    const double apex_p = free_->apex_prob(m);
    if (u < apex_p) {
      apex(std::move(poly), stack);
      return;
    }
    if (m == 2) {
      map_.glue(poly.h[1], poly.h[0]);
      return;
    }
    u -= apex_p;
    std::int64_t front = 1, back = m - 2;
    std::int64_t d = 1;
    double cum = 0.0;
    bool from_front = true;
    while (front <= back) {
      d = from_front ? front : back;
      cum += free_->split_prob(m, d);
      if (cum >= u) break;
      if (from_front) ++front; else --back;
      from_front = !from_front;
    }
    // on floating-point shortfall the last candidate scanned is used
    cut(std::move(poly), stack, d, /*j=*/0, /*n_minus_j=*/0);
  }

  void apex(FillPolygon&& poly, std::vector<FillPolygon>& stack) {
    ++placed_;
    map_.materialize(poly.h.back(), poly.v.back(), poly.v.front());
    const std::int32_t x = map_.new_vertex(HalfPlaneMap::kInterior);
    const std::int32_t back_edge = map_.new_edge_handle(poly.v.back(), x);
    const std::int32_t front_chord = map_.new_pending_handle();
    map_.add_face(poly.v.back(), poly.v.front(), x, poly.h.back(), front_chord, back_edge);
    FillPolygon child;
    child.v = std::move(poly.v);
    child.h = std::move(poly.h);
    child.h.back() = back_edge;  // replaces the now-materialized root
    child.v.push_back(x);
    child.h.push_back(front_chord);
    child.n = poly.n - 1;
    stack.push_back(std::move(child));
  }

  // Chooses the split (d, j) with weight phi(j, d+1) phi(n-j, m-d) / phi(n, m).
  // Both marginals have power-law tails from either end, so the mass
  // concentrates at the four corners of the (d, j) rectangle; cells are
  // scanned in shells of increasing corner distance, which terminates after
  // O(1) cells on average even for very large holes.
  void split(FillPolygon&& poly, std::vector<FillPolygon>& stack, double target) {
    const auto m = static_cast<std::int64_t>(poly.v.size());
    const std::int64_t n = poly.n;
    const double log_total = log_phi(n, m);
    const std::int64_t d_max = m - 2;  // d in [1, d_max]
    std::int64_t d = 1, j = 0;
    double cum = 0.0;
    bool found = false;
    const std::int64_t s_max = (d_max - 1) / 2 + n / 2;
    for (std::int64_t s = 0; s <= s_max && !found; ++s) {
      for (std::int64_t a = 0; a <= s && !found; ++a) {
        const std::int64_t b = s - a;
        const std::int64_t d1 = 1 + a, d2 = d_max - a;  // corner distance a in d
        if (d1 > d2) continue;
        const std::int64_t j1 = b, j2 = n - b;          // corner distance b in j
        if (j1 > j2) continue;
        const std::int64_t ds[2] = {d1, d2};
        const std::int64_t js[2] = {j1, j2};
        const int nd = d1 == d2 ? 1 : 2;
        const int nj = j1 == j2 ? 1 : 2;
        for (int di = 0; di < nd && !found; ++di) {
          for (int ji = 0; ji < nj && !found; ++ji) {
            d = ds[di];
            j = js[ji];
            cum += std::exp(log_phi(j, d + 1) + log_phi(n - j, m - d) - log_total);
            if (cum >= target) found = true;
          }
        }
      }
    }
    // on floating-point shortfall the last cell scanned is used
    cut(std::move(poly), stack, d, j, n - j);
  }

  // Places the root triangle with third vertex v[d], cutting the polygon in
  // two. j and n_minus_j are the internal-vertex budgets of the two parts
  // (ignored in free mode).
  void cut(FillPolygon&& poly, std::vector<FillPolygon>& stack, std::int64_t d,
           std::int64_t j, std::int64_t n_minus_j) {
    const auto m = static_cast<std::int64_t>(poly.v.size());
    map_.materialize(poly.h.back(), poly.v.back(), poly.v.front());
    const std::int32_t chord_a = map_.new_pending_handle();  // joins v[d], v[0]
    const std::int32_t chord_b = map_.new_pending_handle();  // joins v[m-1], v[d]
    map_.add_face(poly.v.back(), poly.v.front(), poly.v[static_cast<std::size_t>(d)],
                  poly.h.back(), chord_a, chord_b);
    if (d + 1 <= m - d) {
      // copy out the small left part; shrink poly into the right part
      FillPolygon a;
      a.v.assign(poly.v.begin(), poly.v.begin() + (d + 1));
      a.h.assign(poly.h.begin(), poly.h.begin() + d);
      a.h.push_back(chord_a);
      a.n = j;
      for (std::int64_t k = 0; k < d; ++k) {
        poly.v.pop_front();
        poly.h.pop_front();
      }
      poly.h.back() = chord_b;  // replaces the now-materialized root
      poly.n = n_minus_j;
      stack.push_back(std::move(a));
      stack.push_back(std::move(poly));
    } else {
      // copy out the small right part; shrink poly into the left part
      FillPolygon b;
      b.v.assign(poly.v.begin() + d, poly.v.end());
      b.h.assign(poly.h.begin() + d, poly.h.end() - 1);
      b.h.push_back(chord_b);
      b.n = n_minus_j;
      poly.v.erase(poly.v.begin() + (d + 1), poly.v.end());
      poly.h.erase(poly.h.begin() + d, poly.h.end());
      poly.h.push_back(chord_a);
      poly.n = j;
      stack.push_back(std::move(b));
      stack.push_back(std::move(poly));
    }
  }

  HalfPlaneMap& map_;
  const FreeLaw* free_;
  std::int64_t placed_ = 0;
};

HalfPlaneMap::StepResult HalfPlaneMap::apply_step(FIter at_edge, const PeelEvent& ev,
                                                  RngStream& rng, bool fill_geometry,
                                                  const FreeLaw* hole_law) {
  if (!track_geometry_) fill_geometry = false;
  ++step_;
  invalidate_caches();
  StepResult res;
  FIter u = at_edge;
  FIter w = ensure_next(u);

  if (ev.kind == PeelKind::AlphaStep) {
    const std::int32_t x = new_vertex(HalfPlaneMap::kInterior);
    Node node{x, -1, false};
    if (track_geometry_) {
      const std::int32_t hxw = new_edge_handle(x, w->v);
      const std::int32_t hux = new_edge_handle(u->v, x);
      add_face(u->v, w->v, x, u->edge_to_next, hxw, hux);
      u->edge_to_next = hux;
      node.edge_to_next = hxw;
    }
    frontier_.insert(w, node);
    ++frontier_size_;
    res.left = u;
    return res;
  }

  const std::int64_t i = ev.i;
  assert(i >= 1);
  // realized hole size; a free-law fill draws its own internal-vertex count
  std::int64_t hole_internal = hole_law != nullptr && fill_geometry
                                   ? 0
                                   : ev.hole_internal_count;
  if (ev.side == Side::Right) {
    if (track_geometry_) {
      // walk to the apex, revealing boundary vertices as needed
      std::vector<FIter> s;
      s.reserve(static_cast<std::size_t>(i) + 1);
      s.push_back(w);
      for (std::int64_t k = 1; k <= i; ++k) s.push_back(ensure_next(s.back()));
      const FIter apex = s.back();
      const std::int32_t chord = new_pending_handle();
      const std::int32_t h_new = new_edge_handle(u->v, apex->v);
      add_face(u->v, w->v, apex->v, u->edge_to_next, chord, h_new);
      FillPolygon hole;
      for (const FIter& it : s) hole.v.push_back(it->v);
      for (std::int64_t k = 0; k < i; ++k) hole.h.push_back(s[static_cast<std::size_t>(k)]->edge_to_next);
      hole.h.push_back(chord);
      hole.n = ev.hole_internal_count;
      if (fill_geometry) {
        PolygonFiller filler(*this, hole_law);
        filler.run(std::move(hole), rng);
        hole_internal = filler.placed();
      } else {
        materialize(chord, w->v, apex->v);
      }
      for (std::int64_t k = 0; k < i; ++k) {
        if (s[static_cast<std::size_t>(k)]->marked) ++res.marks_removed;
        frontier_.erase(s[static_cast<std::size_t>(k)]);
        ++res.frontier_removed;
      }
      frontier_size_ -= i;
      u->edge_to_next = h_new;
    } else {
      std::int64_t removed = 0;
      FIter it = w;
      while (removed < i && it != frontier_.end()) {
        if (it->marked) ++res.marks_removed;
        it = frontier_.erase(it);
        ++removed;
      }
      res.frontier_removed = removed;
      res.absorbed_unrevealed = i - removed;
      absorbed_total_ += res.absorbed_unrevealed;
      frontier_size_ -= removed;
      if (it == frontier_.end()) {
        // apex lies beyond the revealed arc
        const std::int32_t v = new_vertex(kRightBoundary);
        frontier_.push_back(Node{v, -1, false});
        ++frontier_size_;
      }
    }
    interior_ += i + hole_internal;
    res.left = u;
    return res;
  }

  // Left swallow: u and i-1 vertices to its left are swallowed
  if (track_geometry_) {
    std::vector<FIter> t;
    t.reserve(static_cast<std::size_t>(i) + 1);
    t.push_back(u);
    for (std::int64_t k = 1; k <= i; ++k) t.push_back(ensure_prev(t.back()));
    const FIter apex = t.back();
    const std::int32_t peeled = u->edge_to_next;
    const std::int32_t chord = new_pending_handle();
    const std::int32_t h_new = new_edge_handle(apex->v, w->v);
    add_face(u->v, w->v, apex->v, peeled, h_new, chord);
    FillPolygon hole;
    for (std::int64_t k = i; k >= 0; --k) hole.v.push_back(t[static_cast<std::size_t>(k)]->v);
    for (std::int64_t k = i; k >= 1; --k) hole.h.push_back(t[static_cast<std::size_t>(k)]->edge_to_next);
    hole.h.push_back(chord);
    hole.n = ev.hole_internal_count;
    if (fill_geometry) {
      PolygonFiller filler(*this, hole_law);
      filler.run(std::move(hole), rng);
      hole_internal = filler.placed();
    } else {
      materialize(chord, apex->v, u->v);
    }
    for (std::int64_t k = 0; k < i; ++k) {
      if (t[static_cast<std::size_t>(k)]->marked) ++res.marks_removed;
      frontier_.erase(t[static_cast<std::size_t>(k)]);
      ++res.frontier_removed;
    }
    frontier_size_ -= i;
    apex->edge_to_next = h_new;
    res.left = apex;
  } else {
    std::int64_t removed = 0;
    FIter cur = u;
    bool hit_begin = false;
    while (removed < i) {
      if (cur->marked) ++res.marks_removed;
      if (cur == frontier_.begin()) {
        frontier_.erase(cur);
        ++removed;
        hit_begin = true;
        break;
      }
      const FIter left = std::prev(cur);
      frontier_.erase(cur);
      ++removed;
      cur = left;
    }
    res.frontier_removed = removed;
    res.absorbed_unrevealed = i - removed;
    absorbed_total_ += res.absorbed_unrevealed;
    frontier_size_ -= removed;
    if (hit_begin || removed < i) {
      const std::int32_t v = new_vertex(kLeftBoundary);
      frontier_.push_front(Node{v, -1, false});
      ++frontier_size_;
      res.left = frontier_.begin();
    } else {
      res.left = cur;
    }
  }
  interior_ += i + hole_internal;
  return res;
}

const std::vector<std::vector<std::pair<std::int32_t, std::int32_t>>>&
HalfPlaneMap::adjacency() const {
  if (!adjacency_valid_) {
    adjacency_.assign(static_cast<std::size_t>(vertex_count()), {});
    for (std::size_t e = 0; e < edges_.size(); ++e) {
      const auto [a, b] = edges_[e];
      adjacency_[static_cast<std::size_t>(a)].emplace_back(b, static_cast<std::int32_t>(e));
      adjacency_[static_cast<std::size_t>(b)].emplace_back(a, static_cast<std::int32_t>(e));
    }
    adjacency_valid_ = true;
  }
  return adjacency_;
}

std::vector<std::int32_t> HalfPlaneMap::distances_from_root() const {
  const auto& adj = adjacency();
  std::vector<std::int32_t> dist(adj.size(), -1);
  std::queue<std::int32_t> bfs;
  dist[0] = 0;
  bfs.push(0);
  while (!bfs.empty()) {
    const std::int32_t v = bfs.front();
    bfs.pop();
    for (const auto& [w, e] : adj[static_cast<std::size_t>(v)]) {
      if (dist[static_cast<std::size_t>(w)] < 0) {
        dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(v)] + 1;
        bfs.push(w);
      }
    }
  }
  return dist;
}

HalfPlaneMap::HullSets HalfPlaneMap::bfs_hull(std::int64_t r) const {
  if (!track_geometry_) throw std::logic_error("bfs_hull: geometry not tracked");
  if (r < 1) throw std::domain_error("bfs_hull: r >= 1");
  const std::vector<std::int32_t> dist = distances_from_root();
  for (const Node& node : frontier_) {
    const std::int32_t d = dist[static_cast<std::size_t>(node.v)];
    if (d >= 0 && d < r) {
      throw std::runtime_error("bfs_hull: frontier vertex within radius, explore further");
    }
  }

  const std::size_t nf = faces_.size();
  std::vector<char> in_ball(nf, 0);
  for (std::size_t f = 0; f < nf; ++f) {
    for (const std::int32_t v : faces_[f]) {
      const std::int32_t d = dist[static_cast<std::size_t>(v)];
      if (d >= 0 && d < r) {
        in_ball[f] = 1;
        break;
      }
    }
  }

  // Edges bordering the unrevealed region: the current frontier arc. Other
  // one-sided edges lie along the original half-plane boundary, which is a
  // wall, not a way out; holes swallowed against it are genuine pockets.
  std::vector<char> frontier_edge(edges_.size(), 0);
  for (const Node& node : frontier_) {
    if (node.edge_to_next < 0) continue;
    const std::int32_t e = resolve(node.edge_to_next);
    if (e >= 0) frontier_edge[static_cast<std::size_t>(e)] = 1;
  }

  // edge -> incident faces (at most two in a planar triangulation)
  std::vector<std::array<std::int32_t, 2>> side(edges_.size(), {-1, -1});
  std::vector<char> open_face(nf, 0);  // face touching an unresolved hole edge
  for (std::size_t f = 0; f < nf; ++f) {
    for (const std::int32_t h : face_edges_[f]) {
      const std::int32_t e = resolve(h);
      if (e < 0) {
        open_face[f] = 1;
        continue;
      }
      auto& pair = side[static_cast<std::size_t>(e)];
      if (pair[0] < 0) pair[0] = static_cast<std::int32_t>(f);
      else pair[1] = static_cast<std::int32_t>(f);
    }
  }

  // flood the complement; a component touching a one-sided edge reaches the
  // unrevealed region or the infinite face and is not part of the hull
  std::vector<char> status(nf, 0);  // 0 unvisited, 1 finite pocket, 2 escapes
  for (std::size_t f0 = 0; f0 < nf; ++f0) {
    if (in_ball[f0] || status[f0]) continue;
    std::vector<std::int32_t> comp;
    std::vector<std::int32_t> todo{static_cast<std::int32_t>(f0)};
    status[f0] = 1;
    bool escapes = false;
    while (!todo.empty()) {
      const auto f = static_cast<std::size_t>(todo.back());
      todo.pop_back();
      comp.push_back(static_cast<std::int32_t>(f));
      if (open_face[f]) escapes = true;
      for (const std::int32_t h : face_edges_[f]) {
        const std::int32_t e = resolve(h);
        if (e < 0) continue;
        const auto& pair = side[static_cast<std::size_t>(e)];
        if (pair[1] < 0) {
          if (frontier_edge[static_cast<std::size_t>(e)]) escapes = true;
          continue;
        }
        const std::int32_t g = pair[0] == static_cast<std::int32_t>(f) ? pair[1] : pair[0];
        if (!in_ball[static_cast<std::size_t>(g)] && !status[static_cast<std::size_t>(g)]) {
          status[static_cast<std::size_t>(g)] = 1;
          todo.push_back(g);
        }
      }
    }
    if (escapes) {
      for (const std::int32_t f : comp) status[static_cast<std::size_t>(f)] = 2;
    }
  }

  HullSets out;
  std::vector<char> in_hull_v(vertex_flags_.size(), 0);
  for (std::size_t f = 0; f < nf; ++f) {
    if (!in_ball[f] && status[f] != 1) continue;
    out.face_ids.push_back(static_cast<std::int32_t>(f));
    for (const std::int32_t v : faces_[f]) in_hull_v[static_cast<std::size_t>(v)] = 1;
  }
  for (std::size_t v = 0; v < in_hull_v.size(); ++v) {
    if (in_hull_v[v]) out.vertices.push_back(static_cast<std::int32_t>(v));
  }
  return out;
}

HalfPlaneMap::HullSets HalfPlaneMap::snapshot(std::int64_t tau) const {
  HullSets out;
  for (std::size_t v = 0; v < vertex_step_.size(); ++v) {
    if (vertex_step_[v] <= tau) out.vertices.push_back(static_cast<std::int32_t>(v));
  }
  for (std::size_t f = 0; f < face_step_.size(); ++f) {
    if (face_step_[f] <= tau) out.face_ids.push_back(static_cast<std::int32_t>(f));
  }
  return out;
}

std::vector<HalfPlaneMap::CutEdge> HalfPlaneMap::find_root_cutedges(
    const std::vector<char>& region_mask) const {
  if (!track_geometry_) throw std::logic_error("find_root_cutedges: geometry not tracked");
  const auto in_region = [&](std::int32_t v) {
    return region_mask.empty() || (static_cast<std::size_t>(v) < region_mask.size() &&
                                   region_mask[static_cast<std::size_t>(v)]);
  };
  std::vector<CutEdge> out;
  if (!in_region(0)) return out;
  bool any_frontier = false;
  for (const Node& node : frontier_) {
    if (in_region(node.v)) {
      any_frontier = true;
      break;
    }
  }
  if (!any_frontier) return out;

  // A cutset edge spans the root: one endpoint on each side of the original
  // boundary. The edge plus the boundary arc between its endpoints is a
  // closed curve with the root strictly inside; removing the two endpoints
  // deletes every vertex of that curve, and planarity then separates the
  // enclosed region from the frontier (all later growth attaches outside the
  // curve, since the enclosed region was swallowed when the edge appeared).
  // Conversely, any pair cutting the root off must break the boundary path
  // on both sides of the root, so no other edge qualifies.
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    const auto [a, b] = edges_[e];
    if (!in_region(a) || !in_region(b)) continue;
    const std::uint8_t fa = vertex_flags_[static_cast<std::size_t>(a)];
    const std::uint8_t fb = vertex_flags_[static_cast<std::size_t>(b)];
    if ((fa == kLeftBoundary && fb == kRightBoundary) ||
        (fa == kRightBoundary && fb == kLeftBoundary)) {
      out.push_back({a, b, static_cast<std::int32_t>(e)});
    }
  }
  return out;
}

void HalfPlaneMap::export_edge_list(std::ostream& os) const {
  os << "# vertices=" << vertex_count() << " root=0,1\n";
  for (const auto& [a, b] : edges_) os << a << ' ' << b << '\n';
}

StandalonePolygon fill_standalone_polygon(std::int64_t m, std::int64_t target_internal,
                                          RngStream& rng) {
  if (m < 2 || target_internal < 0) {
    throw std::domain_error("fill_standalone_polygon: m >= 2, target >= 0");
  }
  HalfPlaneMap map(true);
  map.frontier_.clear();
  map.frontier_size_ = 0;
  map.vertex_flags_.clear();
  map.vertex_step_.clear();
  FillPolygon poly;
  for (std::int64_t k = 0; k < m; ++k) poly.v.push_back(map.new_vertex(HalfPlaneMap::kRightBoundary));
  for (std::int64_t k = 0; k + 1 < m; ++k) {
    poly.h.push_back(map.new_edge_handle(poly.v[static_cast<std::size_t>(k)],
                                         poly.v[static_cast<std::size_t>(k + 1)]));
  }
  poly.h.push_back(map.new_pending_handle());
  poly.n = target_internal;
  PolygonFiller(map).run(std::move(poly), rng);
  StandalonePolygon out;
  out.boundary_vertices = m;
  out.internal_vertices = map.vertex_count() - m;
  out.edge_total = map.edge_count();
  out.face_total = map.face_count();
  out.faces = map.faces();
  return out;
}

EdgeListGraph import_edge_list(std::istream& is) {
  EdgeListGraph g;
  std::string line;
  bool header_seen = false;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    if (line[0] == '#') {
      long long n = 0;
      long long ru = 0, rv = 0;
      if (std::sscanf(line.c_str(), "# vertices=%lld root=%lld,%lld", &n, &ru, &rv) != 3) {
        throw std::runtime_error("import_edge_list: malformed header");
      }
      g.n = n;
      g.root = {static_cast<std::int32_t>(ru), static_cast<std::int32_t>(rv)};
      header_seen = true;
      continue;
    }
    long long a = 0, b = 0;
    if (std::sscanf(line.c_str(), "%lld %lld", &a, &b) != 2) {
      throw std::runtime_error("import_edge_list: malformed edge line");
    }
    g.edges.emplace_back(static_cast<std::int32_t>(a), static_cast<std::int32_t>(b));
  }
  if (!header_seen) throw std::runtime_error("import_edge_list: missing header");
  return g;
}

}  // namespace hpt
