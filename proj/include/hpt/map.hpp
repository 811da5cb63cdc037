#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <list>
#include <utility>
#include <vector>

#include "hpt/counting.hpp"
#include "hpt/rng.hpp"
#include "hpt/sampler.hpp"

namespace hpt {

struct StandalonePolygon;

// Explicit finite portion of the half-planar map under peeling. Vertices are
// creation-ordered integer ids; no coordinates (the objects are
// combinatorial). The infinite original boundary is materialized lazily.
//
// Count-only mode (track_geometry = false) keeps the frontier and all
// volume accounting but stores no faces or edges; swallowed holes then only
// contribute their sampled internal-vertex counts.
class HalfPlaneMap {
 public:
  struct Node {
    std::int32_t v;
    std::int32_t edge_to_next = -1;  // handle of the frontier edge to the next node
    bool marked = false;             // scratch bit for the hull explorer
  };
  using Frontier = std::list<Node>;
  using FIter = Frontier::iterator;

  struct StepResult {
    std::int64_t marks_removed = 0;
    std::int64_t frontier_removed = 0;     // frontier nodes erased
    std::int64_t absorbed_unrevealed = 0;  // boundary vertices swallowed unseen
    FIter left;  // surviving node at the action site (apex for a Left swallow)
  };

  explicit HalfPlaneMap(bool track_geometry = true);

  // Applies one peeling event at the frontier edge whose left endpoint is
  // at_edge. The edge to the right is materialized on demand (the original
  // boundary is infinite). fill_geometry controls whether a swallowed hole
  // is triangulated or recorded as a count-only hole.
  //
  // With hole_law set, a filled hole is drawn from the free Boltzmann law
  // (the conditional law of the hole given the swallow size) and
  // ev.hole_internal_count is ignored; this is O(1) expected work per placed
  // triangle and is what the explorer uses. Without it the hole is filled
  // conditioned to realize ev.hole_internal_count internal vertices exactly.
  StepResult apply_step(FIter at_edge, const PeelEvent& ev, RngStream& rng,
                        bool fill_geometry, const FreeLaw* hole_law = nullptr);
  StepResult apply_step(FIter at_edge, const PeelEvent& ev, RngStream& rng) {
    return apply_step(at_edge, ev, rng, track_geometry_);
  }

  Frontier& frontier() { return frontier_; }
  const Frontier& frontier() const { return frontier_; }

  std::int64_t boundary_length() const { return frontier_size_; }          // X_n
  std::int64_t interior_count() const { return interior_; }                // S_n
  std::int64_t volume() const { return frontier_size_ + interior_; }       // V_n
  std::int64_t step_count() const { return step_; }
  bool track_geometry() const { return track_geometry_; }

  std::int64_t vertex_count() const { return static_cast<std::int64_t>(vertex_flags_.size()); }
  // original-boundary vertices revealed so far (the root counts)
  std::int64_t original_boundary_count() const { return boundary_vertex_count_; }
  // Counting-process boundary length: starts at 2 for the root edge, +1 per
  // alpha-step, -i per swallow. Lazy reveals of the infinite boundary are
  // excluded, so this is the X_n the step-law drift and bounds refer to.
  std::int64_t counting_boundary() const {
    return frontier_size_ - boundary_vertex_count_ - absorbed_total_ + 2;
  }
  std::int64_t edge_count() const { return static_cast<std::int64_t>(edges_.size()); }
  std::int64_t face_count() const { return static_cast<std::int64_t>(faces_.size()); }
  bool on_original_boundary(std::int32_t v) const { return vertex_flags_[static_cast<std::size_t>(v)] != 0; }
  std::int64_t vertex_step(std::int32_t v) const { return vertex_step_[static_cast<std::size_t>(v)]; }
  std::int64_t face_step(std::int32_t f) const { return face_step_[static_cast<std::size_t>(f)]; }
  const std::vector<std::array<std::int32_t, 3>>& faces() const { return faces_; }
  const std::vector<std::pair<std::int32_t, std::int32_t>>& edges() const { return edges_; }
  std::int32_t root_vertex() const { return 0; }

  // (neighbor, edge id) lists with multi-edge multiplicity; built on demand
  const std::vector<std::vector<std::pair<std::int32_t, std::int32_t>>>& adjacency() const;

  // graph distances from the root over the revealed map
  std::vector<std::int32_t> distances_from_root() const;

  struct HullSets {
    std::vector<std::int32_t> vertices;  // sorted
    std::vector<std::int32_t> face_ids;  // sorted
  };

  // Hull of the ball of radius r: faces with a vertex at distance < r plus
  // all finite components of the complement. Throws if a frontier vertex
  // lies at distance < r (insufficient exploration).
  HullSets bfs_hull(std::int64_t r) const;

  // Revealed region P_tau: everything created in the first tau steps.
  HullSets snapshot(std::int64_t tau) const;

  struct CutEdge {
    std::int32_t u, v;
    std::int32_t edge_id;
  };

  // Single-edge cutsets: edges whose removal together with both endpoints
  // disconnects the root from every frontier vertex (empty mask = whole
  // map). In a half-planar map these are exactly the revealed edges joining
  // an original-boundary vertex left of the root to one on its right: the
  // edge plus the boundary arc between its endpoints encloses the root, and
  // everything revealed later attaches outside that curve.
  std::vector<CutEdge> find_root_cutedges(const std::vector<char>& region_mask = {}) const;

  // Plain-text edge list: "# vertices=<n> root=<u>,<v>" then one "u v" per
  // line in creation order.
  void export_edge_list(std::ostream& os) const;

 private:
  friend class PolygonFiller;
  friend StandalonePolygon fill_standalone_polygon(std::int64_t, std::int64_t, RngStream&);

  FIter ensure_next(FIter it);              // materialize the node right of it
  FIter ensure_prev(FIter it);              // materialize the node left of it

  // vertex_flags_ values: which part of the original boundary, if any
  static constexpr std::uint8_t kInterior = 0;
  static constexpr std::uint8_t kRightBoundary = 1;  // right of the root
  static constexpr std::uint8_t kLeftBoundary = 2;   // left of the root
  static constexpr std::uint8_t kRoot = 3;
  std::int32_t new_vertex(std::uint8_t boundary_flag);
  std::int32_t new_edge_handle(std::int32_t u, std::int32_t v);  // materialized
  std::int32_t new_pending_handle();
  std::int32_t materialize(std::int32_t handle, std::int32_t u, std::int32_t v);
  void glue(std::int32_t pending, std::int32_t real);
  std::int32_t resolve(std::int32_t handle) const { return handles_[static_cast<std::size_t>(handle)]; }
  void add_face(std::int32_t a, std::int32_t b, std::int32_t c,
                std::int32_t ha, std::int32_t hb, std::int32_t hc);
  void invalidate_caches();

  bool track_geometry_;
  Frontier frontier_;
  std::int64_t frontier_size_ = 0;
  std::int64_t boundary_vertex_count_ = 0;
  std::int64_t absorbed_total_ = 0;  // swallowed boundary vertices never revealed
  std::int64_t interior_ = 0;
  std::int64_t step_ = 0;

  std::vector<std::uint8_t> vertex_flags_;
  std::vector<std::int64_t> vertex_step_;
  std::vector<std::int32_t> handles_;  // handle -> edge id, -1 while pending
  std::vector<std::pair<std::int32_t, std::int32_t>> edges_;
  std::vector<std::array<std::int32_t, 3>> faces_;       // vertex triples
  std::vector<std::array<std::int32_t, 3>> face_edges_;  // edge handles
  std::vector<std::int64_t> face_step_;

  mutable std::vector<std::vector<std::pair<std::int32_t, std::int32_t>>> adjacency_;
  mutable bool adjacency_valid_ = false;
};

// Fills an m-gon with a free triangulation conditioned to realize exactly
// target_internal vertices, on a standalone map (for tests and oracles).
// Returns the map holding only the polygon: boundary vertices 0..m-1 in
// cyclic order; the chord is the edge (0, m-1) unless glued (m = 2, empty).
struct StandalonePolygon {
  std::int64_t boundary_vertices;
  std::int64_t internal_vertices;
  std::int64_t edge_total;
  std::int64_t face_total;
  std::vector<std::array<std::int32_t, 3>> faces;
};
StandalonePolygon fill_standalone_polygon(std::int64_t m, std::int64_t target_internal,
                                          RngStream& rng);

struct EdgeListGraph {
  std::int64_t n = 0;
  std::pair<std::int32_t, std::int32_t> root{0, 1};
  std::vector<std::pair<std::int32_t, std::int32_t>> edges;
};
EdgeListGraph import_edge_list(std::istream& is);

}  // namespace hpt
