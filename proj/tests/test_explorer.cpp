#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "hpt/explorer.hpp"
#include "hpt/params.hpp"

using namespace hpt;

TEST_CASE("hull trace invariants hold along the exploration") {
  for (double alpha : {0.3, 0.75}) {
    const PeelSampler sampler(model_params(alpha), 100'000);
    RngStream rng(alpha < 0.5 ? 5 : 6);
    ExploreOptions opts;
    opts.radius = 12;
    opts.record_steps = true;
    opts.max_volume = 3'000'000;
    const ExploreResult res = explore(sampler, opts, rng);
    const HullTrace& tr = res.trace;
    CAPTURE(alpha);
    if (tr.truncated) continue;  // heavy-tailed volume may hit the cap; retried below
    REQUIRE(tr.radii.size() == 12);

    std::int64_t prev_tau = 0, prev_vol = 0;
    for (const RadiusRecord& rec : tr.radii) {
      CHECK(rec.tau > prev_tau);            // each radius costs at least one step
      CHECK(rec.delta_tau == rec.tau - prev_tau);
      CHECK(rec.volume >= prev_vol);
      CHECK(rec.boundary >= 2);             // hull boundaries past r = 0 have >= 2 vertices
      prev_tau = rec.tau;
      prev_vol = rec.volume;
    }

    // X_n <= n + 2 and per-step increments of at most one after the first
    REQUIRE(static_cast<std::int64_t>(tr.x_series.size()) == tr.steps);
    for (std::int64_t n = 0; n < tr.steps; ++n) {
      CHECK(tr.x_series[static_cast<std::size_t>(n)] <= n + 3);  // X_{n+1} <= (n+1) + 2
      if (n > 0) {
        CHECK(tr.x_series[static_cast<std::size_t>(n)] -
                  tr.x_series[static_cast<std::size_t>(n - 1)] <=
              1);
      }
      CHECK(tr.v_series[static_cast<std::size_t>(n)] >=
            tr.x_series[static_cast<std::size_t>(n)]);
    }

    // every hull boundary vertex was revealed during its own round
    for (std::size_t k = 0; k < tr.radii.size(); ++k) {
      CHECK(tr.radii[k].boundary <= tr.radii[k].delta_tau + 2);
    }
  }
}

TEST_CASE("the frontier after round r is exactly the hull boundary of B_r") {
  // cross-check the peeling-time construction against plain BFS geometry
  const PeelSampler sampler(model_params(0.3), 100'000);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    RngStream rng(300 + seed);
    ExploreOptions opts;
    opts.radius = 4;
    opts.with_geometry = true;
    opts.max_volume = 2'000'000;
    const ExploreResult res = explore(sampler, opts, rng);
    if (res.trace.truncated) continue;
    REQUIRE(res.map.has_value());
    const HalfPlaneMap& map = *res.map;
    for (std::int64_t r = 1; r + 1 <= 4; ++r) {
      const auto snap = map.snapshot(res.trace.radii[static_cast<std::size_t>(r - 1)].tau);
      const auto hull = map.bfs_hull(r);
      CAPTURE(seed);
      CAPTURE(r);
      CHECK(snap.vertices == hull.vertices);
      CHECK(snap.face_ids == hull.face_ids);
    }
    // nesting: hulls grow with the radius
    const auto h1 = map.bfs_hull(1);
    const auto h2 = map.bfs_hull(2);
    CHECK(std::includes(h2.vertices.begin(), h2.vertices.end(), h1.vertices.begin(),
                        h1.vertices.end()));
    CHECK(std::includes(h2.face_ids.begin(), h2.face_ids.end(), h1.face_ids.begin(),
                        h1.face_ids.end()));
  }
}

TEST_CASE("resource caps mark the trace truncated") {
  const PeelSampler sampler(model_params(0.5), 10'000);
  RngStream rng(9);
  ExploreOptions opts;
  opts.radius = 100;
  opts.max_steps = 50;
  const ExploreResult res = explore(sampler, opts, rng);
  CHECK(res.trace.truncated);
  CHECK(res.trace.steps <= 50);
  CHECK(res.trace.radii.size() < 100);

  RngStream rng2(9);
  ExploreOptions vol_opts;
  vol_opts.radius = 100;
  vol_opts.max_volume = 200;
  const ExploreResult res2 = explore(sampler, vol_opts, rng2);
  CHECK(res2.trace.truncated);
}

TEST_CASE("explore rejects a non-positive radius") {
  const PeelSampler sampler(model_params(0.5), 1'000);
  RngStream rng(1);
  ExploreOptions opts;
  opts.radius = 0;
  CHECK_THROWS_AS(explore(sampler, opts, rng), std::domain_error);
}

TEST_CASE("exploration is deterministic in the seed") {
  const PeelSampler sampler(model_params(0.75), 100'000);
  ExploreOptions opts;
  opts.radius = 8;
  HullTrace a, b;
  {
    RngStream rng(77);
    a = explore(sampler, opts, rng).trace;
  }
  {
    RngStream rng(77);
    b = explore(sampler, opts, rng).trace;
  }
  REQUIRE(a.radii.size() == b.radii.size());
  for (std::size_t k = 0; k < a.radii.size(); ++k) {
    CHECK(a.radii[k].tau == b.radii[k].tau);
    CHECK(a.radii[k].boundary == b.radii[k].boundary);
    CHECK(a.radii[k].volume == b.radii[k].volume);
  }
}

TEST_CASE("Nash-Williams partial sums") {
  HullTrace trace;
  for (std::int64_t r = 1; r <= 10; ++r) trace.radii.push_back({r, r, 2, 2 * r, 1});
  const std::vector<double> sums = resistance_lower_bound(trace);
  REQUIRE(sums.size() == 10);
  // delta_tau = 1 per radius: each annulus cut has at most two edges
  for (std::size_t k = 0; k < 10; ++k) {
    CHECK(sums[k] == doctest::Approx(0.5 * static_cast<double>(k + 1)).epsilon(1e-12));
  }
}

TEST_CASE("gamma estimate: linear tau growth is recovered exactly") {
  HullTrace trace;
  for (std::int64_t r = 1; r <= 20; ++r) trace.radii.push_back({r, 7 * r, 2, r, 7});
  CHECK(stationary_gamma(trace) == doctest::Approx(7.0).epsilon(1e-12));
  HullTrace tiny;
  tiny.radii.push_back({1, 3, 2, 3, 3});
  CHECK_THROWS_AS(stationary_gamma(tiny), std::domain_error);
}

TEST_CASE("subcritical tau_r grows linearly (boundary stays tight)") {
  const PeelSampler sampler(model_params(0.3), 100'000);
  double gamma_sum = 0.0;
  int done = 0;
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    RngStream rng = RngStream::for_replica(12345, seed);
    ExploreOptions opts;
    opts.radius = 60;
    opts.max_volume = 3'000'000;
    const ExploreResult res = explore(sampler, opts, rng);
    if (res.trace.truncated) continue;
    gamma_sum += stationary_gamma(res.trace);
    ++done;
  }
  REQUIRE(done >= 20);
  const double gamma = gamma_sum / static_cast<double>(done);
  // gamma >= 1 always; subcritical hulls advance in O(1) steps per radius
  CHECK(gamma >= 1.0);
  CHECK(gamma < 30.0);
}
