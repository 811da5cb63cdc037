#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "hpt/params.hpp"
#include "hpt/percolation.hpp"

using namespace hpt;

TEST_CASE("subcritical alpha is refused everywhere") {
  const ModelParams mp = model_params(0.5);
  const StepLaw law(mp, 10'000);
  RngStream rng(1);
  CHECK_THROWS_AS(require_supercritical(mp), std::domain_error);
  CHECK_THROWS_AS(root_cluster_walk(law, 0.5, rng, 100), std::domain_error);
  CHECK_THROWS_AS(interface_walk(law, 0.5, rng, 100), std::domain_error);
  CHECK_THROWS_AS(estimate_pc(law, rng, 10, 100), std::domain_error);
  CHECK_THROWS_AS(interface_density(law, 0.5, rng, 10, 10), std::domain_error);
  CHECK_THROWS_AS(
      full_map_percolation_check(mp, {0.5}, rng, 2, 1), std::domain_error);
}

TEST_CASE("cluster increment atoms match alpha p and p_i / 2") {
  const ModelParams mp = model_params(0.8);
  const StepLaw law(mp, 10'000);
  RngStream rng(11);
  const double p = 0.3;
  const std::int64_t draws = 300'000;
  std::int64_t plus = 0, zero = 0;
  std::vector<std::int64_t> minus(11, 0);
  for (std::int64_t t = 0; t < draws; ++t) {
    const std::int64_t d = cluster_increment(law, p, rng);
    if (d == 1) ++plus;
    else if (d == 0) ++zero;
    else if (-d <= 10) ++minus[static_cast<std::size_t>(-d)];
  }
  const double n = static_cast<double>(draws);
  const auto band = [&](double want) { return 4.0 * std::sqrt(want * (1 - want) / n) + 1e-9; };
  CHECK(std::abs(plus / n - 0.8 * p) < band(0.8 * p));
  for (std::int64_t i = 1; i <= 10; ++i) {
    const double want = 0.5 * step_prob(mp, i);
    CAPTURE(i);
    CHECK(std::abs(minus[static_cast<std::size_t>(i)] / n - want) < band(want));
  }
  // remaining mass: alpha (1-p) plus the white half-coin swallows
  double want_zero = 0.8 * (1 - p);
  for (std::int64_t i = 1; i <= 10'000; ++i) want_zero += 0.5 * step_prob(mp, i);
  CHECK(std::abs(zero / n - want_zero) < band(want_zero));
}

TEST_CASE("cluster increment drift vanishes at the analytic p_c") {
  const ModelParams mp = model_params(0.8);
  const StepLaw law(mp, 100'000);
  RngStream rng(13);
  const double pc = *mp.p_c;
  const std::int64_t draws = 1'000'000;
  double sum = 0, sum2 = 0;
  for (std::int64_t t = 0; t < draws; ++t) {
    const auto d = static_cast<double>(cluster_increment(law, pc, rng));
    sum += d;
    sum2 += d * d;
  }
  const double n = static_cast<double>(draws);
  const double mean = sum / n;
  const double sd = std::sqrt(sum2 / n - mean * mean);
  CHECK(std::abs(mean) < 3.5 * sd / std::sqrt(n));
}

TEST_CASE("p = 0: the root cluster always dies in finite time") {
  const StepLaw law(model_params(0.8), 10'000);
  RngStream rng(17);
  for (int t = 0; t < 2000; ++t) {
    const ClusterWalkResult res = root_cluster_walk(law, 0.0, rng, 1000);
    CHECK(!res.survived);
    CHECK(res.steps < 1'000'000);
  }
}

TEST_CASE("survival increases across the threshold") {
  const StepLaw law(model_params(0.8), 10'000);
  RngStream rng(19);
  const auto survival = [&](double p) {
    std::int64_t hits = 0;
    const std::int64_t trials = 2000;
    for (std::int64_t t = 0; t < trials; ++t)
      if (root_cluster_walk(law, p, rng, 1000).survived) ++hits;
    return static_cast<double>(hits) / static_cast<double>(trials);
  };
  const double below = survival(0.05);   // well under p_c ~ 0.146
  const double above = survival(0.5);
  CHECK(below < 0.05);
  CHECK(above > 0.5);
  CHECK(below < above);
}

TEST_CASE("bisection recovers the analytic threshold") {
  const ModelParams mp = model_params(0.8);
  const StepLaw law(mp, 100'000);
  RngStream rng(23);
  const PcEstimate est = estimate_pc(law, rng, 2000, 2000, 0.01);
  CHECK(est.half_width <= 0.005 + 1e-12);
  CHECK(std::abs(est.p_c - *mp.p_c) < 0.03);
}

TEST_CASE("interface outcomes at the extremes of p") {
  const StepLaw law(model_params(0.8), 10'000);
  RngStream rng(29);
  std::int64_t white_died = 0, black_died = 0, infinite_mid = 0;
  const std::int64_t reps = 1500;
  for (std::int64_t t = 0; t < reps; ++t) {
    const InterfaceResult hi = interface_walk(law, 0.97, rng, 400);
    if (hi.frontier.outcome == InterfaceOutcome::WhiteDied) ++white_died;
    const InterfaceResult lo = interface_walk(law, 0.03, rng, 400);
    if (lo.frontier.outcome == InterfaceOutcome::BlackDied) ++black_died;
    if (interface_walk(law, 0.5, rng, 400).infinite) ++infinite_mid;
  }
  // outside (p_c, p_u) = (0.146, 0.854) the minority interface dies
  CHECK(white_died > reps * 9 / 10);
  CHECK(black_died > reps * 9 / 10);
  // strictly inside, two-sided survival has positive probability
  CHECK(infinite_mid > reps / 20);
}

TEST_CASE("interface walk is symmetric under p -> 1 - p") {
  const StepLaw law(model_params(0.8), 10'000);
  RngStream rng(31);
  const std::int64_t reps = 4000;
  std::int64_t inf_a = 0, inf_b = 0;
  for (std::int64_t t = 0; t < reps; ++t) {
    if (interface_walk(law, 0.3, rng, 300).infinite) ++inf_a;
    if (interface_walk(law, 0.7, rng, 300).infinite) ++inf_b;
  }
  const double fa = static_cast<double>(inf_a) / static_cast<double>(reps);
  const double fb = static_cast<double>(inf_b) / static_cast<double>(reps);
  const double se = std::sqrt((fa * (1 - fa) + fb * (1 - fb)) / static_cast<double>(reps));
  CHECK(std::abs(fa - fb) < 4.0 * se + 1e-9);
}

TEST_CASE("interface walk respects its step budget") {
  const StepLaw law(model_params(0.8), 10'000);
  RngStream rng(37);
  const InterfaceResult res = interface_walk(law, 0.5, rng, 1'000'000'000, 1, 1, 50);
  CHECK(res.frontier.step_count <= 50);
  if (!res.infinite) CHECK(res.frontier.outcome != InterfaceOutcome::BothExceededCap);
}

TEST_CASE("interface density estimators are consistent with each other") {
  const StepLaw law(model_params(0.8), 10'000);
  RngStream rng(41);
  const DensityEstimate d = interface_density(law, 0.5, rng, 200, 20'000, 400);
  CHECK(d.replicas == 20'000);
  CHECK(d.rho_hat > 0.0);
  CHECK(d.ek_over_k > 0.0);
  // rho = (density of infinite-interface edges) / 2; infinite white clusters
  // alternate with black ones, one per consecutive pair of interfaces. The
  // run-length-aware estimator (b) sees slightly longer starting segments, so
  // only order-of-magnitude agreement is asserted here.
  CHECK(d.rho_hat == doctest::Approx(d.ek_over_k / 2.0).epsilon(0.6));
  CHECK(d.wk_inf_over_k == doctest::Approx(d.ek_over_k / 2.0).epsilon(0.5));
  CHECK(d.max_wb_gap <= 1);
}

TEST_CASE("full-map reach is monotone in p under the coupled colors") {
  const ModelParams mp = model_params(0.8);
  RngStream rng(43);
  const std::vector<double> grid{0.05, 0.3, 0.6, 0.95};
  const auto pts = full_map_percolation_check(mp, grid, rng, 3, 12, 2000, 500'000);
  REQUIRE(pts.size() == grid.size());
  for (std::size_t k = 1; k < pts.size(); ++k) {
    CHECK(pts[k].reach_freq >= pts[k - 1].reach_freq);  // exact, by coupling
    CHECK(pts[k].walk_survival >= 0.0);
  }
  CHECK(pts.back().reach_freq > 0.9);  // p = 0.95 >> p_u: root reaches the frontier
  RngStream rng2(44);
  CHECK_THROWS_AS(full_map_percolation_check(mp, grid, rng2, 50, 1, 100, 2'000),
                  std::runtime_error);
}
