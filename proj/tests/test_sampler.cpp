#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "hpt/counting.hpp"
#include "hpt/params.hpp"
#include "hpt/sampler.hpp"

using namespace hpt;

TEST_CASE("theta = 0 freezes every hole empty") {
  RngStream rng(1);
  const FreeLaw law(0.0, 64);
  for (std::int64_t m : {2, 3, 7, 40}) {
    for (int t = 0; t < 200; ++t) CHECK(sample_free_internal_count(m, law, rng) == 0);
  }
}

TEST_CASE("P(empty m-gon) = phi(0,m) / Z_m") {
  RngStream rng(20240818);
  const FreeLaw law(0.1, 64);
  const std::int64_t draws = 300'000;
  for (std::int64_t m : {2, 3}) {
    std::int64_t empty = 0;
    for (std::int64_t t = 0; t < draws; ++t)
      if (sample_free_internal_count(m, law, rng) == 0) ++empty;
    const double p = 1.0 / partition_Z(m, 0.1);  // phi(0,2) = phi(0,3) = 1
    const double se = std::sqrt(p * (1 - p) / static_cast<double>(draws));
    CAPTURE(m);
    CHECK(std::abs(static_cast<double>(empty) / static_cast<double>(draws) - p) <
          3.5 * se);
  }
}

TEST_CASE("free internal count matches the closed-form moments") {
  RngStream rng(99);
  const FreeLaw law(0.1, 64);
  const std::int64_t draws = 20'000;
  double sum = 0, sum2 = 0;
  for (std::int64_t t = 0; t < draws; ++t) {
    const auto c = static_cast<double>(sample_free_internal_count(10, law, rng));
    sum += c;
    sum2 += c * c;
  }
  const double n = static_cast<double>(draws);
  const double mean = sum / n;
  const double var = sum2 / n - mean * mean;
  const Moments mm = free_moments(10, 0.1);
  CHECK(std::abs(mean - mm.mean) < 4.0 * std::sqrt(mm.variance / n));
  CHECK(var == doctest::Approx(mm.variance).epsilon(0.10));
}

TEST_CASE("polygon sampling terminates near criticality") {
  RngStream rng(5);
  const FreeLaw law(0.15, 128);
  std::int64_t total = 0;
  for (int t = 0; t < 2000; ++t) total += sample_free_internal_count(50, law, rng);
  CHECK(total > 0);  // and we got here: no hang, no throw
  CHECK_THROWS_AS(sample_free_internal_count(5, 1.0 / 6.0, rng), std::domain_error);
  CHECK_THROWS_AS(sample_free_internal_count(5, 0.3, rng), std::domain_error);
}

TEST_CASE("alpha = 0 peeling never draws an alpha-step and W >= 1") {
  const PeelSampler sampler(model_params(0.0), 100'000);
  RngStream rng(12);
  for (int t = 0; t < 20'000; ++t) {
    const PeelEvent ev = sampler.sample_step_shape(rng);
    CHECK(ev.kind == PeelKind::Swallow);
    CHECK(ev.i >= 1);
  }
  for (int t = 0; t < 20'000; ++t) CHECK(sampler.sample_w(rng) >= 1);
}

TEST_CASE("boundary increment has the analytic supercritical drift") {
  const PeelSampler sampler(model_params(0.75), 100'000);
  RngStream rng(31);
  const std::int64_t draws = 100'000;
  double sum = 0, sum2 = 0;
  for (std::int64_t t = 0; t < draws; ++t) {
    const PeelEvent ev = sampler.sample_step_shape(rng);
    const double dx = ev.kind == PeelKind::AlphaStep ? 1.0 : -static_cast<double>(ev.i);
    sum += dx;
    sum2 += dx * dx;
  }
  const double n = static_cast<double>(draws);
  const double mean = sum / n;
  const double sd = std::sqrt(sum2 / n - mean * mean);
  const double drift = std::sqrt(0.75 * (3 * 0.75 - 2));
  CHECK(std::abs(mean - drift) < 4.0 * sd / std::sqrt(n));
}

TEST_CASE("joint step law: hole counts given i = 1 follow p_{1,k} / p_1") {
  const ModelParams mp = model_params(0.8);
  const PeelSampler sampler(mp, 10'000);
  RngStream rng(77);
  std::int64_t n1 = 0;
  std::vector<std::int64_t> hole(4, 0);
  for (int t = 0; t < 400'000; ++t) {
    const PeelEvent ev = sampler.sample_step(rng);
    if (ev.kind != PeelKind::Swallow || ev.i != 1) continue;
    ++n1;
    if (ev.hole_internal_count < 4) ++hole[static_cast<std::size_t>(ev.hole_internal_count)];
  }
  REQUIRE(n1 > 10'000);
  const double p1 = step_prob(mp, 1);
  for (std::int64_t k = 0; k <= 3; ++k) {
    const double want = step_prob(mp, 1, k) / p1;
    const double got = static_cast<double>(hole[static_cast<std::size_t>(k)]) /
                       static_cast<double>(n1);
    const double se = std::sqrt(want * (1 - want) / static_cast<double>(n1));
    CAPTURE(k);
    CHECK(std::abs(got - want) < 4.0 * se + 1e-9);
  }
}

TEST_CASE("W = Y at alpha = 0 and its square-root tail") {
  const PeelSampler sampler(model_params(0.0), 1'000'000);
  RngStream rng(123);
  const std::int64_t draws = 300'000;
  const double x = 10'000.0;
  std::int64_t above = 0;
  double truncated_sum = 0.0;
  for (std::int64_t t = 0; t < draws; ++t) {
    const auto w = static_cast<double>(sampler.sample_w(rng));
    if (w > x)
      ++above;
    else
      truncated_sum += w;
  }
  const double c0 = 1.0 / std::sqrt(M_PI);
  const double tail = std::sqrt(x) * static_cast<double>(above) / static_cast<double>(draws);
  CHECK(tail == doctest::Approx(c0).epsilon(0.10));
  // lemma-style truncated mean: E[W 1_{W < x}] ~ c_alpha sqrt(x)
  const double tmean = truncated_sum / static_cast<double>(draws);
  CHECK(tmean == doctest::Approx(c0 * std::sqrt(x)).epsilon(0.15));
}

TEST_CASE("peel sampling is deterministic in the seed") {
  const PeelSampler sampler(model_params(0.8), 10'000);
  RngStream a(42), b(42);
  for (int t = 0; t < 3000; ++t) {
    const PeelEvent ea = sampler.sample_step(a);
    const PeelEvent eb = sampler.sample_step(b);
    CHECK(ea.kind == eb.kind);
    CHECK(ea.side == eb.side);
    CHECK(ea.i == eb.i);
    CHECK(ea.hole_internal_count == eb.hole_internal_count);
  }
}
