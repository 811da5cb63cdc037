#include <cmath>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "hpt/counting.hpp"
#include "hpt/fit.hpp"
#include "hpt/rng.hpp"

using namespace hpt;

TEST_CASE("plain linear fit recovers slope and flags degeneracy") {
  std::vector<double> x, y;
  for (int k = 0; k < 50; ++k) {
    x.push_back(k);
    y.push_back(3.0 - 2.0 * k);
  }
  const FitResult fit = fit_linear(x, y, 0, x.size(), "test");
  CHECK(fit.estimate == doctest::Approx(-2.0).epsilon(1e-12));
  CHECK(fit.stderr_ < 1e-9);
  CHECK(fit.method == "test");
  CHECK_THROWS_AS(fit_linear(x, y, 0, 2, "tiny"), std::invalid_argument);
  std::vector<double> flat(10, 1.0);
  CHECK_THROWS_AS(fit_linear(flat, flat, 0, 10, "flat"), std::invalid_argument);
  std::vector<double> shorter(5, 1.0);
  CHECK_THROWS_AS(fit_linear(x, shorter, 0, 5, "mismatch"), std::invalid_argument);
}

TEST_CASE("log-log fit recovers a power-law tail exponent") {
  // empirical survival of Pareto(1/2): P(X > x) = x^{-1/2}
  RngStream rng(1);
  std::vector<double> samples;
  for (int k = 0; k < 200'000; ++k) {
    const double u = rng.next_double();
    samples.push_back(1.0 / ((1.0 - u) * (1.0 - u)));
  }
  std::vector<double> x, tail;
  for (double t = 1.0; t < 1e4; t *= 1.3) {
    std::size_t above = 0;
    for (const double s : samples)
      if (s > t) ++above;
    x.push_back(t);
    tail.push_back(static_cast<double>(above) / static_cast<double>(samples.size()));
  }
  const FitResult fit = fit_loglog(x, tail);
  CHECK(fit.estimate == doctest::Approx(-0.5).epsilon(0.1));
  CHECK(std::abs(fit.estimate + 0.5) < 0.05);
}

TEST_CASE("log-linear fit recovers an exponential decay rate") {
  std::vector<double> x, y;
  for (int k = 0; k < 60; ++k) {
    x.push_back(0.5 * k);
    y.push_back(7.0 * std::exp(-0.5 * k));
  }
  const FitResult fit = fit_loglinear(x, y);
  CHECK(fit.estimate == doctest::Approx(-1.0).epsilon(1e-10));
  // nonpositive values are skipped, not fatal
  y[3] = 0.0;
  const FitResult fit2 = fit_loglinear(x, y);
  CHECK(fit2.estimate == doctest::Approx(-1.0).epsilon(1e-9));
  std::vector<double> few{1.0, 2.0};
  CHECK_THROWS_AS(fit_loglog(few, few), std::invalid_argument);
}

TEST_CASE("tail-constant estimator averages y x^{-s}") {
  std::vector<double> x, y;
  for (int k = 1; k <= 40; ++k) {
    x.push_back(100.0 * k);
    y.push_back(3.5 * std::sqrt(100.0 * k));
  }
  const FitResult fit = fit_tail_constant(x, y, 0.5);
  CHECK(fit.estimate == doctest::Approx(3.5).epsilon(1e-10));
  CHECK(fit.stderr_ < 1e-9);
  std::vector<double> bad{-1.0, 0.0};
  CHECK_THROWS_AS(fit_tail_constant(bad, bad, 0.5), std::invalid_argument);
}

TEST_CASE("KS distance is small for the true law and large for a wrong one") {
  RngStream rng(7);
  std::vector<double> uniforms;
  for (int k = 0; k < 20'000; ++k) uniforms.push_back(rng.next_double());
  const auto uniform_cdf = [](double x) { return x < 0 ? 0.0 : (x > 1 ? 1.0 : x); };
  const FitResult good = ks_statistic(uniforms, uniform_cdf);
  CHECK(good.estimate < 4.0 / std::sqrt(20'000.0));
  const auto shifted_cdf = [&](double x) { return uniform_cdf(x - 0.1); };
  const FitResult bad = ks_statistic(uniforms, shifted_cdf);
  CHECK(bad.estimate > 0.05);
  CHECK_THROWS_AS(ks_statistic({}, uniform_cdf), std::invalid_argument);
}

TEST_CASE("Levy CDF is consistent with the density") {
  CHECK(levy_cdf(0.0) == 0.0);
  CHECK(levy_cdf(-3.0) == 0.0);
  CHECK(levy_cdf(1e12) == doctest::Approx(1.0).epsilon(1e-5));
  // numeric integral of the density reproduces CDF differences
  const double a = 0.2, b = 8.0;
  const int n = 200'000;
  const double h = (b - a) / n;
  double integral = 0.0;
  for (int k = 0; k <= n; ++k) {
    const double w = (k == 0 || k == n) ? 0.5 : 1.0;
    integral += w * levy_density(a + h * k);
  }
  integral *= h;
  CHECK(integral == doctest::Approx(levy_cdf(b) - levy_cdf(a)).epsilon(1e-8));
  // the median of the Levy(1/2) law
  CHECK(levy_cdf(2.198) == doctest::Approx(0.5).epsilon(1e-3));
}

TEST_CASE("KS distance of true Levy samples against the Levy CDF") {
  // inverse-CDF sampling: X = 1 / (2 erfcinv(u)^2); build it by bisection
  RngStream rng(11);
  const auto quantile = [](double u) {
    double lo = 1e-9, hi = 1e12;
    for (int it = 0; it < 200; ++it) {
      const double mid = std::sqrt(lo * hi);
      if (levy_cdf(mid) < u) lo = mid; else hi = mid;
    }
    return std::sqrt(lo * hi);
  };
  std::vector<double> samples;
  for (int k = 0; k < 5000; ++k) samples.push_back(quantile(rng.next_double()));
  const FitResult ks = ks_statistic(samples, levy_cdf);
  CHECK(ks.estimate < 4.0 / std::sqrt(5000.0));
}
