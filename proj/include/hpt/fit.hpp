#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace hpt {

struct FitResult {
  double estimate = 0.0;
  double stderr_ = 0.0;
  std::size_t window_lo = 0;  // inclusive index range actually used
  std::size_t window_hi = 0;
  std::string method;
};

// Least-squares slope of y against x (both already transformed by the
// caller if needed). stderr is the standard error of the slope.
FitResult fit_linear(const std::vector<double>& x, const std::vector<double>& y,
                     std::size_t lo, std::size_t hi, const std::string& method);

// Slope of log y vs log x over a central window (default: middle 60%);
// points with nonpositive coordinates are skipped.
FitResult fit_loglog(const std::vector<double>& x, const std::vector<double>& y);

// Slope of log y vs x over a central window; for exponential tails.
FitResult fit_loglinear(const std::vector<double>& x, const std::vector<double>& y);

// Mean of y_i * x_i^{-exponent_of_x}... concretely: for a tail obeying
// P(X >= x) ~ c x^s, averages y_i x_i^{-s} over the window to estimate c.
FitResult fit_tail_constant(const std::vector<double>& x, const std::vector<double>& y,
                            double s);

// Kolmogorov-Smirnov distance between the empirical distribution of the
// samples and a reference CDF.
FitResult ks_statistic(std::vector<double> samples,
                       const std::function<double(double)>& cdf);

// CDF of the 1/2-stable (Levy) law with density (2 pi x^3)^{-1/2} e^{-1/(2x)}.
double levy_cdf(double x);

}  // namespace hpt
