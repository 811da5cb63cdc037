#include "hpt/fit.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hpt {

FitResult fit_linear(const std::vector<double>& x, const std::vector<double>& y,
                     std::size_t lo, std::size_t hi, const std::string& method) {
  if (x.size() != y.size()) throw std::invalid_argument("fit_linear: size mismatch");
  if (hi > x.size()) hi = x.size();
  const std::size_t n = hi > lo ? hi - lo : 0;
  if (n < 3) throw std::invalid_argument("fit_linear: need at least 3 points");
  double sx = 0, sy = 0;
  for (std::size_t i = lo; i < hi; ++i) {
    sx += x[i];
    sy += y[i];
  }
  const double mx = sx / static_cast<double>(n);
  const double my = sy / static_cast<double>(n);
  double sxx = 0, sxy = 0;
  for (std::size_t i = lo; i < hi; ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  if (sxx == 0.0) throw std::invalid_argument("fit_linear: degenerate x");
  const double slope = sxy / sxx;
  const double intercept = my - slope * mx;
  double rss = 0;
  for (std::size_t i = lo; i < hi; ++i) {
    const double r = y[i] - (intercept + slope * x[i]);
    rss += r * r;
  }
  FitResult out;
  out.estimate = slope;
  out.stderr_ = std::sqrt(std::max(rss / static_cast<double>(n - 2), 1e-300) / sxx);
  out.window_lo = lo;
  out.window_hi = hi;
  out.method = method;
  return out;
}

namespace {

FitResult windowed_transform_fit(const std::vector<double>& x, const std::vector<double>& y,
                                 bool log_x, const std::string& method) {
  std::vector<double> tx, ty;
  tx.reserve(x.size());
  ty.reserve(y.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (y[i] <= 0.0 || (log_x && x[i] <= 0.0)) continue;
    tx.push_back(log_x ? std::log(x[i]) : x[i]);
    ty.push_back(std::log(y[i]));
  }
  const std::size_t n = tx.size();
  if (n < 5) throw std::invalid_argument("tail fit: too few usable points");
  const std::size_t lo = n / 5;
  const std::size_t hi = n - n / 5;
  return fit_linear(tx, ty, lo, hi, method);
}

}  // namespace

FitResult fit_loglog(const std::vector<double>& x, const std::vector<double>& y) {
  return windowed_transform_fit(x, y, true, "log-log");
}

FitResult fit_loglinear(const std::vector<double>& x, const std::vector<double>& y) {
  return windowed_transform_fit(x, y, false, "log-linear");
}

FitResult fit_tail_constant(const std::vector<double>& x, const std::vector<double>& y,
                            double s) {
  if (x.size() != y.size()) throw std::invalid_argument("fit_tail_constant: size mismatch");
  std::vector<double> vals;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] <= 0.0 || y[i] <= 0.0) continue;
    vals.push_back(y[i] * std::pow(x[i], -s));
  }
  if (vals.size() < 3) throw std::invalid_argument("fit_tail_constant: too few points");
  const std::size_t lo = vals.size() / 5;
  const std::size_t hi = vals.size() - vals.size() / 5;
  double sum = 0, sum2 = 0;
  const auto n = static_cast<double>(hi - lo);
  for (std::size_t i = lo; i < hi; ++i) {
    sum += vals[i];
    sum2 += vals[i] * vals[i];
  }
  FitResult out;
  out.estimate = sum / n;
  out.stderr_ = std::sqrt(std::max(sum2 / n - out.estimate * out.estimate, 0.0) /
                          std::max(n - 1.0, 1.0));
  out.window_lo = lo;
  out.window_hi = hi;
  out.method = "tail-ratio";
  return out;
}

FitResult ks_statistic(std::vector<double> samples,
                       const std::function<double(double)>& cdf) {
  if (samples.empty()) throw std::invalid_argument("ks_statistic: no samples");
  std::sort(samples.begin(), samples.end());
  const auto n = static_cast<double>(samples.size());
  double d = 0.0;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const double f = cdf(samples[i]);
    d = std::max(d, std::abs(f - static_cast<double>(i) / n));
    d = std::max(d, std::abs(static_cast<double>(i + 1) / n - f));
  }
  FitResult out;
  out.estimate = d;
  out.stderr_ = 1.0 / std::sqrt(n);  // scale of typical fluctuation
  out.window_lo = 0;
  out.window_hi = samples.size();
  out.method = "ks";
  return out;
}

double levy_cdf(double x) {
  if (x <= 0.0) return 0.0;
  return std::erfc(1.0 / std::sqrt(2.0 * x));
}

}  // namespace hpt
