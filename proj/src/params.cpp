#include "hpt/params.hpp"

#include <cmath>
#include <stdexcept>

namespace hpt {

namespace {
constexpr double kTwoThirds = 2.0 / 3.0;
}

double solve_theta(double q) {
  if (q < 0.0 || q > 2.0 / 27.0 + 1e-12) {
    throw std::domain_error("solve_theta: q must lie in [0, 2/27]");
  }
  if (q >= 2.0 / 27.0) return 1.0 / 6.0;
  // theta (1-2theta)^2 is strictly increasing on [0, 1/6]
  double lo = 0.0, hi = 1.0 / 6.0;
  for (int it = 0; it < 200 && hi - lo > 1e-14; ++it) {
    double mid = 0.5 * (lo + hi);
    double v = mid * (1.0 - 2.0 * mid) * (1.0 - 2.0 * mid);
    (v < q ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

ModelParams model_params(double alpha) {
  if (!(alpha >= 0.0 && alpha < 1.0)) {
    throw std::domain_error("model_params: alpha must lie in [0, 1)");
  }
  ModelParams p;
  p.alpha = alpha;
  if (alpha < kTwoThirds) {
    p.regime = Regime::Subcritical;
  } else if (alpha > kTwoThirds) {
    p.regime = Regime::Supercritical;
  } else {
    p.regime = Regime::Critical;
  }
  p.beta = alpha <= kTwoThirds ? (2.0 - alpha) * (2.0 - alpha) / 16.0
                               : alpha * (1.0 - alpha) / 2.0;
  p.q = alpha * p.beta;
  p.theta = solve_theta(p.q);
  if (p.regime == Regime::Supercritical) {
    const double s = std::sqrt(3.0 - 2.0 / alpha);
    p.p_c = 0.5 * (1.0 - s);
    p.p_u = 0.5 * (1.0 + s);
  }
  return p;
}

DriftConstants analytic_drifts(double alpha, std::optional<double> p) {
  if (alpha <= kTwoThirds) {
    throw std::domain_error("analytic_drifts: requires supercritical alpha > 2/3");
  }
  DriftConstants d{};
  d.boundary_drift = std::sqrt(alpha * (3.0 * alpha - 2.0));
  const double s = std::sqrt(3.0 - 2.0 / alpha);
  d.p_c = 0.5 * (1.0 - s);
  d.p_u = 0.5 * (1.0 + s);
  if (p) {
    d.perc_drift = alpha * (*p) - 0.5 * (alpha - d.boundary_drift);
  }
  return d;
}

}  // namespace hpt
