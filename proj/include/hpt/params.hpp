#pragma once

#include <optional>
#include <string>

namespace hpt {

enum class Regime { Subcritical, Critical, Supercritical };

inline const char* to_string(Regime r) {
  switch (r) {
    case Regime::Subcritical: return "subcritical";
    case Regime::Critical: return "critical";
    case Regime::Supercritical: return "supercritical";
  }
  return "?";
}

// The single source of model truth: alpha plus every derived constant.
struct ModelParams {
  double alpha = 0.0;
  Regime regime = Regime::Subcritical;
  double beta = 0.0;   // probability of an (R,1) step enclosing an empty 2-gon
  double q = 0.0;      // alpha * beta, the free-triangulation weight
  double theta = 0.0;  // root of theta(1-2theta)^2 = q in [0, 1/6]
  std::optional<double> p_c;  // supercritical only
  std::optional<double> p_u;  // supercritical only

  bool subcritical() const { return alpha < 2.0 / 3.0; }
  bool supercritical() const { return alpha > 2.0 / 3.0; }
};

// Populates every derived field. theta is found by bisection of the
// monotone cubic on [0, 1/6] to 1e-14. Throws std::domain_error for
// alpha outside [0, 1).
ModelParams model_params(double alpha);

// Solves theta(1-2theta)^2 = q for theta in [0, 1/6].
double solve_theta(double q);

struct DriftConstants {
  double boundary_drift;          // E[dX~] = sqrt(alpha(3alpha-2))
  std::optional<double> perc_drift;  // alpha*p - (alpha - boundary_drift)/2
  double p_c;
  double p_u;
};

// Supercritical drift and percolation constants. Throws std::domain_error
// for alpha <= 2/3.
DriftConstants analytic_drifts(double alpha, std::optional<double> p = std::nullopt);

}  // namespace hpt
