#include "hpt/step_law.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "hpt/counting.hpp"

namespace hpt {

namespace {

// coefficient c in the linear factor (c i + 1) of the closed form
double linear_coeff(const ModelParams& p) {
  return p.supercritical() ? 3.0 * p.alpha - 2.0 : 1.0 - 1.5 * p.alpha;
}

// log of the extra geometric factor per unit i (1 for subcritical)
double log_geom_factor(const ModelParams& p) {
  return p.supercritical() ? std::log(2.0 / p.alpha - 2.0) : 0.0;
}

}  // namespace

double log_step_prob(const ModelParams& params, std::int64_t i) {
  if (i < 1) throw std::domain_error("step_prob: i >= 1");
  const double c = linear_coeff(params);
  return std::log(2.0) - static_cast<double>(i) * std::log(4.0) +
         log_factorial(2 * i - 2) - log_factorial(i - 1) - log_factorial(i + 1) +
         static_cast<double>(i) * log_geom_factor(params) +
         std::log(c * static_cast<double>(i) + 1.0);
}

double step_prob(const ModelParams& params, std::int64_t i,
                 std::optional<std::int64_t> k) {
  if (i < 1) throw std::domain_error("step_prob: i >= 1");
  if (!k) return std::exp(log_step_prob(params, i));
  if (*k < 0) throw std::domain_error("step_prob: k >= 0");
  // p_{i,k} = 2 beta^i q^k phi_{k, i+1}, identical in both regimes
  if (params.q == 0.0) {
    if (*k > 0) return 0.0;
    return std::exp(std::log(2.0) + static_cast<double>(i) * std::log(params.beta) +
                    log_phi(0, i + 1));
  }
  return std::exp(std::log(2.0) + static_cast<double>(i) * std::log(params.beta) +
                  static_cast<double>(*k) * std::log(params.q) + log_phi(*k, i + 1));
}

StepLaw::StepLaw(const ModelParams& params, std::int64_t i_max)
    : params_(params), i_max_(i_max), truncated_mass_(0.0) {
  if (i_max < 1) throw std::domain_error("StepLaw: i_max >= 1");
  const double c = linear_coeff(params);
  const double geom = std::exp(log_geom_factor(params));
  double p = std::exp(log_step_prob(params, 1));
  double cum = params.alpha + p;
  cum_.reserve(1024);
  cum_.push_back(cum);
  for (std::int64_t i = 1; i < i_max; ++i) {
    const double id = static_cast<double>(i);
    // exact term ratio p_{i+1}/p_i from the factorial closed form
    const double ratio = 0.25 * (2.0 * id) * (2.0 * id - 1.0) / (id * (id + 2.0)) *
                         geom * (c * (id + 1.0) + 1.0) / (c * id + 1.0);
    p *= ratio;
    if (p < 1e-18 && params.supercritical()) break;
    cum += p;
    cum_.push_back(cum);
  }
  truncated_mass_ = std::max(0.0, 1.0 - cum_.back());
}

double StepLaw::normalization(std::int64_t N) const {
  if (N < 1) return params_.alpha;
  const auto idx = static_cast<std::size_t>(N - 1);
  return idx < cum_.size() ? cum_[idx] : cum_.back();
}

std::int64_t StepLaw::sample_swallow_size(RngStream& rng, bool* truncated) const {
  const double u = params_.alpha + rng.next_double() * (1.0 - params_.alpha);
  auto it = std::upper_bound(cum_.begin(), cum_.end(), u);
  if (truncated) *truncated = false;
  if (it == cum_.end()) {
    if (truncated) *truncated = true;
    return static_cast<std::int64_t>(cum_.size());
  }
  return static_cast<std::int64_t>(it - cum_.begin()) + 1;
}

std::int64_t StepLaw::sample_y(RngStream& rng, bool* truncated) const {
  const double u = rng.next_double();
  if (truncated) *truncated = false;
  if (u < params_.alpha) return 0;
  auto it = std::upper_bound(cum_.begin(), cum_.end(), u);
  if (it == cum_.end()) {
    if (truncated) *truncated = true;
    return static_cast<std::int64_t>(cum_.size());
  }
  return static_cast<std::int64_t>(it - cum_.begin()) + 1;
}

}  // namespace hpt
