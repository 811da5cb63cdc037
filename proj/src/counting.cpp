#include "hpt/counting.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "hpt/params.hpp"

namespace hpt {

namespace {

BigCount factorial(std::int64_t k) {
  BigCount f = 1;
  for (std::int64_t i = 2; i <= k; ++i) f *= i;
  return f;
}

void check_phi_domain(std::int64_t n, std::int64_t m) {
  if (m < 2 || n < 0) {
    throw std::domain_error("phi: requires m >= 2 and n >= 0");
  }
}

}  // namespace

double log_factorial(std::int64_t k) {
  thread_local std::vector<double> table{0.0, 0.0};  // log 0! , log 1!
  auto idx = static_cast<std::size_t>(k);
  while (table.size() <= idx) {
    table.push_back(table.back() + std::log(static_cast<double>(table.size())));
  }
  return table[idx];
}

BigCount phi(std::int64_t n, std::int64_t m) {
  check_phi_domain(n, m);
  const std::int64_t M = m - 2;
  // 2^{n+1} (2M+1)! (2M+3n)! / (M!^2 n! (2M+2n+2)!)
  BigCount num = BigCount(1) << (n + 1);
  num *= factorial(2 * M + 1);
  num *= factorial(2 * M + 3 * n);
  BigCount den = factorial(M);
  den *= den;
  den *= factorial(n);
  den *= factorial(2 * M + 2 * n + 2);
  return num / den;
}

double log_phi(std::int64_t n, std::int64_t m) {
  check_phi_domain(n, m);
  const std::int64_t M = m - 2;
  return (static_cast<double>(n) + 1.0) * std::log(2.0) + log_factorial(2 * M + 1) +
         log_factorial(2 * M + 3 * n) - 2.0 * log_factorial(M) - log_factorial(n) -
         log_factorial(2 * M + 2 * n + 2);
}

double log_partition_Z(std::int64_t m, double theta) {
  if (m < 2) throw std::domain_error("partition_Z: m >= 2");
  if (theta < 0.0 || theta > 1.0 / 6.0) {
    throw std::domain_error("partition_Z: theta in [0, 1/6]");
  }
  const std::int64_t M = m - 2;
  // Z_{M+2} = ((1-6theta) M + 2 - 6theta) (2M)! / (M! (M+2)!) (1-2theta)^{-(2M+2)}
  const double lead = (1.0 - 6.0 * theta) * static_cast<double>(M) + 2.0 - 6.0 * theta;
  return std::log(lead) + log_factorial(2 * M) - log_factorial(M) - log_factorial(M + 2) -
         (2.0 * static_cast<double>(M) + 2.0) * std::log1p(-2.0 * theta);
}

double partition_Z(std::int64_t m, double theta) {
  return std::exp(log_partition_Z(m, theta));
}

Moments free_moments(std::int64_t m, double theta) {
  if (m < 2) throw std::domain_error("free_moments: m >= 2");
  if (theta < 0.0 || theta >= 1.0 / 6.0) {
    throw std::domain_error("free_moments: theta in [0, 1/6), variance diverges at 1/6");
  }
  const double md = static_cast<double>(m);
  const double denom = (1.0 - 6.0 * theta) * md + 6.0 * theta;
  Moments r{};
  r.mean = (md - 1.0) * (2.0 * md - 3.0) * 2.0 * theta / denom;
  // q d/dq of the mean, using dq/dtheta = (1-2 theta)(1-6 theta)
  r.variance = 2.0 * theta * (md - 1.0) * (2.0 * md - 3.0) * md * (1.0 - 2.0 * theta) /
               (denom * denom * (1.0 - 6.0 * theta));
  return r;
}

StableNormalizers stable_normalizers(double alpha, std::int64_t n) {
  if (!(alpha >= 0.0 && alpha < 2.0 / 3.0)) {
    throw std::domain_error("stable_normalizers: requires subcritical alpha");
  }
  const ModelParams p = model_params(alpha);
  const double theta = p.theta;
  StableNormalizers s{};
  s.c_alpha = (1.0 - 1.5 * alpha) * std::sqrt(1.0 - 2.0 * theta) /
              std::sqrt(M_PI * (1.0 - 6.0 * theta));
  const double nd = static_cast<double>(n);
  s.a_n = s.c_alpha * s.c_alpha * nd * nd;
  s.b_n = s.a_n;
  return s;
}

double levy_density(double x) {
  if (x <= 0.0) return 0.0;
  return std::exp(-0.5 / x) / std::sqrt(2.0 * M_PI * x * x * x);
}

double submap_probability(std::int64_t i, std::int64_t j, std::int64_t k,
                          double alpha, double beta) {
  if (i + j < 2 || i < 0 || j < 0 || k < 0) {
    throw std::domain_error("submap_probability: boundary size i + j >= 2 required");
  }
  return std::pow(alpha, static_cast<double>(k + j)) *
         std::pow(beta, static_cast<double>(i + k - 2));
}

FreeLaw::FreeLaw(double theta, std::int64_t max_m) : theta_(theta) {
  if (theta < 0.0 || theta > 1.0 / 6.0) {
    throw std::domain_error("FreeLaw: theta in [0, 1/6]");
  }
  q_ = theta * (1.0 - 2.0 * theta) * (1.0 - 2.0 * theta);
  log_q_ = q_ > 0.0 ? std::log(q_) : -std::numeric_limits<double>::infinity();
  if (max_m < 3) max_m = 3;
  log_z_.resize(static_cast<std::size_t>(max_m) + 2);
  log_z_[0] = log_z_[1] = 0.0;  // unused
  for (std::int64_t m = 2; m <= max_m + 1; ++m) {
    log_z_[static_cast<std::size_t>(m)] = log_partition_Z(m, theta);
  }
}

double FreeLaw::apex_prob(std::int64_t m) const {
  if (q_ == 0.0) return 0.0;
  return std::exp(log_q_ + log_z(m + 1) - log_z(m));
}

double FreeLaw::split_prob(std::int64_t m, std::int64_t d) const {
  return std::exp(log_z(d + 1) + log_z(m - d) - log_z(m));
}

}  // namespace hpt
