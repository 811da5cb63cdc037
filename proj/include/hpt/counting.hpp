#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <vector>

namespace hpt {

using BigCount = boost::multiprecision::cpp_int;

// Number of rooted triangulations of an m-gon with n internal vertices,
// exact. phi(0,2) = 1 by convention (the empty, glued 2-gon).
BigCount phi(std::int64_t n, std::int64_t m);

// log phi(n,m), double precision, for probability computations at scales
// where the exact value does not fit in machine words.
double log_phi(std::int64_t n, std::int64_t m);

// Partition function Z_m(q) of free triangulations, closed form with
// q = theta(1-2theta)^2, theta in [0, 1/6].
double partition_Z(std::int64_t m, double theta);
double log_partition_Z(std::int64_t m, double theta);

// Mean and variance of the internal-vertex count of a free triangulation
// of an m-gon. Requires theta < 1/6 strictly (the variance diverges there).
struct Moments {
  double mean;
  double variance;
};
Moments free_moments(std::int64_t m, double theta);

// Tail constant c_alpha of Y + I_{Y+1} (subcritical alpha only) and the
// stable-law normalizers a_n ~ b_n ~ c_alpha^2 n^2.
struct StableNormalizers {
  double c_alpha;
  double a_n;
  double b_n;
};
StableNormalizers stable_normalizers(double alpha, std::int64_t n);

// Density of the stable-1/2 (Levy) law: (2 pi x^3)^{-1/2} exp(-1/(2x)), x>0.
double levy_density(double x);

// Probability that a fixed simply connected triangulation with i boundary
// vertices on the map boundary, j other boundary vertices and k internal
// vertices appears as a sub-map: alpha^{k+j} beta^{i+k-2}.
double submap_probability(std::int64_t i, std::int64_t j, std::int64_t k,
                          double alpha, double beta);

// Cached log Z_m table for a fixed theta, shared read-only by samplers.
class FreeLaw {
 public:
  FreeLaw(double theta, std::int64_t max_m);

  double theta() const { return theta_; }
  double q() const { return q_; }
  std::int64_t max_m() const { return static_cast<std::int64_t>(log_z_.size()) - 1; }

  double log_z(std::int64_t m) const {
    if (m <= max_m() + 1) return log_z_[static_cast<std::size_t>(m)];
    return log_partition_Z(m, theta_);
  }
  // probability that peeling an m-gon reveals an internal apex
  double apex_prob(std::int64_t m) const;
  // weight ratio Z_{d+1} Z_{m-d} / Z_m of a split at position d
  double split_prob(std::int64_t m, std::int64_t d) const;

 private:
  double theta_;
  double q_;
  double log_q_;  // -inf when q == 0
  std::vector<double> log_z_;
};

// Lazily grown table of log k! shared per thread.
double log_factorial(std::int64_t k);

}  // namespace hpt
