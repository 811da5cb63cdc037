#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hpt/params.hpp"
#include "hpt/rng.hpp"

namespace hpt {

// p_i: probability of a peeling step of the form (L,i) or (R,i) combined.
// Computed in log space; exact term ratios keep large i stable.
double step_prob(const ModelParams& params, std::int64_t i,
                 std::optional<std::int64_t> k = std::nullopt);

double log_step_prob(const ModelParams& params, std::int64_t i);

// Cumulative table over i for inverse-CDF sampling of swallow sizes.
// Extended up to i_max or until the residual mass drops below 1e-18,
// whichever comes first. Read-only after construction; safe to share.
class StepLaw {
 public:
  StepLaw(const ModelParams& params, std::int64_t i_max = 1'000'000);

  const ModelParams& params() const { return params_; }
  std::int64_t i_max() const { return i_max_; }
  std::int64_t table_size() const { return static_cast<std::int64_t>(cum_.size()); }

  // total probability mass of swallow sizes beyond the table (reported
  // truncation bias; every draw that hits it is flagged)
  double truncated_mass() const { return truncated_mass_; }

  // alpha + sum_{i<=N} p_i
  double normalization(std::int64_t N) const;

  // Draws i >= 1 given that the step is a swallow. Sets *truncated when the
  // draw fell beyond the table and was capped at the largest tabulated i.
  std::int64_t sample_swallow_size(RngStream& rng, bool* truncated = nullptr) const;

  // Convenience: full step draw. Returns 0 for an alpha-step, else i.
  std::int64_t sample_y(RngStream& rng, bool* truncated = nullptr) const;

 private:
  ModelParams params_;
  std::int64_t i_max_;
  std::vector<double> cum_;  // cum_[j] = alpha + sum_{i<=j+1} p_i
  double truncated_mass_;
};

}  // namespace hpt
