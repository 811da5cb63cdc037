#pragma once

#include <cstdint>
#include <memory>

#include "hpt/counting.hpp"
#include "hpt/params.hpp"
#include "hpt/rng.hpp"
#include "hpt/step_law.hpp"

namespace hpt {

enum class PeelKind : std::uint8_t { AlphaStep, Swallow };
enum class Side : std::uint8_t { Left, Right };

// One peeling step outcome. AlphaStep carries no side/size; a Swallow
// encloses a free triangulation of the (i+1)-gon whose internal-vertex
// count is sampled jointly with the event.
struct PeelEvent {
  PeelKind kind = PeelKind::AlphaStep;
  Side side = Side::Left;
  std::int64_t i = 0;                    // vertices swallowed along the boundary
  std::int64_t hole_internal_count = 0;  // internal vertices enclosed
  bool truncated = false;                // i was capped at i_max
};

// Internal-vertex count of a free triangulation of an m-gon, drawn by the
// recursive polygon peeling justified by the partition-function identity
// Z_m = q Z_{m+1} + sum_d Z_{d+1} Z_{m-d} (Z_2 = 1 + q Z_3).
// Terminates almost surely for theta < 1/6; throws for theta >= 1/6.
std::int64_t sample_free_internal_count(std::int64_t m, const FreeLaw& law,
                                        RngStream& rng);

// Convenience overload building a temporary FreeLaw (slow in a loop).
std::int64_t sample_free_internal_count(std::int64_t m, double theta, RngStream& rng);

// Bundles the per-parameter caches the samplers need. Read-only after
// construction; one instance may be shared by many worker streams.
class PeelSampler {
 public:
  explicit PeelSampler(const ModelParams& params, std::int64_t i_max = 1'000'000);

  const ModelParams& params() const { return params_; }
  const StepLaw& step_law() const { return law_; }
  const FreeLaw& free_law() const { return free_; }
  std::int64_t i_max() const { return law_.i_max(); }

  // Full peeling step: alpha with probability alpha, otherwise a Swallow of
  // size i (each side with probability p_i/2) with its hole count.
  PeelEvent sample_step(RngStream& rng) const;

  // As sample_step but without drawing the hole count (boundary-only users).
  PeelEvent sample_step_shape(RngStream& rng) const;

  // Appendix variable W = Y + I_{Y+1}: Y = 0 with probability alpha, i with
  // probability p_i; plus the free internal count of the (Y+1)-gon.
  std::int64_t sample_w(RngStream& rng, bool* truncated = nullptr) const;

 private:
  ModelParams params_;
  StepLaw law_;
  FreeLaw free_;
};

PeelEvent sample_step(const PeelSampler& sampler, RngStream& rng);

}  // namespace hpt
