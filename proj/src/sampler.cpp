#include "hpt/sampler.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace hpt {

namespace {

// Picks the split position d in {1, .., m-2} with weight Z_{d+1} Z_{m-d} / Z_m,
// given that the residual mass after the apex branch is 1 - apex_prob.
// The weights concentrate at both ends, so the scan alternates ends.
std::int64_t pick_split(const FreeLaw& law, std::int64_t m, double target, double cum) {
  std::int64_t lo = 1, hi = m - 2;
  std::int64_t last = 1;
  while (lo <= hi) {
    cum += law.split_prob(m, lo);
    last = lo;
    if (cum >= target) return lo;
    if (hi > lo) {
      cum += law.split_prob(m, hi);
      last = hi;
      if (cum >= target) return hi;
    }
    ++lo;
    --hi;
  }
  return last;  // rounding slack: total weight sums to 1 only up to fp error
}

}  // namespace

std::int64_t sample_free_internal_count(std::int64_t m, const FreeLaw& law,
                                        RngStream& rng) {
  if (m < 2) throw std::domain_error("sample_free_internal_count: m >= 2");
  if (law.theta() >= 1.0 / 6.0) {
    throw std::domain_error(
        "sample_free_internal_count: theta >= 1/6, termination not guaranteed");
  }
  if (law.q() == 0.0) return 0;
  std::int64_t count = 0;
  std::vector<std::int64_t> stack{m};
  const double close2 = std::exp(-law.log_z(2));  // 1/Z_2
  while (!stack.empty()) {
    const std::int64_t cur = stack.back();
    stack.pop_back();
    if (cur == 2) {
      if (rng.next_double() < close2) continue;  // glued empty 2-gon
      ++count;
      stack.push_back(3);
      continue;
    }
    const double u = rng.next_double();
    const double apex = law.apex_prob(cur);
    if (u < apex) {
      ++count;
      stack.push_back(cur + 1);
    } else {
      const std::int64_t d = pick_split(law, cur, u, apex);
      stack.push_back(d + 1);
      stack.push_back(cur - d);
    }
  }
  return count;
}

std::int64_t sample_free_internal_count(std::int64_t m, double theta, RngStream& rng) {
  FreeLaw law(theta, m + 64);
  return sample_free_internal_count(m, law, rng);
}

PeelSampler::PeelSampler(const ModelParams& params, std::int64_t i_max)
    : params_(params), law_(params, i_max), free_(params.theta, i_max + 64) {}

PeelEvent PeelSampler::sample_step_shape(RngStream& rng) const {
  PeelEvent ev;
  bool truncated = false;
  const std::int64_t y = law_.sample_y(rng, &truncated);
  if (y == 0) {
    ev.kind = PeelKind::AlphaStep;
    return ev;
  }
  ev.kind = PeelKind::Swallow;
  ev.i = y;
  ev.truncated = truncated;
  ev.side = rng.bernoulli(0.5) ? Side::Left : Side::Right;
  return ev;
}

PeelEvent PeelSampler::sample_step(RngStream& rng) const {
  PeelEvent ev = sample_step_shape(rng);
  if (ev.kind == PeelKind::Swallow) {
    ev.hole_internal_count = sample_free_internal_count(ev.i + 1, free_, rng);
  }
  return ev;
}

std::int64_t PeelSampler::sample_w(RngStream& rng, bool* truncated) const {
  bool trunc = false;
  const std::int64_t y = law_.sample_y(rng, &trunc);
  if (truncated) *truncated = trunc;
  if (y == 0) return 0;  // alpha step: no hole, the 1-gon is empty
  return y + sample_free_internal_count(y + 1, free_, rng);
}

PeelEvent sample_step(const PeelSampler& sampler, RngStream& rng) {
  return sampler.sample_step(rng);
}

}  // namespace hpt
