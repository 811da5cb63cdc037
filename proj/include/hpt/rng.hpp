#pragma once

#include <cstdint>
#include <random>

namespace hpt {

// Deterministic seedable stream. One stream per worker; never shared.
// Replica streams are derived from (master seed, replica index) so a result
// set is invariant under how replicas are scheduled onto threads.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed) : seed_(seed), gen_(mix(seed)) {}

  static RngStream for_replica(std::uint64_t master_seed, std::uint64_t replica) {
    return RngStream(mix(master_seed ^ mix(replica + 0x9E3779B97F4A7C15ULL)));
  }

  std::uint64_t seed() const { return seed_; }

  std::uint64_t next_u64() { return gen_(); }

  // uniform in [0,1); 53-bit mantissa, implementation-independent mapping
  double next_double() {
    return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
  }

  // uniform integer in [0, n)
  std::uint64_t next_below(std::uint64_t n) {
    // rejection to avoid modulo bias
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t x;
    do {
      x = gen_();
    } while (x >= limit);
    return x % n;
  }

  bool bernoulli(double p) { return next_double() < p; }

  // number of failures before the first success, success probability p
  std::uint64_t geometric_failures(double p) {
    std::uint64_t k = 0;
    while (!bernoulli(p)) ++k;
    return k;
  }

 private:
  static std::uint64_t mix(std::uint64_t z) {
    // splitmix64 finalizer
    z += 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  std::uint64_t seed_;
  std::mt19937_64 gen_;
};

}  // namespace hpt
