#pragma once

#include <cstdint>

#include "hpt/rng.hpp"

namespace hpt {

// Replica fan-out. Each replica gets a stream derived from (master seed,
// replica index), so results are identical no matter how many workers run
// or how the schedule interleaves. body(replica_index, rng) must write only
// to replica-indexed slots.
template <typename Body>
void for_each_replica_serial(std::int64_t replicas, std::uint64_t master_seed, Body&& body) {
  for (std::int64_t r = 0; r < replicas; ++r) {
    RngStream rng = RngStream::for_replica(master_seed, static_cast<std::uint64_t>(r));
    body(r, rng);
  }
}

template <typename Body>
void for_each_replica(std::int64_t replicas, std::uint64_t master_seed, Body&& body) {
#if defined(_OPENMP)
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t r = 0; r < replicas; ++r) {
    RngStream rng = RngStream::for_replica(master_seed, static_cast<std::uint64_t>(r));
    body(r, rng);
  }
#else
  for_each_replica_serial(replicas, master_seed, static_cast<Body&&>(body));
#endif
}

}  // namespace hpt
