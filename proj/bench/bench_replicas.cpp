// Compares the OpenMP replica fan-out against the serial reference on a
// representative workload (hull exploration) and verifies that both produce
// identical results, since replica streams are keyed by replica index.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <vector>

#if defined(_OPENMP)
#include <omp.h>
#endif

#include "hpt/explorer.hpp"
#include "hpt/parallel.hpp"
#include "hpt/params.hpp"
#include "hpt/sampler.hpp"

namespace {

struct Workload {
  std::vector<std::int64_t> tau;
  std::vector<std::int64_t> volume;
};

template <typename Runner>
Workload run(const hpt::PeelSampler& sampler, std::int64_t replicas, Runner&& runner) {
  Workload w;
  w.tau.assign(static_cast<std::size_t>(replicas), 0);
  w.volume.assign(static_cast<std::size_t>(replicas), 0);
  runner(replicas, 20240501ULL, [&](std::int64_t rep, hpt::RngStream& rng) {
    hpt::ExploreOptions opts;
    opts.radius = 30;
    opts.max_volume = 2'000'000;
    const hpt::ExploreResult res = hpt::explore(sampler, opts, rng);
    if (!res.trace.radii.empty()) {
      w.tau[static_cast<std::size_t>(rep)] = res.trace.radii.back().tau;
      w.volume[static_cast<std::size_t>(rep)] = res.trace.radii.back().volume;
    }
  });
  return w;
}

}  // namespace

int main() {
  const std::int64_t replicas = 64;
  const hpt::PeelSampler sampler(hpt::model_params(0.3), 1'000'000);

  using clock = std::chrono::steady_clock;

  const auto t0 = clock::now();
  const Workload serial = run(sampler, replicas, [](auto n, auto seed, auto&& body) {
    hpt::for_each_replica_serial(n, seed, body);
  });
  const auto t1 = clock::now();
  const Workload parallel = run(sampler, replicas, [](auto n, auto seed, auto&& body) {
    hpt::for_each_replica(n, seed, body);
  });
  const auto t2 = clock::now();

  const double serial_ms =
      std::chrono::duration<double, std::milli>(t1 - t0).count();
  const double parallel_ms =
      std::chrono::duration<double, std::milli>(t2 - t1).count();

  int threads = 1;
#if defined(_OPENMP)
  threads = omp_get_max_threads();
#endif

  bool identical = serial.tau == parallel.tau && serial.volume == parallel.volume;
  std::printf("replicas:      %lld (hull exploration, alpha = 0.3, radius 30)\n",
              static_cast<long long>(replicas));
  std::printf("threads:       %d\n", threads);
  std::printf("serial:        %.1f ms\n", serial_ms);
  std::printf("parallel:      %.1f ms\n", parallel_ms);
  std::printf("speedup:       %.2fx\n", serial_ms / parallel_ms);
  std::printf("results match: %s\n", identical ? "yes" : "NO");
  return identical ? 0 : 1;
}
