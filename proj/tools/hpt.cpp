// Command-line surface for the half-planar triangulation laboratory.
//
// Subcommands: constants, enumerate, sample-map, hull-stats, percolation,
// walk, tails. Every run is reproducible from its flags plus --seed; the
// full configuration is echoed into the JSON summary and the CSV headers
// are schema-versioned. Replicas fan out over OpenMP workers keyed by
// replica index, so outputs do not depend on the worker count (override it
// with the HPT_WORKERS environment variable).
//
// Exit codes: 0 success, 1 I/O failure, 2 usage error, 3 resource cap hit
// (partial output is still written).

#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#if defined(_OPENMP)
#include <omp.h>
#endif

#include "CLI11.hpp"
#include "json.hpp"

#include "hpt/counting.hpp"
#include "hpt/explorer.hpp"
#include "hpt/fit.hpp"
#include "hpt/map.hpp"
#include "hpt/parallel.hpp"
#include "hpt/params.hpp"
#include "hpt/percolation.hpp"
#include "hpt/rng.hpp"
#include "hpt/sampler.hpp"
#include "hpt/step_law.hpp"
#include "hpt/walker.hpp"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitIo = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResourceCap = 3;

void apply_worker_override() {
  if (const char* env = std::getenv("HPT_WORKERS")) {
    const int workers = std::atoi(env);
    if (workers > 0) {
#if defined(_OPENMP)
      omp_set_num_threads(workers);
#endif
    }
  }
}

// Writes `text` to `path`, or to stdout when the path is empty.
int write_output(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return kExitOk;
  }
  std::ofstream os(path, std::ios::binary);
  if (!os) {
    std::cerr << "error: cannot open " << path << " for writing\n";
    return kExitIo;
  }
  os << text;
  if (!os) {
    std::cerr << "error: write to " << path << " failed\n";
    return kExitIo;
  }
  return kExitOk;
}

int emit(const std::string& data_path, const std::string& data,
         const std::string& summary_path, const json& summary, bool capped) {
  if (!data.empty()) {
    const int rc = write_output(data_path, data);
    if (rc != kExitOk) return rc;
  }
  const int rc = write_output(summary_path, summary.dump(2) + "\n");
  if (rc != kExitOk) return rc;
  return capped ? kExitResourceCap : kExitOk;
}

json params_json(const hpt::ModelParams& p) {
  json j{{"alpha", p.alpha},
         {"regime", hpt::to_string(p.regime)},
         {"beta", p.beta},
         {"q", p.q},
         {"theta", p.theta}};
  if (p.p_c) j["p_c"] = *p.p_c;
  if (p.p_u) j["p_u"] = *p.p_u;
  if (p.supercritical()) {
    const hpt::DriftConstants d = hpt::analytic_drifts(p.alpha);
    j["boundary_drift"] = d.boundary_drift;
  }
  if (p.subcritical()) {
    j["c_alpha"] = hpt::stable_normalizers(p.alpha, 1).c_alpha;
  }
  return j;
}

struct CommonOpts {
  double alpha = 0.5;
  std::uint64_t seed = 1;
  std::int64_t i_max = 1'000'000;
  std::string out;      // bulk data file ("" = stdout)
  std::string summary;  // JSON summary file ("" = stdout)
};

void add_common(CLI::App* cmd, CommonOpts& c, bool with_alpha = true) {
  if (with_alpha) {
    cmd->add_option("--alpha", c.alpha, "model parameter in [0, 1)")->required();
  }
  cmd->add_option("--seed", c.seed, "master seed (replica streams derive from it)");
  cmd->add_option("--i-max", c.i_max, "swallow-size table cutoff");
  cmd->add_option("--out", c.out, "data file path (default: stdout)");
  cmd->add_option("--summary", c.summary, "JSON summary path (default: stdout)");
}

json config_json(const std::string& subcommand, const CommonOpts& c) {
  return json{{"subcommand", subcommand},
              {"alpha", c.alpha},
              {"seed", c.seed},
              {"i_max", c.i_max}};
}

// ---------------------------------------------------------------- constants

int run_constants(const CommonOpts& c, std::optional<double> p) {
  const hpt::ModelParams mp = hpt::model_params(c.alpha);
  json out = params_json(mp);
  out["schema"] = "constants-v1";
  out["config"] = config_json("constants", c);
  if (p) {
    out["p"] = *p;
    if (mp.supercritical()) {
      const hpt::DriftConstants d = hpt::analytic_drifts(c.alpha, p);
      if (d.perc_drift) out["perc_drift"] = *d.perc_drift;
    }
  }
  return emit("", "", c.summary, out, false);
}

// ---------------------------------------------------------------- sample-map

int run_sample_map(const CommonOpts& c, std::int64_t radius, std::int64_t max_volume) {
  const hpt::PeelSampler sampler(hpt::model_params(c.alpha), c.i_max);
  hpt::RngStream rng(c.seed);
  hpt::ExploreOptions opts;
  opts.radius = radius;
  opts.with_geometry = true;
  opts.max_volume = max_volume;
  const hpt::ExploreResult res = hpt::explore(sampler, opts, rng);

  std::ostringstream edge_list;
  if (res.map) res.map->export_edge_list(edge_list);

  json summary{{"schema", "sample-map-v1"},
               {"config", config_json("sample-map", c)},
               {"radius", radius},
               {"max_volume", max_volume},
               {"radii_completed", res.trace.radii.size()},
               {"steps", res.trace.steps},
               {"truncated", res.trace.truncated},
               {"vertices", res.map ? res.map->vertex_count() : 0},
               {"edges", res.map ? res.map->edge_count() : 0},
               {"faces", res.map ? res.map->face_count() : 0}};
  summary["config"]["radius"] = radius;
  summary["config"]["max_volume"] = max_volume;
  return emit(c.out, edge_list.str(), c.summary, summary, res.trace.truncated);
}

// ---------------------------------------------------------------- hull-stats

int run_hull_stats(const CommonOpts& c, std::int64_t radius, std::int64_t replicas,
                   std::int64_t max_volume) {
  const hpt::PeelSampler sampler(hpt::model_params(c.alpha), c.i_max);
  std::vector<hpt::HullTrace> traces(static_cast<std::size_t>(replicas));
  hpt::for_each_replica(replicas, c.seed, [&](std::int64_t rep, hpt::RngStream& rng) {
    hpt::ExploreOptions opts;
    opts.radius = radius;
    opts.max_volume = max_volume;
    traces[static_cast<std::size_t>(rep)] = hpt::explore(sampler, opts, rng).trace;
  });

  std::ostringstream csv;
  csv << "# schema=hull-stats-v1\n"
      << "# alpha=" << c.alpha << " radius=" << radius << " replicas=" << replicas
      << " seed=" << c.seed << " i_max=" << c.i_max << " max_volume=" << max_volume
      << "\n"
      << "replica,r,tau,boundary,volume,delta_tau,resistance_bound,"
         "boundary_over_volume\n";
  bool any_truncated = false;
  std::int64_t completed = 0;
  for (std::int64_t rep = 0; rep < replicas; ++rep) {
    const hpt::HullTrace& tr = traces[static_cast<std::size_t>(rep)];
    any_truncated = any_truncated || tr.truncated;
    if (!tr.truncated) ++completed;
    const std::vector<double> resistance = hpt::resistance_lower_bound(tr);
    for (std::size_t k = 0; k < tr.radii.size(); ++k) {
      const hpt::RadiusRecord& rec = tr.radii[k];
      csv << rep << ',' << rec.r << ',' << rec.tau << ',' << rec.boundary << ','
          << rec.volume << ',' << rec.delta_tau << ',' << resistance[k] << ','
          << (rec.volume > 0
                  ? static_cast<double>(rec.boundary) / static_cast<double>(rec.volume)
                  : 0.0)
          << '\n';
    }
  }

  json summary{{"schema", "hull-stats-v1"},
               {"config", config_json("hull-stats", c)},
               {"replicas", replicas},
               {"completed", completed},
               {"truncated_replicas", replicas - completed}};
  summary["config"]["radius"] = radius;
  summary["config"]["replicas"] = replicas;
  summary["config"]["max_volume"] = max_volume;
  return emit(c.out, csv.str(), c.summary, summary, any_truncated);
}

// ---------------------------------------------------------------- percolation

int run_percolation(const CommonOpts& c, double p, std::int64_t trials,
                    std::int64_t cap, bool do_estimate_pc, std::int64_t density_k) {
  const hpt::ModelParams mp = hpt::model_params(c.alpha);
  hpt::require_supercritical(mp);
  const hpt::StepLaw law(mp, c.i_max);
  hpt::RngStream rng(c.seed);

  json summary{{"schema", "percolation-v1"}, {"config", config_json("percolation", c)}};
  summary["config"]["p"] = p;
  summary["config"]["trials"] = trials;
  summary["config"]["cap"] = cap;
  summary["p_c_analytic"] = *mp.p_c;
  summary["p_u_analytic"] = *mp.p_u;

  std::ostringstream csv;
  csv << "# schema=percolation-v1\n"
      << "# alpha=" << c.alpha << " trials=" << trials << " cap=" << cap
      << " seed=" << c.seed << "\n"
      << "p,survival\n";

  if (do_estimate_pc) {
    const hpt::PcEstimate est = hpt::estimate_pc(law, rng, trials, cap);
    summary["p_c_estimate"] = est.p_c;
    summary["p_c_half_width"] = est.half_width;
    summary["survival_at_pc"] = est.survival_at_pc;
  } else {
    std::int64_t survived = 0;
    for (std::int64_t t = 0; t < trials; ++t) {
      if (hpt::root_cluster_walk(law, p, rng, cap).survived) ++survived;
    }
    const double freq = static_cast<double>(survived) / static_cast<double>(trials);
    csv << p << ',' << freq << '\n';
    summary["survival"] = freq;
  }
  if (density_k > 0) {
    const hpt::DensityEstimate d =
        hpt::interface_density(law, p, rng, density_k, trials, cap);
    summary["interface_density"] = {{"rho_hat", d.rho_hat},
                                    {"ek_over_k", d.ek_over_k},
                                    {"wk_inf_over_k", d.wk_inf_over_k},
                                    {"max_wb_gap", d.max_wb_gap}};
  }
  return emit(c.out, do_estimate_pc && density_k <= 0 ? "" : csv.str(), c.summary,
              summary, false);
}

// ---------------------------------------------------------------- walk

int run_walk(const CommonOpts& c, std::int64_t radius, std::int64_t steps,
             std::int64_t walks, bool absorb, std::int64_t max_volume) {
  const hpt::PeelSampler sampler(hpt::model_params(c.alpha), c.i_max);
  hpt::RngStream rng(c.seed);
  hpt::ExploreOptions opts;
  opts.radius = radius;
  opts.with_geometry = true;
  opts.max_volume = max_volume;
  const hpt::ExploreResult res = hpt::explore(sampler, opts, rng);
  const hpt::BoundaryMode mode =
      absorb ? hpt::BoundaryMode::Absorb : hpt::BoundaryMode::Ordinary;

  std::ostringstream csv;
  csv << "# schema=walk-v1\n"
      << "# alpha=" << c.alpha << " radius=" << radius << " steps=" << steps
      << " walks=" << walks << " seed=" << c.seed
      << " mode=" << (absorb ? "absorb" : "ordinary") << "\n"
      << "walk,time,displacement\n";
  std::int64_t frontier_hits = 0;
  double mean_steps = 0.0;
  if (res.map) {
    for (std::int64_t w = 0; w < walks; ++w) {
      const hpt::WalkRecord rec = hpt::run_srw(*res.map, steps, rng, mode);
      frontier_hits += rec.hit_frontier ? 1 : 0;
      mean_steps += static_cast<double>(rec.steps) / static_cast<double>(walks);
      for (std::size_t k = 0; k < rec.dyadic_times.size(); ++k) {
        csv << w << ',' << rec.dyadic_times[k] << ',' << rec.displacement[k] << '\n';
      }
    }
  }

  json summary{{"schema", "walk-v1"},
               {"config", config_json("walk", c)},
               {"truncated_exploration", res.trace.truncated},
               {"frontier_hits", frontier_hits},
               {"mean_steps", mean_steps}};
  summary["config"]["radius"] = radius;
  summary["config"]["steps"] = steps;
  summary["config"]["walks"] = walks;
  summary["config"]["mode"] = absorb ? "absorb" : "ordinary";
  return emit(c.out, csv.str(), c.summary, summary, res.trace.truncated);
}

// ---------------------------------------------------------------- tails

int run_tails(const CommonOpts& c, std::int64_t samples, double x) {
  const hpt::ModelParams mp = hpt::model_params(c.alpha);
  if (!mp.subcritical()) {
    std::cerr << "error: tails requires subcritical alpha (< 2/3)\n";
    return kExitUsage;
  }
  const hpt::PeelSampler sampler(mp, c.i_max);
  hpt::RngStream rng(c.seed);
  std::int64_t above = 0;
  std::int64_t truncations = 0;
  double truncated_sum = 0.0;
  for (std::int64_t t = 0; t < samples; ++t) {
    bool trunc = false;
    const auto w = static_cast<double>(sampler.sample_w(rng, &trunc));
    truncations += trunc ? 1 : 0;
    if (w > x)
      ++above;
    else
      truncated_sum += w;
  }
  const double tail_hat =
      std::sqrt(x) * static_cast<double>(above) / static_cast<double>(samples);
  const double c_alpha = hpt::stable_normalizers(c.alpha, 1).c_alpha;

  json summary{{"schema", "tails-v1"},
               {"config", config_json("tails", c)},
               {"x", x},
               {"samples", samples},
               {"sqrt_x_tail_hat", tail_hat},
               {"c_alpha", c_alpha},
               {"relative_error", std::abs(tail_hat - c_alpha) / c_alpha},
               {"truncated_mean", truncated_sum / static_cast<double>(samples)},
               {"truncated_mean_expected", c_alpha * std::sqrt(x)},
               {"law_truncations", truncations}};
  summary["config"]["samples"] = samples;
  summary["config"]["x"] = x;
  return emit("", "", c.summary, summary, false);
}

}  // namespace

int main(int argc, char** argv) {
  apply_worker_override();

  CLI::App app{"half-planar triangulation laboratory"};
  app.require_subcommand(1);

  CommonOpts c;

  auto* constants = app.add_subcommand("constants", "analytic constants for one alpha");
  std::optional<double> perc_p;
  add_common(constants, c);
  constants->add_option("--p", perc_p, "percolation parameter for drift constants");

  auto* enumerate = app.add_subcommand("enumerate", "exact triangulation counts");
  std::int64_t enum_n = 0, enum_m = 2;
  enumerate->add_option("--n", enum_n, "internal vertices")->required();
  enumerate->add_option("--m", enum_m, "boundary length (m >= 2)")->required();

  auto* sample_map = app.add_subcommand("sample-map", "export one explored map");
  std::int64_t radius = 10, replicas = 100, max_volume = 10'000'000;
  add_common(sample_map, c);
  sample_map->add_option("--radius", radius, "hull radius to explore");
  sample_map->add_option("--max-volume", max_volume, "vertex cap (resource limit)");

  auto* hull_stats = app.add_subcommand("hull-stats", "hull growth series over replicas");
  add_common(hull_stats, c);
  hull_stats->add_option("--radius", radius, "hull radius to explore");
  hull_stats->add_option("--replicas", replicas, "independent replicas");
  hull_stats->add_option("--max-volume", max_volume, "vertex cap per replica");

  auto* percolation = app.add_subcommand("percolation", "boundary percolation walks");
  double p = 0.5;
  std::int64_t trials = 1000, cap = 10'000, density_k = 0;
  bool do_estimate_pc = false;
  add_common(percolation, c);
  percolation->add_option("--p", p, "black probability");
  percolation->add_option("--trials", trials, "Monte Carlo trials");
  percolation->add_option("--cap", cap, "survival cap for the cluster walk");
  percolation->add_flag("--estimate-pc", do_estimate_pc, "bisect for the threshold");
  percolation->add_option("--density-k", density_k,
                          "boundary stretch for interface density (0 = skip)");

  auto* walk = app.add_subcommand("walk", "random walks on one explored map");
  std::int64_t steps = 1024, walks = 100;
  bool absorb = false;
  add_common(walk, c);
  walk->add_option("--radius", radius, "hull radius to explore first");
  walk->add_option("--steps", steps, "maximum walk length");
  walk->add_option("--walks", walks, "number of walks");
  walk->add_option("--max-volume", max_volume, "vertex cap for the exploration");
  walk->add_flag("--absorb", absorb, "absorb on the original boundary");

  auto* tails = app.add_subcommand("tails", "tail of W = Y + I_{Y+1}");
  std::int64_t samples = 1'000'000;
  double tail_x = 10'000.0;
  add_common(tails, c);
  tails->add_option("--samples", samples, "number of draws");
  tails->add_option("--x", tail_x, "tail threshold");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (constants->parsed()) return run_constants(c, perc_p);
    if (enumerate->parsed()) {
      std::ostringstream ss;
      ss << hpt::phi(enum_n, enum_m) << "\n";
      return write_output("", ss.str());
    }
    if (sample_map->parsed()) return run_sample_map(c, radius, max_volume);
    if (hull_stats->parsed()) return run_hull_stats(c, radius, replicas, max_volume);
    if (percolation->parsed())
      return run_percolation(c, p, trials, cap, do_estimate_pc, density_k);
    if (walk->parsed()) return run_walk(c, radius, steps, walks, absorb, max_volume);
    if (tails->parsed()) return run_tails(c, samples, tail_x);
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  }
  return kExitUsage;
}
