#include <algorithm>
#include <chrono>
#include <cmath>
#include <ostream>

#include "parallel.hpp"
#include "tinysample/crawl_oracle.hpp"
#include "tinysample/harness.hpp"
#include "tinysample/samplers.hpp"

namespace tinysample {

namespace {

using Clock = std::chrono::steady_clock;

struct Snapshot {
  AccessStats stats;
  std::uint64_t wall_ms = 0;
};

std::size_t largest_component(const Graph& g) {
  std::vector<bool> seen(g.node_count(), false);
  std::size_t best = 0;
  std::vector<NodeId> stack;
  for (NodeId s = 0; s < g.node_count(); ++s) {
    if (seen[s]) continue;
    std::size_t size = 0;
    seen[s] = true;
    stack.push_back(s);
    while (!stack.empty()) {
      NodeId v = stack.back();
      stack.pop_back();
      ++size;
      for (NodeId w : g.neighbors(v)) {
        if (!seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
      }
    }
    best = std::max(best, size);
  }
  return best;
}

void fill_metrics(ConvergenceRecord& rec, const Graph& g, std::span<const NodeId> prefix) {
  const Graph sub = induced_subgraph(g, prefix).graph;
  try {
    const ExponentFit fit = fit_degree_exponent(degree_sequence(sub));
    rec.degree_exponent = fit.slope;
    rec.r_squared = fit.r_squared;
  } catch (const MetricError&) {
  }
  try {
    rec.assortativity = assortativity(sub);
  } catch (const MetricError&) {
  }
  rec.avg_clustering = avg_clustering(sub);
}

std::vector<ConvergenceRecord> run_one(const SamplerSpec& spec, std::uint64_t seed,
                                       const Graph& g, std::span<const double> fractions,
                                       std::span<const std::size_t> sizes, bool timing) {
  std::vector<std::optional<Snapshot>> snaps(sizes.size());
  std::size_t next = 0;
  const auto began = Clock::now();
  EmitObserver observer = [&](std::size_t size, const AccessStats& stats) {
    while (next < sizes.size() && sizes[next] == size) {
      Snapshot s{stats, 0};
      if (timing) {
        s.wall_ms = static_cast<std::uint64_t>(
            std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - began).count());
      }
      snaps[next++] = s;
    }
  };

  const std::size_t h = sizes.back();
  const OracleFactory factory(g);
  CrawlOracle oracle = factory.make();
  SampleOptions opts;
  opts.on_emit = observer;

  SampleTrace trace;
  std::optional<double> alpha;
  AccessStats offset;  // TSE calibration cost, charged to every checkpoint
  std::string note;
  try {
    if (spec.name == "mrw") {
      trace = mrw_sample(oracle, h, seed, opts);
    } else if (spec.name == "brwfb") {
      alpha = spec.param("alpha", 0.0);
      trace = brwfb_sample(oracle, h, *alpha, seed, opts);
    } else if (spec.name == "snowball") {
      trace = snowball_sample(oracle, h, seed, opts);
    } else if (spec.name == "forestfire") {
      trace = forest_fire_sample(oracle, h, spec.param("pf", kDefaultBurnProbability), seed, opts);
    } else {
      TseOptions tse_opts;
      tse_opts.on_emit = observer;
      tse_opts.calibration_epsilon = spec.param("epsilon", 1e-3);
      TseResult result = tiny_sample_extractor(factory, h, seed, tse_opts);
      trace = std::move(result.trace);
      alpha = result.report.alpha;
      for (int s = 0; s < 3; ++s) {
        offset.distinct_visited += result.report.stage_stats[s].distinct_visited;
        offset.neighbor_queries += result.report.stage_stats[s].neighbor_queries;
      }
    }
  } catch (const std::exception& e) {
    note = e.what();
  }

  std::vector<ConvergenceRecord> out;
  AccessStats last;
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    ConvergenceRecord rec;
    rec.sampler = spec.label;
    rec.seed = seed;
    rec.alpha = alpha;
    rec.fraction = fractions[i];
    rec.sample_size = sizes[i];
    if (snaps[i] && note.empty()) {
      last = snaps[i]->stats;
      rec.distinct_visited = offset.distinct_visited + last.distinct_visited;
      rec.neighbor_queries = offset.neighbor_queries + last.neighbor_queries;
      rec.wall_ms = snaps[i]->wall_ms;
      fill_metrics(rec, g, std::span<const NodeId>(trace.nodes).first(sizes[i]));
    } else {
      rec.distinct_visited = offset.distinct_visited + last.distinct_visited;
      rec.neighbor_queries = offset.neighbor_queries + last.neighbor_queries;
      rec.note = note.empty() ? "checkpoint not reached" : note;
    }
    out.push_back(std::move(rec));
  }
  return out;
}

std::string optional_cell(const std::optional<double>& v, const char* missing) {
  return v ? format_double(*v) : std::string(missing);
}

}  // namespace

std::vector<ConvergenceRecord> run_convergence(const ExperimentConfig& cfg, const Graph& g) {
  cfg.validate();
  const double n = g.node_count();
  std::vector<std::size_t> sizes;
  for (double f : cfg.checkpoints) {
    sizes.push_back(std::max<std::size_t>(1, static_cast<std::size_t>(std::llround(f * n))));
  }
  if (largest_component(g) < sizes.back()) {
    throw ConfigError("largest component is smaller than the final checkpoint size " +
                      std::to_string(sizes.back()));
  }

  struct Task {
    const SamplerSpec* spec;
    std::uint64_t seed;
  };
  std::vector<Task> tasks;
  for (const SamplerSpec& spec : cfg.samplers) {
    for (std::uint64_t seed : cfg.seeds) tasks.push_back({&spec, seed});
  }
  std::vector<std::vector<ConvergenceRecord>> per_task(tasks.size());
  detail::parallel_for(tasks.size(), cfg.parallelism, [&](std::size_t i) {
    per_task[i] = run_one(*tasks[i].spec, tasks[i].seed, g, cfg.checkpoints, sizes, cfg.timing);
  });

  std::vector<ConvergenceRecord> records;
  for (auto& chunk : per_task) {
    for (auto& r : chunk) records.push_back(std::move(r));
  }
  std::stable_sort(records.begin(), records.end(), [](const auto& a, const auto& b) {
    if (a.sampler != b.sampler) return a.sampler < b.sampler;
    if (a.seed != b.seed) return a.seed < b.seed;
    return a.fraction < b.fraction;
  });
  return records;
}

void write_convergence_csv(std::ostream& out, std::span<const ConvergenceRecord> records) {
  out << "sampler,seed,alpha,fraction,sample_size,degree_exponent,r_squared,assortativity,"
         "avg_clustering,distinct_visited,neighbor_queries,wall_ms,note\r\n";
  for (const ConvergenceRecord& r : records) {
    out << csv_field(r.sampler) << ',' << r.seed << ','
        << (r.alpha ? format_double(*r.alpha) : std::string()) << ','
        << format_double(r.fraction) << ',' << r.sample_size << ','
        << optional_cell(r.degree_exponent, "nan") << ','
        << optional_cell(r.r_squared, "nan") << ','
        << optional_cell(r.assortativity, "undefined") << ','
        << optional_cell(r.avg_clustering, "nan") << ',' << r.distinct_visited << ','
        << r.neighbor_queries << ',' << r.wall_ms << ',' << csv_field(r.note) << "\r\n";
  }
}

}  // namespace tinysample
