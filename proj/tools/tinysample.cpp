// tinysample: generate graphs, draw samples, measure them, run experiments.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <unordered_map>

#include "tinysample/crawl_oracle.hpp"
#include "tinysample/edge_list.hpp"
#include "tinysample/generator.hpp"
#include "tinysample/harness.hpp"
#include "tinysample/kernels.hpp"
#include "tinysample/metrics.hpp"
#include "tinysample/samplers.hpp"

using namespace tinysample;

namespace {

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  return out;
}

void write_kv(std::ostream& out, const std::string& key, const std::string& value) {
  out << key << '=' << value << '\n';
}

LoadedGraph load_graph(const std::string& path) {
  LoadedGraph loaded = load_edge_list(path);
  if (loaded.stats.self_loops_dropped > 0) {
    std::cerr << "warning: dropped " << loaded.stats.self_loops_dropped << " self-loop(s)\n";
  }
  return loaded;
}

int cmd_generate(std::uint32_t nodes, std::uint32_t m, std::uint64_t seed,
                 const std::string& out) {
  save_edge_list(generate_ba({nodes, m, seed}), out);
  return 0;
}

struct SampleArgs {
  std::string graph, algo, out_nodes, out_stats;
  std::size_t size = 0;
  double alpha = 0.0;
  double pf = kDefaultBurnProbability;
  std::optional<std::uint64_t> start;
  std::uint64_t seed = 0;
};

int cmd_sample(const SampleArgs& a) {
  const LoadedGraph loaded = load_graph(a.graph);
  SampleOptions opts;
  if (a.start) {
    std::optional<NodeId> internal;
    for (NodeId i = 0; i < loaded.external_ids.size(); ++i) {
      if (loaded.external_ids[i] == *a.start) internal = i;
    }
    if (!internal) throw std::runtime_error("start id " + std::to_string(*a.start) + " not in graph");
    opts.start = internal;
  }

  const OracleFactory factory(loaded.graph);
  CrawlOracle oracle = factory.make();
  SampleTrace trace;
  std::optional<TseReport> report;
  if (a.algo == "mrw") {
    trace = mrw_sample(oracle, a.size, a.seed, opts);
  } else if (a.algo == "brwfb") {
    trace = brwfb_sample(oracle, a.size, a.alpha, a.seed, opts);
  } else if (a.algo == "snowball") {
    trace = snowball_sample(oracle, a.size, a.seed, opts);
  } else if (a.algo == "forestfire") {
    trace = forest_fire_sample(oracle, a.size, a.pf, a.seed, opts);
  } else {
    TseOptions tse_opts;
    tse_opts.start = opts.start;
    TseResult r = tiny_sample_extractor(factory, a.size, a.seed, tse_opts);
    trace = std::move(r.trace);
    report = r.report;
  }

  auto nodes_out = open_out(a.out_nodes);
  for (NodeId v : trace.nodes) nodes_out << loaded.external_ids[v] << '\n';

  auto stats_out = open_out(a.out_stats);
  write_kv(stats_out, "sampler", trace.sampler_label);
  write_kv(stats_out, "seed", std::to_string(trace.rng_seed));
  write_kv(stats_out, "sample_size", std::to_string(trace.nodes.size()));
  write_kv(stats_out, "distinct_visited", std::to_string(trace.stats.distinct_visited));
  write_kv(stats_out, "neighbor_queries", std::to_string(trace.stats.neighbor_queries));
  write_kv(stats_out, "degree_queries", std::to_string(trace.stats.degree_queries));
  if (trace.alpha) write_kv(stats_out, "alpha_used", format_double(*trace.alpha));
  if (report) {
    write_kv(stats_out, "D", format_double(report->mrw_fit.slope));
    write_kv(stats_out, "D0", format_double(report->fit_alpha0.slope));
    write_kv(stats_out, "D1", format_double(report->fit_alpha1.slope));
    write_kv(stats_out, "total_distinct_visited", std::to_string(report->total_distinct_visited));
    write_kv(stats_out, "total_neighbor_queries", std::to_string(report->total_neighbor_queries));
  }
  return 0;
}

int cmd_metrics(const std::string& graph_path, const std::string& ccdf_out) {
  const LoadedGraph loaded = load_graph(graph_path);
  const Graph& g = loaded.graph;
  const auto degrees = degree_sequence(g);
  std::ostream& out = std::cout;
  write_kv(out, "nodes", std::to_string(g.node_count()));
  write_kv(out, "edges", std::to_string(g.edge_count()));
  try {
    ExponentFit fit = fit_degree_exponent(degrees);
    write_kv(out, "degree_exponent", format_double(fit.slope));
    write_kv(out, "r_squared", format_double(fit.r_squared));
  } catch (const MetricError&) {
    write_kv(out, "degree_exponent", "nan");
    write_kv(out, "r_squared", "nan");
  }
  try {
    write_kv(out, "assortativity", format_double(assortativity(g)));
  } catch (const MetricError&) {
    write_kv(out, "assortativity", "undefined");
  }
  write_kv(out, "avg_clustering", format_double(avg_clustering(g)));

  if (!ccdf_out.empty()) {
    auto csv = open_out(ccdf_out);
    csv << "degree,fraction\r\n";
    for (const CcdfPoint& p : ccdf(degrees)) {
      csv << p.degree << ',' << format_double(p.fraction) << "\r\n";
    }
  }
  return 0;
}

int cmd_convergence(const std::string& config, const std::string& out_path) {
  const ExperimentConfig cfg = load_config(config);
  const LoadedGraph loaded = load_graph(cfg.graph_path.string());
  const auto records = run_convergence(cfg, loaded.graph);
  auto out = open_out(out_path);
  write_convergence_csv(out, records);
  return 0;
}

int cmd_sweep(const std::string& config, std::size_t size, const std::string& out_path) {
  const ExperimentConfig cfg = load_config(config);
  const LoadedGraph loaded = load_graph(cfg.graph_path.string());
  const SweepResult result = run_alpha_sweep(cfg, loaded.graph, size);
  auto out = open_out(out_path);
  write_sweep_csv(out, result);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Graph sampling toolkit: samplers, metrics and convergence experiments"};
  app.require_subcommand(1);

  std::string isa = "auto";
  app.add_option("--isa", isa, "Kernel variant: auto, scalar or avx2")
      ->check(CLI::IsMember({"auto", "scalar", "avx2"}));

  auto* gen = app.add_subcommand("generate", "Write a Barabasi-Albert graph as an edge list");
  std::uint32_t gen_nodes = 0, gen_m = 2;
  std::uint64_t gen_seed = 0;
  std::string gen_out;
  gen->add_option("--nodes", gen_nodes, "Node count")->required();
  gen->add_option("--edges-per-node", gen_m, "Edges added with each node")->capture_default_str();
  gen->add_option("--seed", gen_seed, "RNG seed")->required();
  gen->add_option("--out", gen_out, "Output edge list")->required();

  auto* sample = app.add_subcommand("sample", "Extract a sample with one sampler");
  SampleArgs sa;
  sample->add_option("--graph", sa.graph, "Input edge list")->required();
  sample->add_option("--algo", sa.algo, "Sampler")
      ->required()
      ->check(CLI::IsMember({"mrw", "brwfb", "snowball", "forestfire", "tse"}));
  sample->add_option("--size", sa.size, "Sample size h")->required();
  sample->add_option("--alpha", sa.alpha, "Bias exponent for brwfb")->capture_default_str();
  sample->add_option("--pf", sa.pf, "Forward burning probability for forestfire")
      ->capture_default_str();
  sample->add_option("--start", sa.start, "Start node (id as in the edge list)");
  sample->add_option("--seed", sa.seed, "RNG seed")->required();
  sample->add_option("--out-nodes", sa.out_nodes, "Sampled ids, one per line")->required();
  sample->add_option("--out-stats", sa.out_stats, "key=value crawl statistics")->required();

  auto* metrics = app.add_subcommand("metrics", "Print graph properties");
  std::string metrics_graph, ccdf_out;
  metrics->add_option("--graph", metrics_graph, "Input edge list")->required();
  metrics->add_option("--ccdf-out", ccdf_out, "Write CCDF points as CSV");

  auto* conv = app.add_subcommand("convergence", "Metrics of growing samples at checkpoints");
  std::string conv_config, conv_out;
  conv->add_option("--config", conv_config, "Experiment config (TOML)")->required();
  conv->add_option("--out", conv_out, "Output CSV")->required();

  auto* sweep = app.add_subcommand("sweep-alpha", "Degree exponent of BRW-FB samples per alpha");
  std::string sweep_config, sweep_out;
  std::size_t sweep_size = 0;
  sweep->add_option("--config", sweep_config, "Experiment config (TOML)")->required();
  sweep->add_option("--size", sweep_size, "Sample size h")->required();
  sweep->add_option("--out", sweep_out, "Output CSV")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (isa == "scalar") kernels::select_isa(kernels::Isa::scalar);
    if (isa == "avx2") kernels::select_isa(kernels::Isa::avx2);

    if (*gen) return cmd_generate(gen_nodes, gen_m, gen_seed, gen_out);
    if (*sample) return cmd_sample(sa);
    if (*metrics) return cmd_metrics(metrics_graph, ccdf_out);
    if (*conv) return cmd_convergence(conv_config, conv_out);
    if (*sweep) return cmd_sweep(sweep_config, sweep_size, sweep_out);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
