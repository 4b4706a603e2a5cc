#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "tinysample/graph.hpp"
#include "tinysample/metrics.hpp"

namespace tinysample {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// "name" or "name:key=value,key=value", e.g. "forestfire:pf=0.7".
struct SamplerSpec {
  std::string name;
  std::map<std::string, double> params;
  std::string label;  // the text it was parsed from; used as the CSV sampler field

  double param(const std::string& key, double fallback) const {
    auto it = params.find(key);
    return it == params.end() ? fallback : it->second;
  }
};

SamplerSpec parse_sampler_spec(std::string_view text);

struct ExperimentConfig {
  std::filesystem::path graph_path;
  std::vector<SamplerSpec> samplers;
  std::vector<std::uint64_t> seeds;
  double max_fraction = 0.20;
  std::vector<double> checkpoints;  // fractions of n, strictly increasing
  std::vector<double> alpha_sweep;
  unsigned parallelism = 1;
  bool timing = false;  // wall_ms is written as 0 unless set

  void validate() const;
};

// 0.5% steps up to 2%, then 1% steps up to max_fraction.
std::vector<double> default_checkpoints(double max_fraction);
// -2.0 to 1.0 in steps of 0.25.
std::vector<double> default_alpha_sweep();
std::vector<SamplerSpec> default_samplers();

// Flat TOML subset: `key = value` lines with strings, numbers, booleans and
// (possibly multi-line) arrays of those; '#' comments. Keys are the
// ExperimentConfig field names. A relative graph_path resolves against
// `base_dir`. Unset fields take their defaults.
ExperimentConfig parse_config(std::istream& in, const std::filesystem::path& base_dir = {});
ExperimentConfig load_config(const std::filesystem::path& path);

struct ConvergenceRecord {
  std::string sampler;
  std::uint64_t seed = 0;
  std::optional<double> alpha;
  double fraction = 0.0;
  std::size_t sample_size = 0;
  std::optional<double> degree_exponent;  // nullopt -> "nan"
  std::optional<double> r_squared;
  std::optional<double> assortativity;  // nullopt -> "undefined"
  std::optional<double> avg_clustering;
  std::uint64_t distinct_visited = 0;
  std::uint64_t neighbor_queries = 0;
  std::uint64_t wall_ms = 0;
  std::string note;  // sampler failure, if any
};

// One growing run per (sampler, seed), snapshotted at every checkpoint.
// Records are sorted by (sampler, seed, fraction) whatever the parallelism.
std::vector<ConvergenceRecord> run_convergence(const ExperimentConfig& cfg, const Graph& g);
void write_convergence_csv(std::ostream& out, std::span<const ConvergenceRecord> records);

struct SweepRow {
  double alpha = 0.0;
  std::uint64_t seed = 0;
  std::optional<ExponentFit> fit;
  std::string note;
};

struct SweepResult {
  std::vector<SweepRow> rows;            // alpha-major, then seed, in config order
  std::vector<double> alphas;            // alphas with at least one fit
  std::vector<double> mean_exponents;    // matching means over seeds
  std::optional<ExponentFit> line;       // OLS of mean exponent on alpha
  bool strictly_monotone = false;
};

SweepResult run_alpha_sweep(const ExperimentConfig& cfg, const Graph& g, std::size_t h);
void write_sweep_csv(std::ostream& out, const SweepResult& result);

// Shortest round-trip decimal form; "nan" for NaN.
std::string format_double(double x);
// RFC-4180 field quoting.
std::string csv_field(std::string_view text);

}  // namespace tinysample
