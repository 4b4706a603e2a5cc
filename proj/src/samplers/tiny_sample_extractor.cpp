#include <cmath>
#include <unordered_set>

#include "trace_builder.hpp"

namespace tinysample {

double tse_alpha(double d, double d0, double d1, double epsilon) {
  if (!(std::abs(d1 - d0) >= epsilon)) {
    throw SamplingError("calibration degenerate: |D1 - D0| below epsilon");
  }
  return -((d - d0) / (d1 - d0));
}

std::vector<std::uint32_t> induced_degrees(CrawlOracle& oracle,
                                           std::span<const NodeId> nodes) {
  const std::unordered_set<NodeId> members(nodes.begin(), nodes.end());
  std::vector<std::uint32_t> degrees;
  degrees.reserve(nodes.size());
  for (NodeId v : nodes) {
    std::uint32_t d = 0;
    for (NodeId w : oracle.neighbors(v)) d += members.count(w) ? 1u : 0u;
    degrees.push_back(d);
  }
  return degrees;
}

namespace {

ExponentFit fit_stage(CrawlOracle& oracle, const SampleTrace& trace, const char* stage) {
  try {
    return fit_degree_exponent(induced_degrees(oracle, trace.nodes));
  } catch (const MetricError&) {
    throw SamplingError(std::string("cannot fit: induced sample of stage ") + stage);
  }
}

}  // namespace

TseResult tiny_sample_extractor(const OracleFactory& factory, std::size_t h,
                                std::uint64_t seed, const TseOptions& opts) {
  if (h < 100) throw SamplingError("tiny_sample_extractor: h must be at least 100");
  TseResult result;
  TseReport& report = result.report;
  SampleOptions calibration;
  calibration.start = opts.start;

  {
    CrawlOracle oracle = factory.make();
    report.mrw_fit = estimate_exponent_mrw(oracle, h, derive_seed(seed, 0), opts.start);
    report.stage_stats[0] = oracle.stats();
  }
  {
    CrawlOracle oracle = factory.make();
    SampleTrace s0 = brwfb_sample(oracle, h, 0.0, derive_seed(seed, 1), calibration, opts.guard);
    report.fit_alpha0 = fit_stage(oracle, s0, "alpha=0");
    report.stage_stats[1] = oracle.stats();
  }
  {
    CrawlOracle oracle = factory.make();
    SampleTrace s1 = brwfb_sample(oracle, h, -1.0, derive_seed(seed, 2), calibration, opts.guard);
    report.fit_alpha1 = fit_stage(oracle, s1, "alpha=-1");
    report.stage_stats[2] = oracle.stats();
  }

  report.alpha = tse_alpha(report.mrw_fit.slope, report.fit_alpha0.slope,
                           report.fit_alpha1.slope, opts.calibration_epsilon);

  CrawlOracle oracle = factory.make();
  SampleOptions final_opts;
  final_opts.start = opts.start;
  final_opts.on_emit = opts.on_emit;
  result.trace = brwfb_sample(oracle, h, report.alpha, derive_seed(seed, 3), final_opts, opts.guard);
  result.trace.sampler_label = "tse";
  result.trace.rng_seed = seed;
  report.stage_stats[3] = oracle.stats();

  for (const AccessStats& s : report.stage_stats) {
    report.total_distinct_visited += s.distinct_visited;
    report.total_neighbor_queries += s.neighbor_queries;
  }
  return result;
}

}  // namespace tinysample
