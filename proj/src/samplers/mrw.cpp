#include <algorithm>

#include "trace_builder.hpp"

namespace tinysample {

double mrw_acceptance(std::uint32_t deg_x, std::uint32_t deg_y) {
  if (deg_y <= deg_x) return 1.0;
  return static_cast<double>(deg_x) / static_cast<double>(deg_y);
}

namespace {

// One Metropolis-Hastings move from x (degree dx); returns the next state.
NodeId mrw_step(CrawlOracle& oracle, NodeId x, std::uint32_t& dx, Rng& rng) {
  auto nbrs = oracle.neighbors(x);
  NodeId y = nbrs[uniform_below(rng, nbrs.size())];
  std::uint32_t dy = oracle.degree(y);
  // Moves toward equal-or-lower degree are always taken without a draw.
  if (dy <= dx || uniform01(rng) < mrw_acceptance(dx, dy)) {
    dx = dy;
    return y;
  }
  return x;
}

}  // namespace

std::vector<std::uint32_t> mrw_walk(CrawlOracle& oracle, NodeId start,
                                    std::uint64_t steps, Rng& rng) {
  std::uint32_t dx = oracle.degree(start);
  if (dx == 0) throw SamplingError("mrw_walk: start node is isolated");
  std::vector<std::uint32_t> degrees;
  degrees.reserve(steps);
  NodeId x = start;
  for (std::uint64_t s = 0; s < steps; ++s) {
    x = mrw_step(oracle, x, dx, rng);
    degrees.push_back(dx);
  }
  return degrees;
}

ExponentFit estimate_exponent_mrw(CrawlOracle& oracle, std::size_t h,
                                  std::uint64_t seed, std::optional<NodeId> start) {
  if (h < 100) throw SamplingError("estimate_exponent_mrw: h must be at least 100");
  Rng rng(seed);
  NodeId x = detail::resolve_start(oracle, start, rng);
  const std::uint64_t burn_in = std::max<std::uint64_t>(100, h / 10);
  std::uint32_t dx = oracle.degree(x);
  if (dx == 0) throw SamplingError("mrw_walk: start node is isolated");
  for (std::uint64_t s = 0; s < burn_in; ++s) x = mrw_step(oracle, x, dx, rng);
  const auto degrees = mrw_walk(oracle, x, h, rng);
  try {
    return fit_degree_exponent(degrees);
  } catch (const MetricError&) {
    throw SamplingError("cannot fit: MRW degree sample has too few distinct degrees");
  }
}

SampleTrace mrw_sample(CrawlOracle& oracle, std::size_t h, std::uint64_t seed,
                       const SampleOptions& opts) {
  detail::require_positive_size(h);
  Rng rng(seed);
  NodeId x = detail::resolve_start(oracle, opts.start, rng);
  detail::TraceBuilder trace(oracle, h, "mrw", seed, opts.on_emit);
  trace.emit(x);
  if (trace.full()) return trace.finish();

  std::uint32_t dx = oracle.degree(x);
  if (dx == 0) throw SamplingError("mrw_sample: start node is isolated");
  std::uint64_t since_new = 0;
  while (!trace.full()) {
    x = mrw_step(oracle, x, dx, rng);
    if (trace.emit(x)) {
      since_new = 0;
    } else if (++since_new > std::max<std::uint64_t>(100 * trace.size(), 10000)) {
      throw SamplingError("mrw_sample: component too small or walk trapped");
    }
  }
  return trace.finish();
}

}  // namespace tinysample
