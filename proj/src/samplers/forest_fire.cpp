#include <deque>

#include "trace_builder.hpp"

namespace tinysample {

namespace {

// An unburned node adjacent to the sample, or nullopt if the sample already
// covers its whole component. Scans sampled nodes cyclically from a random
// offset.
std::optional<NodeId> fresh_neighbor(CrawlOracle& oracle,
                                     const detail::TraceBuilder& trace, Rng& rng) {
  const auto& nodes = trace.nodes();
  const std::size_t offset = uniform_below(rng, nodes.size());
  std::vector<NodeId> unburned;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    for (NodeId w : oracle.neighbors(nodes[(offset + i) % nodes.size()])) {
      if (!trace.contains(w)) unburned.push_back(w);
    }
    if (!unburned.empty()) return unburned[uniform_below(rng, unburned.size())];
  }
  return std::nullopt;
}

}  // namespace

std::geometric_distribution<std::uint64_t> burn_count_distribution(double pf) {
  return std::geometric_distribution<std::uint64_t>(1.0 - pf);
}

SampleTrace forest_fire_sample(CrawlOracle& oracle, std::size_t h, double pf,
                               std::uint64_t seed, const SampleOptions& opts) {
  detail::require_positive_size(h);
  if (!(pf > 0.0 && pf < 1.0)) {
    throw SamplingError("forest_fire_sample: pf must lie in (0, 1)");
  }
  Rng rng(seed);
  const NodeId start = detail::resolve_start(oracle, opts.start, rng);
  detail::TraceBuilder trace(oracle, h, "forestfire", seed, opts.on_emit);
  trace.emit(start);

  auto burn_count = burn_count_distribution(pf);
  std::deque<NodeId> burning{start};
  std::vector<NodeId> unburned;
  std::size_t size_at_reignition = 0;  // 0: no reignition pending
  int fruitless = 0;

  while (!trace.full()) {
    if (burning.empty()) {
      if (size_at_reignition == trace.size()) {
        ++fruitless;
      } else {
        fruitless = 0;
      }
      if (fruitless >= kMaxFruitlessReignitions) {
        auto fresh = fresh_neighbor(oracle, trace, rng);
        if (!fresh) throw SamplingError("forest_fire_sample: component exhausted before reaching h");
        trace.emit(*fresh);
        burning.push_back(*fresh);
        size_at_reignition = 0;
        fruitless = 0;
        continue;
      }
      size_at_reignition = trace.size();
      burning.push_back(trace.nodes()[uniform_below(rng, trace.size())]);
    }

    const NodeId v = burning.front();
    burning.pop_front();
    const std::uint64_t k = burn_count(rng);
    if (k == 0) continue;
    unburned.clear();
    for (NodeId w : oracle.neighbors(v)) {
      if (!trace.contains(w)) unburned.push_back(w);
    }
    const std::size_t burn = std::min<std::uint64_t>(k, unburned.size());
    // Partial Fisher-Yates: the first `burn` entries become a uniform subset.
    for (std::size_t i = 0; i < burn && !trace.full(); ++i) {
      std::size_t j = i + uniform_below(rng, unburned.size() - i);
      std::swap(unburned[i], unburned[j]);
      trace.emit(unburned[i]);
      burning.push_back(unburned[i]);
    }
  }
  return trace.finish();
}

}  // namespace tinysample
