#include <algorithm>

#include "trace_builder.hpp"

namespace tinysample {

SampleTrace snowball_sample(CrawlOracle& oracle, std::size_t h, std::uint64_t seed,
                            const SampleOptions& opts) {
  detail::require_positive_size(h);
  Rng rng(seed);
  const NodeId start = detail::resolve_start(oracle, opts.start, rng);
  detail::TraceBuilder trace(oracle, h, "snowball", seed, opts.on_emit);
  trace.emit(start);

  std::vector<NodeId> frontier{start};
  std::vector<NodeId> next;
  std::vector<NodeId> fresh;
  while (!trace.full()) {
    if (frontier.empty()) {
      throw SamplingError("snowball_sample: component exhausted before reaching h");
    }
    std::shuffle(frontier.begin(), frontier.end(), rng);
    next.clear();
    for (NodeId v : frontier) {
      fresh.clear();
      for (NodeId w : oracle.neighbors(v)) {
        if (!trace.contains(w)) fresh.push_back(w);
      }
      std::shuffle(fresh.begin(), fresh.end(), rng);
      for (NodeId w : fresh) {
        trace.emit(w);
        next.push_back(w);
        if (trace.full()) return trace.finish();
      }
    }
    frontier.swap(next);
  }
  return trace.finish();
}

}  // namespace tinysample
