#include <algorithm>
#include <cmath>
#include <unordered_map>

#include "trace_builder.hpp"

namespace tinysample {

namespace {

// Neighbor list of one node with running sums of deg(y)^alpha.
struct BiasRow {
  std::span<const NodeId> neighbors;
  std::vector<double> cumulative;
};

class BiasWeights {
 public:
  explicit BiasWeights(double alpha) : alpha_(alpha) {}

  double operator()(std::uint32_t degree) {
    if (degree >= cache_.size()) cache_.resize(std::size_t{degree} + 1, -1.0);
    double& w = cache_[degree];
    if (w < 0.0) w = std::pow(static_cast<double>(degree), alpha_);
    return w;
  }

 private:
  double alpha_;
  std::vector<double> cache_;  // -1 marks "not computed"
};

BiasRow build_row(CrawlOracle& oracle, NodeId x, BiasWeights& weight) {
  BiasRow row;
  row.neighbors = oracle.neighbors(x);
  if (row.neighbors.empty()) {
    throw SamplingError("brwfb_transition: node " + std::to_string(x) + " is isolated");
  }
  row.cumulative.reserve(row.neighbors.size());
  double total = 0.0;
  for (NodeId y : row.neighbors) {
    total += weight(oracle.degree(y));
    row.cumulative.push_back(total);
  }
  return row;
}

NodeId pick(const BiasRow& row, Rng& rng) {
  const double u = uniform01(rng) * row.cumulative.back();
  auto it = std::upper_bound(row.cumulative.begin(), row.cumulative.end(), u);
  auto idx = static_cast<std::size_t>(it - row.cumulative.begin());
  return row.neighbors[std::min(idx, row.neighbors.size() - 1)];
}

// Memoizes each node's row for the lifetime of one walk, as a crawler
// would cache a fetched profile.
class BiasedStepper {
 public:
  BiasedStepper(CrawlOracle& oracle, double alpha) : oracle_(oracle), weight_(alpha) {}

  NodeId step(NodeId x, Rng& rng) {
    auto it = rows_.find(x);
    if (it == rows_.end()) it = rows_.emplace(x, build_row(oracle_, x, weight_)).first;
    return pick(it->second, rng);
  }

 private:
  CrawlOracle& oracle_;
  BiasWeights weight_;
  std::unordered_map<NodeId, BiasRow> rows_;
};

}  // namespace

std::vector<double> brwfb_probabilities(CrawlOracle& oracle, NodeId x, double alpha) {
  BiasWeights weight(alpha);
  const BiasRow row = build_row(oracle, x, weight);
  std::vector<double> p(row.cumulative.size());
  double prev = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    p[i] = (row.cumulative[i] - prev) / row.cumulative.back();
    prev = row.cumulative[i];
  }
  return p;
}

NodeId brwfb_transition(CrawlOracle& oracle, NodeId x, double alpha, Rng& rng) {
  BiasWeights weight(alpha);
  return pick(build_row(oracle, x, weight), rng);
}

SampleTrace brwfb_sample(CrawlOracle& oracle, std::size_t h, double alpha,
                         std::uint64_t seed, const SampleOptions& opts,
                         const WalkGuard& guard) {
  detail::require_positive_size(h);
  Rng rng(seed);
  const NodeId home = detail::resolve_start(oracle, opts.start, rng);
  detail::TraceBuilder trace(oracle, h, "brwfb", seed, opts.on_emit);
  trace.emit(home);

  BiasedStepper stepper(oracle, alpha);
  int trips = 0;
  while (!trace.full()) {
    const std::uint64_t limit =
        std::max<std::uint64_t>(guard.steps_per_node * trace.size(), guard.min_steps);
    NodeId x = home;
    for (std::uint64_t steps = 1;; ++steps) {
      const NodeId y = stepper.step(x, rng);
      if (trace.emit(y)) {
        trips = 0;
        break;
      }
      x = y;
      if (steps >= limit) {
        if (++trips >= guard.max_consecutive_trips) {
          throw SamplingError("brwfb_sample: component too small or walk trapped");
        }
        break;
      }
    }
  }
  return trace.finish(alpha);
}

}  // namespace tinysample
