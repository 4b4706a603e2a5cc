#pragma once

#include <string>
#include <unordered_set>
#include <utility>

#include "tinysample/samplers.hpp"

namespace tinysample::detail {

inline void require_positive_size(std::size_t h) {
  if (h == 0) throw SamplingError("sample size must be positive");
}

inline NodeId resolve_start(CrawlOracle& oracle, const std::optional<NodeId>& start,
                            Rng& rng) {
  if (start) {
    oracle.require_node(*start);
    return *start;
  }
  return oracle.entry_point(rng);
}

// Accumulates a SampleTrace; reports each emission to the observer.
class TraceBuilder {
 public:
  TraceBuilder(CrawlOracle& oracle, std::size_t target, std::string label,
               std::uint64_t seed, const EmitObserver& observer)
      : oracle_(oracle), target_(target), observer_(observer) {
    trace_.sampler_label = std::move(label);
    trace_.rng_seed = seed;
    trace_.nodes.reserve(target);
    members_.reserve(target * 2);
  }

  bool contains(NodeId x) const { return members_.count(x) != 0; }
  bool full() const { return trace_.nodes.size() >= target_; }
  std::size_t size() const { return trace_.nodes.size(); }
  const std::vector<NodeId>& nodes() const { return trace_.nodes; }

  // Returns false if x was already sampled.
  bool emit(NodeId x) {
    if (!members_.insert(x).second) return false;
    trace_.nodes.push_back(x);
    if (observer_) observer_(trace_.nodes.size(), oracle_.stats());
    return true;
  }

  SampleTrace finish(std::optional<double> alpha = std::nullopt) {
    trace_.stats = oracle_.stats();
    trace_.alpha = alpha;
    return std::move(trace_);
  }

 private:
  CrawlOracle& oracle_;
  std::size_t target_;
  const EmitObserver& observer_;
  SampleTrace trace_;
  std::unordered_set<NodeId> members_;
};

}  // namespace tinysample::detail
