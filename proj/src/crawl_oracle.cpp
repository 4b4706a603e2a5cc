#include "tinysample/crawl_oracle.hpp"

namespace tinysample {

CrawlOracle::CrawlOracle(const Graph& target)
    : target_(&target), visited_(target.node_count(), 0) {}

void CrawlOracle::require_node(NodeId x) const {
  if (!target_->contains(x)) {
    throw GraphError("node id " + std::to_string(x) + " is not in the graph");
  }
}

std::uint32_t CrawlOracle::degree(NodeId x) {
  require_node(x);
  ++stats_.degree_queries;
  touch(x);
  return target_->degree(x);
}

std::span<const NodeId> CrawlOracle::neighbors(NodeId x) {
  require_node(x);
  ++stats_.neighbor_queries;
  touch(x);
  auto adj = target_->neighbors(x);
  for (NodeId y : adj) touch(y);
  return adj;
}

NodeId CrawlOracle::entry_point(Rng& rng) {
  if (target_->node_count() == 0) throw GraphError("empty graph has no entry point");
  return static_cast<NodeId>(uniform_below(rng, target_->node_count()));
}

}  // namespace tinysample
