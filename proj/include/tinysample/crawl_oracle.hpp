#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "tinysample/graph.hpp"
#include "tinysample/rng.hpp"

namespace tinysample {

struct AccessStats {
  std::uint64_t neighbor_queries = 0;
  std::uint64_t degree_queries = 0;
  std::uint64_t distinct_visited = 0;

  bool operator==(const AccessStats&) const = default;
};

/// Local, instrumented view of a graph as a crawler sees it.
///
/// Samplers reach the graph only through this type. It answers degree and
/// neighbor queries for a given node and hands out entry points, but never
/// reveals the node count, edge count or any other global quantity.
/// Single-owner: counters are not synchronized.
class CrawlOracle {
 public:
  explicit CrawlOracle(const Graph& target);

  // Degree of x; marks x visited.
  std::uint32_t degree(NodeId x);

  // Sorted neighbor list of x; marks x and every returned node visited.
  std::span<const NodeId> neighbors(NodeId x);

  // A uniformly random node of the known part of the graph.
  NodeId entry_point(Rng& rng);

  // Throws GraphError if x is not a node of the target.
  void require_node(NodeId x) const;

  const AccessStats& stats() const noexcept { return stats_; }

 private:
  void touch(NodeId x) {
    if (!visited_[x]) {
      visited_[x] = 1;
      ++stats_.distinct_visited;
    }
  }

  const Graph* target_;
  std::vector<std::uint8_t> visited_;
  AccessStats stats_;
};

// Hands out fresh oracles over one shared graph without exposing the graph.
class OracleFactory {
 public:
  explicit OracleFactory(const Graph& target) : target_(&target) {}
  CrawlOracle make() const { return CrawlOracle(*target_); }

 private:
  const Graph* target_;
};

}  // namespace tinysample
