#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace tinysample {

using NodeId = std::uint32_t;
using Edge = std::pair<NodeId, NodeId>;

class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Counts of input edges discarded while building the canonical form.
struct BuildStats {
  std::size_t self_loops_dropped = 0;
  std::size_t duplicates_collapsed = 0;
};

/// Immutable undirected simple graph in CSR form.
///
/// Every adjacency list is sorted ascending and free of duplicates and
/// self-loops, and y is a neighbor of x iff x is a neighbor of y.
class Graph {
 public:
  Graph() = default;

  // Canonicalizes an undirected edge list over ids in [0, node_count).
  // (u, v) and (v, u) are the same edge. Loops are dropped.
  static Graph from_edges(NodeId node_count, std::span<const Edge> edges,
                          BuildStats* stats = nullptr);

  NodeId node_count() const noexcept {
    return static_cast<NodeId>(offsets_.empty() ? 0 : offsets_.size() - 1);
  }
  std::uint64_t edge_count() const noexcept { return targets_.size() / 2; }

  std::uint32_t degree(NodeId x) const {
    check(x);
    return static_cast<std::uint32_t>(offsets_[x + 1] - offsets_[x]);
  }

  std::span<const NodeId> neighbors(NodeId x) const {
    check(x);
    return {targets_.data() + offsets_[x], targets_.data() + offsets_[x + 1]};
  }

  bool contains(NodeId x) const noexcept { return x < node_count(); }
  bool has_edge(NodeId x, NodeId y) const;

  // Each undirected edge once, as (u, v) with u < v, in ascending order.
  std::vector<Edge> edges() const;

  bool operator==(const Graph&) const = default;

 private:
  void check(NodeId x) const {
    if (x >= node_count()) {
      throw GraphError("node id " + std::to_string(x) + " out of range");
    }
  }

  std::vector<std::uint64_t> offsets_;
  std::vector<NodeId> targets_;
};

struct InducedSubgraph {
  Graph graph;
  // new id -> id in the parent graph; new ids follow the order of the input.
  std::vector<NodeId> original_ids;

  std::unordered_map<NodeId, NodeId> old_to_new() const;
};

// Subgraph on `nodes` holding every parent edge with both endpoints inside.
// Throws GraphError on an out-of-range or repeated id.
InducedSubgraph induced_subgraph(const Graph& g, std::span<const NodeId> nodes);

std::vector<std::uint32_t> degree_sequence(const Graph& g);

// Size of the connected component containing `start`.
std::size_t component_size(const Graph& g, NodeId start);
bool is_connected(const Graph& g);

}  // namespace tinysample
