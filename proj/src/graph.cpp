#include "tinysample/graph.hpp"

#include <algorithm>

namespace tinysample {

Graph Graph::from_edges(NodeId node_count, std::span<const Edge> edges,
                        BuildStats* stats) {
  BuildStats local;
  std::vector<Edge> directed;
  directed.reserve(edges.size() * 2);
  for (auto [u, v] : edges) {
    if (u >= node_count || v >= node_count) {
      throw GraphError("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                       ") references a node outside [0, " +
                       std::to_string(node_count) + ")");
    }
    if (u == v) {
      ++local.self_loops_dropped;
      continue;
    }
    directed.emplace_back(u, v);
    directed.emplace_back(v, u);
  }
  std::sort(directed.begin(), directed.end());
  auto last = std::unique(directed.begin(), directed.end());
  local.duplicates_collapsed =
      static_cast<std::size_t>(directed.end() - last) / 2;
  directed.erase(last, directed.end());

  Graph g;
  g.offsets_.assign(static_cast<std::size_t>(node_count) + 1, 0);
  g.targets_.reserve(directed.size());
  for (auto [u, v] : directed) {
    ++g.offsets_[u + 1];
    g.targets_.push_back(v);
  }
  for (std::size_t i = 1; i < g.offsets_.size(); ++i) {
    g.offsets_[i] += g.offsets_[i - 1];
  }
  if (stats) *stats = local;
  return g;
}

bool Graph::has_edge(NodeId x, NodeId y) const {
  auto adj = neighbors(x);
  return std::binary_search(adj.begin(), adj.end(), y);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count());
  for (NodeId u = 0; u < node_count(); ++u) {
    for (NodeId v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

std::unordered_map<NodeId, NodeId> InducedSubgraph::old_to_new() const {
  std::unordered_map<NodeId, NodeId> map;
  map.reserve(original_ids.size());
  for (NodeId i = 0; i < original_ids.size(); ++i) map.emplace(original_ids[i], i);
  return map;
}

InducedSubgraph induced_subgraph(const Graph& g, std::span<const NodeId> nodes) {
  constexpr NodeId kAbsent = ~NodeId{0};
  std::vector<NodeId> local(g.node_count(), kAbsent);
  for (NodeId i = 0; i < nodes.size(); ++i) {
    NodeId v = nodes[i];
    if (!g.contains(v)) {
      throw GraphError("induced_subgraph: node id " + std::to_string(v) +
                       " out of range");
    }
    if (local[v] != kAbsent) {
      throw GraphError("induced_subgraph: node id " + std::to_string(v) +
                       " listed twice");
    }
    local[v] = i;
  }

  std::vector<Edge> kept;
  for (NodeId i = 0; i < nodes.size(); ++i) {
    for (NodeId w : g.neighbors(nodes[i])) {
      NodeId j = local[w];
      if (j != kAbsent && i < j) kept.emplace_back(i, j);
    }
  }
  InducedSubgraph out;
  out.graph = Graph::from_edges(static_cast<NodeId>(nodes.size()), kept);
  out.original_ids.assign(nodes.begin(), nodes.end());
  return out;
}

std::vector<std::uint32_t> degree_sequence(const Graph& g) {
  std::vector<std::uint32_t> d(g.node_count());
  for (NodeId v = 0; v < g.node_count(); ++v) d[v] = g.degree(v);
  return d;
}

std::size_t component_size(const Graph& g, NodeId start) {
  (void)g.degree(start);
  std::vector<bool> seen(g.node_count(), false);
  std::vector<NodeId> stack{start};
  seen[start] = true;
  std::size_t count = 0;
  while (!stack.empty()) {
    NodeId v = stack.back();
    stack.pop_back();
    ++count;
    for (NodeId w : g.neighbors(v)) {
      if (!seen[w]) {
        seen[w] = true;
        stack.push_back(w);
      }
    }
  }
  return count;
}

bool is_connected(const Graph& g) {
  return g.node_count() == 0 || component_size(g, 0) == g.node_count();
}

}  // namespace tinysample
