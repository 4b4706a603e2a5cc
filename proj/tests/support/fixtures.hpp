#pragma once

// Small graphs and independent brute-force references for tests.

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "tinysample/graph.hpp"

namespace tinysample::testing {

inline Graph make_graph(NodeId n, std::vector<Edge> edges) {
  return Graph::from_edges(n, edges);
}

inline Graph path_graph(NodeId n) {
  std::vector<Edge> e;
  for (NodeId i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return make_graph(n, e);
}

inline Graph cycle_graph(NodeId n) {
  std::vector<Edge> e;
  for (NodeId i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return make_graph(n, e);
}

// Center 0, leaves 1..leaves.
inline Graph star_graph(NodeId leaves) {
  std::vector<Edge> e;
  for (NodeId i = 1; i <= leaves; ++i) e.emplace_back(0, i);
  return make_graph(leaves + 1, e);
}

inline Graph complete_graph(NodeId n) {
  std::vector<Edge> e;
  for (NodeId i = 0; i < n; ++i)
    for (NodeId j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return make_graph(n, e);
}

// Erdos-Renyi G(n, p), possibly disconnected, possibly edgeless.
inline Graph random_graph(NodeId n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  std::vector<Edge> e;
  for (NodeId i = 0; i < n; ++i)
    for (NodeId j = i + 1; j < n; ++j)
      if (coin(rng)) e.emplace_back(i, j);
  return make_graph(n, e);
}

// Random connected graph: random spanning tree plus extra random edges.
inline Graph random_connected_graph(NodeId n, std::size_t extra, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Edge> e;
  for (NodeId i = 1; i < n; ++i) {
    e.emplace_back(i, std::uniform_int_distribution<NodeId>(0, i - 1)(rng));
  }
  std::uniform_int_distribution<NodeId> any(0, n - 1);
  for (std::size_t k = 0; k < extra; ++k) e.emplace_back(any(rng), any(rng));
  return make_graph(n, e);
}

// Pearson correlation over every oriented edge, straight from the textbook
// formula with double accumulation.
inline double brute_assortativity(const Graph& g) {
  double n = 0, si = 0, sj = 0, sii = 0, sjj = 0, sij = 0;
  for (NodeId u = 0; u < g.node_count(); ++u) {
    for (NodeId v = 0; v < g.node_count(); ++v) {
      if (u == v || !g.has_edge(u, v)) continue;
      const double di = g.degree(u), dj = g.degree(v);
      n += 1;
      si += di;
      sj += dj;
      sii += di * di;
      sjj += dj * dj;
      sij += di * dj;
    }
  }
  const double mi = si / n, mj = sj / n;
  return (sij / n - mi * mj) / std::sqrt((sii / n - mi * mi) * (sjj / n - mj * mj));
}

// Mean local clustering by enumerating every node triple.
inline double brute_clustering(const Graph& g) {
  const NodeId n = g.node_count();
  std::vector<double> tri(n, 0.0);
  for (NodeId a = 0; a < n; ++a)
    for (NodeId b = a + 1; b < n; ++b)
      for (NodeId c = b + 1; c < n; ++c)
        if (g.has_edge(a, b) && g.has_edge(b, c) && g.has_edge(a, c)) {
          tri[a] += 1;
          tri[b] += 1;
          tri[c] += 1;
        }
  double sum = 0;
  for (NodeId v = 0; v < n; ++v) {
    const double d = g.degree(v);
    if (d >= 2) sum += 2 * tri[v] / (d * (d - 1));
  }
  return sum / n;
}

}  // namespace tinysample::testing
