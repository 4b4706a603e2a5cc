#include "tinysample/generator.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "tinysample/rng.hpp"

namespace tinysample {

Graph generate_ba(const BaConfig& cfg) {
  if (cfg.m < 1) throw std::invalid_argument("generate_ba: m must be >= 1");
  if (cfg.n < cfg.m + 1) throw std::invalid_argument("generate_ba: n must be >= m + 1");

  Rng rng(cfg.seed);
  const std::uint64_t total_edges = std::uint64_t{cfg.m} * (cfg.n - cfg.m);
  std::vector<Edge> edges;
  edges.reserve(total_edges);
  std::vector<NodeId> endpoints;  // node repeated once per unit of degree
  endpoints.reserve(2 * total_edges);

  auto link = [&](NodeId u, NodeId v) {
    edges.emplace_back(u, v);
    endpoints.push_back(u);
    endpoints.push_back(v);
  };

  const NodeId bootstrap = cfg.m;
  for (NodeId v = 0; v < bootstrap; ++v) link(bootstrap, v);

  std::vector<NodeId> targets;
  targets.reserve(cfg.m);
  for (NodeId t = bootstrap + 1; t < cfg.n; ++t) {
    targets.clear();
    while (targets.size() < cfg.m) {
      NodeId pick = endpoints[uniform_below(rng, endpoints.size())];
      if (std::find(targets.begin(), targets.end(), pick) == targets.end()) {
        targets.push_back(pick);
      }
    }
    for (NodeId v : targets) link(t, v);
  }
  return Graph::from_edges(cfg.n, edges);
}

}  // namespace tinysample
