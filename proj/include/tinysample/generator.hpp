#pragma once

#include <cstdint>

#include "tinysample/graph.hpp"

namespace tinysample {

struct BaConfig {
  NodeId n = 0;
  std::uint32_t m = 2;  // edges per new node
  std::uint64_t seed = 0;
};

/// Barabasi-Albert preferential attachment.
///
/// Starts from m unconnected nodes; node m links to all of them, which makes
/// degree-proportional attachment well defined from then on. Every later node
/// links to m distinct existing nodes, each drawn with probability d / sum(d)
/// (uniform draws from a list holding each node once per unit of degree,
/// redrawn on collision). The result is connected with m * (n - m) edges.
///
/// Throws std::invalid_argument unless m >= 1 and n >= m + 1.
Graph generate_ba(const BaConfig& cfg);

}  // namespace tinysample
