#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <vector>

#include "tinysample/graph.hpp"

namespace tinysample {

// Text edge lists: one edge per line, two whitespace-separated non-negative
// integer ids, '#' lines ignored. Ids are compacted to [0, n) in order of
// first appearance.
struct LoadedGraph {
  Graph graph;
  std::vector<std::uint64_t> external_ids;  // internal id -> id in the file
  BuildStats stats;
};

LoadedGraph load_edge_list(const std::filesystem::path& path);
LoadedGraph parse_edge_list(std::istream& in);

// Writes every edge once as "u v" with u < v. Isolated nodes are not
// representable in this format and are omitted.
void save_edge_list(const Graph& g, const std::filesystem::path& path);
void write_edge_list(const Graph& g, std::ostream& out);

}  // namespace tinysample
