#include "tinysample/edge_list.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <string>
#include <string_view>
#include <unordered_map>

namespace tinysample {

namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f'; }

std::string_view next_token(std::string_view& rest) {
  std::size_t i = 0;
  while (i < rest.size() && is_space(rest[i])) ++i;
  std::size_t j = i;
  while (j < rest.size() && !is_space(rest[j])) ++j;
  auto token = rest.substr(i, j - i);
  rest.remove_prefix(j);
  return token;
}

bool parse_id(std::string_view token, std::uint64_t& out) {
  if (token.empty()) return false;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), out);
  return ec == std::errc{} && ptr == token.data() + token.size();
}

}  // namespace

LoadedGraph parse_edge_list(std::istream& in) {
  LoadedGraph out;
  std::unordered_map<std::uint64_t, NodeId> compact;
  std::vector<Edge> edges;

  auto intern = [&](std::uint64_t ext) {
    auto [it, inserted] = compact.try_emplace(ext, static_cast<NodeId>(compact.size()));
    if (inserted) out.external_ids.push_back(ext);
    return it->second;
  };

  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view rest = line;
    std::string_view first = next_token(rest);
    if (first.empty() || first.front() == '#') continue;
    std::string_view second = next_token(rest);
    std::string_view extra = next_token(rest);
    std::uint64_t a = 0, b = 0;
    if (!parse_id(first, a) || !parse_id(second, b) || !extra.empty()) {
      throw GraphError("edge list parse error at line " + std::to_string(line_no) +
                       ": expected two non-negative integer ids");
    }
    NodeId u = intern(a);
    NodeId v = intern(b);
    edges.emplace_back(u, v);
  }
  if (edges.empty()) throw GraphError("no edges");

  out.graph = Graph::from_edges(static_cast<NodeId>(compact.size()), edges, &out.stats);
  return out;
}

LoadedGraph load_edge_list(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw GraphError("cannot open edge list " + path.string());
  return parse_edge_list(in);
}

void write_edge_list(const Graph& g, std::ostream& out) {
  std::string buf;
  char num[16];
  for (NodeId u = 0; u < g.node_count(); ++u) {
    for (NodeId v : g.neighbors(u)) {
      if (v <= u) continue;
      auto r1 = std::to_chars(num, num + sizeof num, u);
      buf.append(num, r1.ptr);
      buf.push_back(' ');
      auto r2 = std::to_chars(num, num + sizeof num, v);
      buf.append(num, r2.ptr);
      buf.push_back('\n');
    }
    if (buf.size() > (1u << 20)) {
      out << buf;
      buf.clear();
    }
  }
  out << buf;
}

void save_edge_list(const Graph& g, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw GraphError("cannot write edge list " + path.string());
  write_edge_list(g, out);
  if (!out) throw GraphError("write failed for " + path.string());
}

}  // namespace tinysample
