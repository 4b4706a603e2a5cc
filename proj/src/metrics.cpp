#include "tinysample/metrics.hpp"

#include <algorithm>
#include <cmath>

#include "tinysample/kernels.hpp"

namespace tinysample {

std::vector<CcdfPoint> ccdf(std::span<const std::uint32_t> degrees) {
  if (degrees.empty()) throw MetricError("ccdf of an empty degree multiset");
  std::vector<std::uint32_t> sorted(degrees.begin(), degrees.end());
  std::sort(sorted.begin(), sorted.end());
  const double total = static_cast<double>(sorted.size());

  std::vector<CcdfPoint> out;
  std::size_t i = 0;
  while (i < sorted.size()) {
    std::size_t j = i;
    while (j < sorted.size() && sorted[j] == sorted[i]) ++j;
    out.push_back({sorted[i], static_cast<double>(sorted.size() - j) / total});
    i = j;
  }
  return out;
}

ExponentFit fit_line(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2) {
    throw MetricError("fit_line needs at least two paired points");
  }
  const double n = static_cast<double>(x.size());
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0, sxy = 0, syy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double dx = x[i] - mx, dy = y[i] - my;
    sxx += dx * dx;
    sxy += dx * dy;
    syy += dy * dy;
  }
  if (sxx == 0.0) throw MetricError("cannot fit: zero variance in x");

  ExponentFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  fit.r_squared = syy == 0.0 ? 1.0 : std::clamp(sxy * sxy / (sxx * syy), 0.0, 1.0);
  fit.points_used = x.size();
  return fit;
}

ExponentFit fit_degree_exponent(std::span<const std::uint32_t> degrees) {
  std::vector<double> xs, ys;
  for (const CcdfPoint& p : ccdf(degrees)) {
    if (p.degree == 0 || p.fraction <= 0.0) continue;
    xs.push_back(std::log10(static_cast<double>(p.degree)));
    ys.push_back(std::log10(p.fraction));
  }
  if (xs.size() < 3) throw MetricError("cannot fit: fewer than 3 usable CCDF points");
  return fit_line(xs, ys);
}

double assortativity(const Graph& g) {
  if (g.edge_count() == 0) throw MetricError("assortativity undefined: no edges");
  const std::vector<std::uint32_t> deg = degree_sequence(g);

  // Over the 2E oriented edges: s1 = sum d_i = sum_v d_v^2,
  // s2 = sum d_i^2 = sum_v d_v^3, s12 = sum d_i d_j = sum_v d_v * sum_{u~v} d_u.
  using u128 = unsigned __int128;
  u128 s1 = 0, s2 = 0, s12 = 0;
  for (NodeId v = 0; v < g.node_count(); ++v) {
    const u128 d = deg[v];
    s1 += d * d;
    s2 += d * d * d;
    s12 += d * kernels::gather_sum(deg, g.neighbors(v));
  }
  const u128 m = 2 * static_cast<u128>(g.edge_count());
  // r = (m*s12 - s1^2) / (m*s2 - s1^2); the denominator is m^2 * variance >= 0.
  const u128 den = m * s2 - s1 * s1;
  if (den == 0) throw MetricError("assortativity undefined: zero degree variance");
  const u128 pos = m * s12;
  const u128 neg = s1 * s1;
  const double num = pos >= neg ? static_cast<double>(pos - neg)
                                : -static_cast<double>(neg - pos);
  return std::clamp(num / static_cast<double>(den), -1.0, 1.0);
}

std::vector<std::uint64_t> triangles_per_node(const Graph& g) {
  // Every triangle {u, v, w} is seen once from each of its three edges.
  std::vector<std::uint64_t> t(g.node_count(), 0);
  for (NodeId u = 0; u < g.node_count(); ++u) {
    auto nu = g.neighbors(u);
    for (NodeId v : nu) {
      if (v <= u) continue;
      const std::uint64_t c = kernels::intersect_count(nu, g.neighbors(v));
      t[u] += c;
      t[v] += c;
    }
  }
  for (auto& x : t) x /= 2;
  return t;
}

double avg_clustering(const Graph& g) {
  if (g.node_count() == 0) throw MetricError("avg_clustering of an empty graph");
  const auto t = triangles_per_node(g);
  double sum = 0.0;
  for (NodeId v = 0; v < g.node_count(); ++v) {
    const double d = g.degree(v);
    if (d >= 2) sum += 2.0 * static_cast<double>(t[v]) / (d * (d - 1.0));
  }
  return sum / static_cast<double>(g.node_count());
}

}  // namespace tinysample
