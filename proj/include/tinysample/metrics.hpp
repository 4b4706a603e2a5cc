#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "tinysample/graph.hpp"

namespace tinysample {

class MetricError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CcdfPoint {
  std::uint32_t degree;
  double fraction;  // share of entries with degree strictly greater
};

/// Least-squares line through log-log CCDF points. `slope` is the degree
/// exponent.
struct ExponentFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
  std::size_t points_used = 0;
};

// One point per distinct degree, ascending; the last fraction is always 0.
// Throws MetricError on empty input.
std::vector<CcdfPoint> ccdf(std::span<const std::uint32_t> degrees);

// OLS over (log10 d, log10 CCDF(d)) for each distinct d >= 1 with CCDF(d) > 0.
// Degree-0 entries stay in the CCDF denominator. Throws MetricError
// ("cannot fit") with fewer than 3 usable points.
ExponentFit fit_degree_exponent(std::span<const std::uint32_t> degrees);

// Plain OLS of y on x; throws MetricError if x has zero variance or fewer
// than 2 points. r_squared is 1 when y has zero variance.
ExponentFit fit_line(std::span<const double> x, std::span<const double> y);

// Degree assortativity: Pearson correlation of endpoint degrees over both
// orientations of every edge. Throws MetricError when there are no edges or
// the endpoint degrees have zero variance ("assortativity undefined").
double assortativity(const Graph& g);

// Triangles through each node.
std::vector<std::uint64_t> triangles_per_node(const Graph& g);

// Mean over all nodes of 2T(v) / (d(d - 1)); nodes with degree <= 1 count
// as 0. Throws MetricError on an empty graph.
double avg_clustering(const Graph& g);

}  // namespace tinysample
