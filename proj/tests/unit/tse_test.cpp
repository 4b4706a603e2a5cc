#include <gtest/gtest.h>

#include <cmath>
#include <set>
#include <type_traits>

#include "fixtures.hpp"
#include "tinysample/generator.hpp"
#include "tinysample/samplers.hpp"

using namespace tinysample;
namespace fx = tinysample::testing;

// Samplers only ever see the graph through an oracle.
static_assert(!std::is_invocable_v<decltype(&brwfb_sample), const Graph&, std::size_t,
                                   double, std::uint64_t, const SampleOptions&,
                                   const WalkGuard&>);
static_assert(!std::is_invocable_v<decltype(&tiny_sample_extractor), const Graph&,
                                   std::size_t, std::uint64_t, const TseOptions&>);
static_assert(!std::is_invocable_v<decltype(&snowball_sample), const Graph&, std::size_t,
                                   std::uint64_t, const SampleOptions&>);

TEST(TseAlpha, Examples) {
  EXPECT_EQ(tse_alpha(-2.0, -2.0, -2.5), 0.0);
  EXPECT_EQ(tse_alpha(-2.5, -2.0, -2.5), -1.0);
  EXPECT_DOUBLE_EQ(tse_alpha(-2.0, -1.5, -2.5), -0.5);
  // Extrapolates outside [-1, 0] without clamping.
  EXPECT_DOUBLE_EQ(tse_alpha(-1.0, -1.5, -2.5), 0.5);
}

TEST(TseAlpha, DegenerateCalibration) {
  try {
    tse_alpha(-2.0, -1.8, -1.8005);
    FAIL() << "expected SamplingError";
  } catch (const SamplingError& e) {
    EXPECT_NE(std::string(e.what()).find("calibration degenerate"), std::string::npos);
  }
  EXPECT_THROW(tse_alpha(-2.0, -1.8, -1.8), SamplingError);
  EXPECT_NO_THROW(tse_alpha(-2.0, -1.8, -1.9, 0.05));
}

TEST(InducedDegrees, MatchesInducedSubgraph) {
  Graph g = fx::random_connected_graph(200, 400, 8);
  std::vector<NodeId> nodes;
  for (NodeId v = 0; v < 200; v += 3) nodes.push_back(v);
  CrawlOracle o(g);
  auto got = induced_degrees(o, nodes);
  EXPECT_EQ(got, degree_sequence(induced_subgraph(g, nodes).graph));
  EXPECT_EQ(o.stats().neighbor_queries, nodes.size());
}

class TseRun : public ::testing::Test {
 protected:
  static void SetUpTestSuite() { graph_ = new Graph(generate_ba({20000, 2, 11})); }
  static void TearDownTestSuite() { delete graph_; }
  static Graph* graph_;
};

Graph* TseRun::graph_ = nullptr;

TEST_F(TseRun, ReportIsConsistent) {
  OracleFactory factory(*graph_);
  TseResult r = tiny_sample_extractor(factory, 500, 3);
  ASSERT_EQ(r.trace.nodes.size(), 500u);
  EXPECT_EQ(std::set<NodeId>(r.trace.nodes.begin(), r.trace.nodes.end()).size(), 500u);
  EXPECT_EQ(r.trace.sampler_label, "tse");
  ASSERT_TRUE(r.trace.alpha);
  EXPECT_EQ(*r.trace.alpha, r.report.alpha);
  EXPECT_TRUE(std::isfinite(r.report.alpha));
  EXPECT_DOUBLE_EQ(r.report.alpha, tse_alpha(r.report.mrw_fit.slope, r.report.fit_alpha0.slope,
                                             r.report.fit_alpha1.slope));

  std::uint64_t distinct = 0, queries = 0;
  for (const AccessStats& s : r.report.stage_stats) {
    EXPECT_GT(s.distinct_visited, 0u);
    distinct += s.distinct_visited;
    queries += s.neighbor_queries;
  }
  EXPECT_EQ(r.report.total_distinct_visited, distinct);
  EXPECT_EQ(r.report.total_neighbor_queries, queries);
  EXPECT_EQ(r.trace.stats, r.report.stage_stats[3]);
  EXPECT_GE(r.report.stage_stats[3].distinct_visited, 500u);
}

TEST_F(TseRun, Deterministic) {
  OracleFactory factory(*graph_);
  TseResult a = tiny_sample_extractor(factory, 300, 21);
  TseResult b = tiny_sample_extractor(factory, 300, 21);
  EXPECT_EQ(a.trace.nodes, b.trace.nodes);
  EXPECT_EQ(a.report.alpha, b.report.alpha);
  EXPECT_EQ(a.report.total_distinct_visited, b.report.total_distinct_visited);
  TseResult c = tiny_sample_extractor(factory, 300, 22);
  EXPECT_NE(a.trace.nodes, c.trace.nodes);
}

TEST_F(TseRun, StartIsSharedByAllStages) {
  OracleFactory factory(*graph_);
  TseOptions opts;
  opts.start = 123;
  std::size_t emitted = 0;
  opts.on_emit = [&](std::size_t, const AccessStats&) { ++emitted; };
  TseResult r = tiny_sample_extractor(factory, 200, 4, opts);
  EXPECT_EQ(r.trace.nodes.front(), 123u);
  EXPECT_EQ(emitted, 200u);  // final stage only
}

TEST_F(TseRun, CalibrationDegenerateSurfaces) {
  OracleFactory factory(*graph_);
  TseOptions opts;
  opts.calibration_epsilon = 1e9;
  EXPECT_THROW(tiny_sample_extractor(factory, 200, 4, opts), SamplingError);
}

TEST(Tse, RequiresReasonableH) {
  Graph g = fx::random_connected_graph(500, 1000, 1);
  OracleFactory factory(g);
  EXPECT_THROW(tiny_sample_extractor(factory, 99, 1), SamplingError);
}
