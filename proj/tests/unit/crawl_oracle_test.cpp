#include <gtest/gtest.h>

#include <algorithm>

#include "fixtures.hpp"
#include "tinysample/crawl_oracle.hpp"

using namespace tinysample;
namespace fx = tinysample::testing;

TEST(CrawlOracle, Degree) {
  Graph star = fx::star_graph(4);
  CrawlOracle o(star);
  EXPECT_EQ(o.degree(0), 4u);

  Graph with_isolated = fx::make_graph(3, {{0, 1}});
  CrawlOracle o2(with_isolated);
  EXPECT_EQ(o2.degree(2), 0u);
}

TEST(CrawlOracle, RepeatedDegreeQueriesKeepVisitedSet) {
  Graph g = fx::path_graph(4);
  CrawlOracle o(g);
  EXPECT_EQ(o.degree(1), 2u);
  EXPECT_EQ(o.stats().distinct_visited, 1u);
  EXPECT_EQ(o.degree(1), 2u);
  EXPECT_EQ(o.stats().distinct_visited, 1u);
  EXPECT_EQ(o.stats().degree_queries, 2u);
}

TEST(CrawlOracle, Neighbors) {
  Graph path = fx::path_graph(3);
  CrawlOracle o(path);
  auto n = o.neighbors(1);
  EXPECT_EQ(std::vector<NodeId>(n.begin(), n.end()), (std::vector<NodeId>{0, 2}));

  Graph star = fx::star_graph(5);
  CrawlOracle o2(star);
  auto leaf = o2.neighbors(3);
  EXPECT_EQ(std::vector<NodeId>(leaf.begin(), leaf.end()), (std::vector<NodeId>{0}));
}

TEST(CrawlOracle, CounterContract) {
  Graph k3 = fx::complete_graph(3);
  CrawlOracle o(k3);
  o.neighbors(0);
  EXPECT_EQ(o.stats().neighbor_queries, 1u);
  EXPECT_EQ(o.stats().distinct_visited, 3u);
}

TEST(CrawlOracle, InvalidIdsThrow) {
  Graph g = fx::path_graph(3);
  CrawlOracle o(g);
  EXPECT_THROW(o.degree(3), GraphError);
  EXPECT_THROW(o.neighbors(100), GraphError);
  EXPECT_THROW(o.require_node(3), GraphError);
  EXPECT_EQ(o.stats(), AccessStats{});
}

TEST(CrawlOracle, SymmetryAndDegreeConsistency) {
  Graph g = fx::random_graph(60, 0.08, 3);
  CrawlOracle o(g);
  Rng rng(5);
  AccessStats prev;
  for (int k = 0; k < 2000; ++k) {
    NodeId x = o.entry_point(rng), y = o.entry_point(rng);
    auto nx = o.neighbors(x);
    auto ny = o.neighbors(y);
    bool y_in_x = std::binary_search(nx.begin(), nx.end(), y);
    bool x_in_y = std::binary_search(ny.begin(), ny.end(), x);
    ASSERT_EQ(y_in_x, x_in_y);
    ASSERT_EQ(o.degree(x), nx.size());

    const AccessStats& s = o.stats();
    ASSERT_GE(s.neighbor_queries, prev.neighbor_queries);
    ASSERT_GE(s.degree_queries, prev.degree_queries);
    ASSERT_GE(s.distinct_visited, prev.distinct_visited);
    prev = s;
  }
}

TEST(CrawlOracle, FactoryMakesIndependentOracles) {
  Graph g = fx::path_graph(5);
  OracleFactory f(g);
  CrawlOracle a = f.make();
  a.neighbors(2);
  CrawlOracle b = f.make();
  EXPECT_EQ(b.stats(), AccessStats{});
  EXPECT_EQ(a.stats().distinct_visited, 3u);
}
