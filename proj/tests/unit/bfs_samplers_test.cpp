#include <gtest/gtest.h>

#include <cmath>
#include <set>

#include "fixtures.hpp"
#include "tinysample/samplers.hpp"

using namespace tinysample;
namespace fx = tinysample::testing;

namespace {

SampleOptions from(NodeId start) {
  SampleOptions opts;
  opts.start = start;
  return opts;
}

std::size_t distinct(const std::vector<NodeId>& v) {
  return std::set<NodeId>(v.begin(), v.end()).size();
}

}  // namespace

TEST(Snowball, StarTakesCenterThenLeaves) {
  Graph star = fx::star_graph(5);
  std::set<std::vector<NodeId>> outcomes;
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    CrawlOracle o(star);
    SampleTrace t = snowball_sample(o, 4, seed, from(0));
    ASSERT_EQ(t.nodes.size(), 4u);
    EXPECT_EQ(t.nodes[0], 0u);
    EXPECT_EQ(distinct(t.nodes), 4u);
    for (std::size_t i = 1; i < 4; ++i) EXPECT_GE(t.nodes[i], 1u);
    outcomes.insert(t.nodes);
  }
  EXPECT_GT(outcomes.size(), 1u);  // neighbor order is shuffled
}

TEST(Snowball, PathFromInteriorNode) {
  Graph path = fx::path_graph(4);
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    CrawlOracle o(path);
    SampleTrace t = snowball_sample(o, 3, seed, from(1));
    EXPECT_EQ(t.nodes[0], 1u);
    EXPECT_EQ(std::set<NodeId>(t.nodes.begin(), t.nodes.end()), (std::set<NodeId>{0, 1, 2}));
  }
}

TEST(Snowball, LevelOrder) {
  Graph g = fx::random_connected_graph(300, 200, 4);
  CrawlOracle o(g);
  SampleTrace t = snowball_sample(o, 250, 8, from(0));
  // BFS distances from the start never decrease along the trace.
  std::vector<int> dist(g.node_count(), -1);
  std::vector<NodeId> queue{0};
  dist[0] = 0;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (NodeId w : g.neighbors(queue[i])) {
      if (dist[w] < 0) {
        dist[w] = dist[queue[i]] + 1;
        queue.push_back(w);
      }
    }
  }
  for (std::size_t i = 1; i < t.nodes.size(); ++i) {
    ASSERT_LE(dist[t.nodes[i - 1]], dist[t.nodes[i]]);
  }
  EXPECT_EQ(distinct(t.nodes), 250u);
}

TEST(Snowball, ExhaustedComponentThrows) {
  Graph g = fx::make_graph(6, {{0, 1}, {1, 2}, {3, 4}});
  CrawlOracle o(g);
  EXPECT_THROW(snowball_sample(o, 4, 1, from(0)), SamplingError);
  CrawlOracle o2(g);
  EXPECT_THROW(snowball_sample(o2, 0, 1, from(0)), SamplingError);
}

TEST(Snowball, Deterministic) {
  Graph g = fx::random_connected_graph(300, 300, 5);
  CrawlOracle a(g), b(g);
  EXPECT_EQ(snowball_sample(a, 100, 3).nodes, snowball_sample(b, 100, 3).nodes);
}

TEST(ForestFire, TriangleIsFullyBurned) {
  Graph k3 = fx::complete_graph(3);
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    CrawlOracle o(k3);
    SampleTrace t = forest_fire_sample(o, 3, 0.7, seed);
    EXPECT_EQ(std::set<NodeId>(t.nodes.begin(), t.nodes.end()), (std::set<NodeId>{0, 1, 2}));
  }
}

TEST(ForestFire, BurnCountMean) {
  auto dist = burn_count_distribution(0.7);
  Rng rng(1);
  const int draws = 1'000'000;
  double sum = 0.0, sumsq = 0.0;
  for (int i = 0; i < draws; ++i) {
    const double k = static_cast<double>(dist(rng));
    sum += k;
    sumsq += k * k;
  }
  const double mean = sum / draws;
  // Var = pf / (1 - pf)^2.
  const double se = std::sqrt(0.7 / (0.3 * 0.3) / draws);
  EXPECT_NEAR(mean, 7.0 / 3.0, 4 * se);
  EXPECT_NEAR(sumsq / draws - mean * mean, 0.7 / 0.09, 0.1);
}

TEST(ForestFire, BurnCountNearZeroProbability) {
  auto dist = burn_count_distribution(1e-9);
  Rng rng(2);
  for (int i = 0; i < 10000; ++i) ASSERT_EQ(dist(rng), 0u);
}

TEST(ForestFire, TinyBurnProbabilityStillCompletes) {
  // Fires die immediately, so progress comes from restarts next to the sample.
  Graph path = fx::path_graph(50);
  CrawlOracle o(path);
  SampleTrace t = forest_fire_sample(o, 20, 1e-9, 3, from(0));
  ASSERT_EQ(t.nodes.size(), 20u);
  EXPECT_EQ(distinct(t.nodes), 20u);
}

TEST(ForestFire, InvalidBurnProbability) {
  Graph g = fx::path_graph(5);
  for (double pf : {0.0, 1.0, -0.1, 1.5}) {
    CrawlOracle o(g);
    EXPECT_THROW(forest_fire_sample(o, 3, pf, 1), SamplingError) << pf;
  }
}

TEST(ForestFire, ExhaustedComponentThrows) {
  Graph g = fx::make_graph(6, {{0, 1}, {1, 2}, {3, 4}});
  CrawlOracle o(g);
  EXPECT_THROW(forest_fire_sample(o, 4, 0.7, 1, from(0)), SamplingError);
}

TEST(ForestFire, DistinctConnectedSample) {
  Graph g = fx::random_connected_graph(1000, 1500, 6);
  CrawlOracle o(g);
  SampleTrace t = forest_fire_sample(o, 400, 0.7, 9);
  ASSERT_EQ(t.nodes.size(), 400u);
  EXPECT_EQ(distinct(t.nodes), 400u);
  // Every node after the first is burned from, or restarted next to, the sample.
  EXPECT_TRUE(is_connected(induced_subgraph(g, t.nodes).graph));
  EXPECT_EQ(t.sampler_label, "forestfire");
}

TEST(ForestFire, Deterministic) {
  Graph g = fx::random_connected_graph(500, 500, 7);
  CrawlOracle a(g), b(g);
  SampleTrace ta = forest_fire_sample(a, 200, 0.7, 5);
  SampleTrace tb = forest_fire_sample(b, 200, 0.7, 5);
  EXPECT_EQ(ta.nodes, tb.nodes);
  EXPECT_EQ(ta.stats, tb.stats);
}
