#include <gtest/gtest.h>

#include <cmath>

#include "tinysample/generator.hpp"
#include "tinysample/harness.hpp"
#include "tinysample/metrics.hpp"
#include "tinysample/samplers.hpp"

using namespace tinysample;

namespace {

class DeskScale : public ::testing::Test {
 protected:
  static void SetUpTestSuite() {
    graph_ = new Graph(generate_ba({100000, 2, 1}));
    exponent_ = fit_degree_exponent(degree_sequence(*graph_)).slope;
  }
  static void TearDownTestSuite() { delete graph_; }

  static double induced_exponent(const std::vector<NodeId>& nodes) {
    return fit_degree_exponent(degree_sequence(induced_subgraph(*graph_, nodes).graph)).slope;
  }

  static Graph* graph_;
  static double exponent_;
};

Graph* DeskScale::graph_ = nullptr;
double DeskScale::exponent_ = 0.0;

}  // namespace

TEST_F(DeskScale, FullGraphExponentInBand) {
  EXPECT_GT(exponent_, -2.2);
  EXPECT_LT(exponent_, -1.6);
}

TEST_F(DeskScale, MrwEstimateCloseToTruth) {
  OracleFactory factory(*graph_);
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    CrawlOracle o = factory.make();
    EXPECT_NEAR(estimate_exponent_mrw(o, 10000, seed).slope, exponent_, 0.3) << "seed " << seed;
  }
}

TEST_F(DeskScale, NegativeAlphaSteepensInducedExponent) {
  OracleFactory factory(*graph_);
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    CrawlOracle a = factory.make(), b = factory.make();
    const double flat = induced_exponent(brwfb_sample(a, 5000, 0.0, seed).nodes);
    const double steep = induced_exponent(brwfb_sample(b, 5000, -1.0, seed).nodes);
    EXPECT_LT(steep, flat) << "seed " << seed;
  }
}

TEST_F(DeskScale, SnowballGapExceedsTseGap) {
  OracleFactory factory(*graph_);
  int wins = 0;
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    CrawlOracle o = factory.make();
    const double snow = induced_exponent(snowball_sample(o, 20000, seed).nodes);
    const double tse = induced_exponent(tiny_sample_extractor(factory, 20000, seed).trace.nodes);
    wins += std::abs(snow - exponent_) > std::abs(tse - exponent_);
  }
  EXPECT_GE(wins, 8);
}

TEST_F(DeskScale, TseConvergesCloserThanForestFire) {
  ExperimentConfig cfg;
  cfg.graph_path = "unused.txt";
  cfg.samplers = {parse_sampler_spec("tse"), parse_sampler_spec("forestfire:pf=0.7")};
  for (std::uint64_t s = 1; s <= 10; ++s) cfg.seeds.push_back(s);
  cfg.checkpoints = {0.05};
  cfg.parallelism = 4;
  double gap_tse = 0.0, gap_ff = 0.0;
  for (const auto& r : run_convergence(cfg, *graph_)) {
    ASSERT_TRUE(r.degree_exponent) << r.sampler << ": " << r.note;
    const double gap = std::abs(*r.degree_exponent - exponent_) / 10.0;
    (r.sampler == "tse" ? gap_tse : gap_ff) += gap;
  }
  EXPECT_LT(gap_tse, gap_ff);
}

TEST_F(DeskScale, SweepOrdersByAlpha) {
  ExperimentConfig cfg;
  cfg.graph_path = "unused.txt";
  cfg.seeds = {1, 2, 3, 4, 5};
  cfg.alpha_sweep = {-1.0, 0.0, 1.0};
  cfg.parallelism = 4;
  SweepResult r = run_alpha_sweep(cfg, *graph_, 5000);
  ASSERT_EQ(r.mean_exponents.size(), 3u);
  EXPECT_LT(r.mean_exponents[0], r.mean_exponents[1]);
  EXPECT_LT(r.mean_exponents[1], r.mean_exponents[2]);
  EXPECT_TRUE(r.strictly_monotone);
}
