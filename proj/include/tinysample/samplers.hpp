#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "tinysample/crawl_oracle.hpp"
#include "tinysample/metrics.hpp"
#include "tinysample/rng.hpp"

namespace tinysample {

class SamplingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Distinct sampled nodes in discovery order plus the crawl cost.
struct SampleTrace {
  std::vector<NodeId> nodes;
  AccessStats stats;
  std::string sampler_label;
  std::uint64_t rng_seed = 0;
  std::optional<double> alpha;
};

// Called after every emitted node with the sample size so far and the
// oracle counters at that moment.
using EmitObserver = std::function<void(std::size_t size, const AccessStats& stats)>;

struct SampleOptions {
  std::optional<NodeId> start;  // default: a random entry point
  EmitObserver on_emit;
};

// ---------------------------------------------------------------------------
// Metropolized random walk

// min(1, deg_x / deg_y).
double mrw_acceptance(std::uint32_t deg_x, std::uint32_t deg_y);

// `steps` Metropolis-Hastings moves from `start`; returns the degree of the
// current node after every step (a rejected move re-records deg(x)).
std::vector<std::uint32_t> mrw_walk(CrawlOracle& oracle, NodeId start,
                                    std::uint64_t steps, Rng& rng);

// Burn-in of max(100, h / 10) steps, then h recorded steps, then a CCDF fit
// over the recorded degrees. Requires h >= 100.
ExponentFit estimate_exponent_mrw(CrawlOracle& oracle, std::size_t h,
                                  std::uint64_t seed,
                                  std::optional<NodeId> start = std::nullopt);

// The nodes an MRW walk visits, in order of first visit, until h are found.
SampleTrace mrw_sample(CrawlOracle& oracle, std::size_t h, std::uint64_t seed,
                       const SampleOptions& opts = {});

// ---------------------------------------------------------------------------
// Biased random walk with fly-back

// B(x, y) = deg(y)^alpha / sum over neighbors n of x of deg(n)^alpha, in the
// order of oracle.neighbors(x).
std::vector<double> brwfb_probabilities(CrawlOracle& oracle, NodeId x, double alpha);

// One biased step from x.
NodeId brwfb_transition(CrawlOracle& oracle, NodeId x, double alpha, Rng& rng);

struct WalkGuard {
  // An inner walk gives up after max(steps_per_node * |N|, min_steps) steps
  // without discovery and flies back; `max_consecutive_trips` such give-ups
  // in a row abort the run.
  std::uint64_t steps_per_node = 10;
  std::uint64_t min_steps = 1000;
  int max_consecutive_trips = 50;
};

// Walk from the start node through already-sampled nodes until an unsampled
// node turns up, add it, fly back to the start; repeat until h nodes.
SampleTrace brwfb_sample(CrawlOracle& oracle, std::size_t h, double alpha,
                         std::uint64_t seed, const SampleOptions& opts = {},
                         const WalkGuard& guard = {});

// ---------------------------------------------------------------------------
// BFS-style baselines

// Level-synchronous BFS; frontier order and per-node neighbor order are
// shuffled. Stops exactly at h, mid-level if need be.
SampleTrace snowball_sample(CrawlOracle& oracle, std::size_t h, std::uint64_t seed,
                            const SampleOptions& opts = {});

// Each burning node burns min(k, #unburned neighbors) of its unburned
// neighbors, k ~ Geometric(1 - pf) on {0, 1, ...} (mean pf / (1 - pf)).
// A dead fire reignites at a random sampled node; after 100 fruitless
// reignitions in a row, it restarts at an unburned node next to the sample.
SampleTrace forest_fire_sample(CrawlOracle& oracle, std::size_t h, double pf,
                               std::uint64_t seed, const SampleOptions& opts = {});

// Links a burning node ignites: failures before the first success of a
// (1 - pf)-coin, so P(k) = pf^k (1 - pf).
std::geometric_distribution<std::uint64_t> burn_count_distribution(double pf);

inline constexpr double kDefaultBurnProbability = 0.7;
inline constexpr int kMaxFruitlessReignitions = 100;

// ---------------------------------------------------------------------------
// Tiny Sample Extractor

struct TseReport {
  ExponentFit mrw_fit;     // D: the MRW estimate of the full graph
  ExponentFit fit_alpha0;  // D0: induced sample at alpha = 0
  ExponentFit fit_alpha1;  // D1: induced sample at alpha = -1
  double alpha = 0.0;
  // Oracle counters of each stage: MRW, alpha = 0, alpha = -1, final.
  AccessStats stage_stats[4];
  // Sum of distinct_visited over the four stages (each stage crawls afresh).
  std::uint64_t total_distinct_visited = 0;
  std::uint64_t total_neighbor_queries = 0;
};

struct TseResult {
  SampleTrace trace;
  TseReport report;
};

struct TseOptions {
  std::optional<NodeId> start;  // shared by every stage when set
  double calibration_epsilon = 1e-3;
  EmitObserver on_emit;          // observes the final extraction only
  WalkGuard guard;
};

// alpha = -(D - D0) / (D1 - D0). Throws SamplingError ("calibration
// degenerate") when |D1 - D0| < epsilon.
double tse_alpha(double d, double d0, double d1, double epsilon = 1e-3);

// Stage k of a run seeded with `seed` uses derive_seed(seed, k).
TseResult tiny_sample_extractor(const OracleFactory& factory, std::size_t h,
                                std::uint64_t seed, const TseOptions& opts = {});

// Degrees of `nodes` within the subgraph they induce, read via the oracle.
std::vector<std::uint32_t> induced_degrees(CrawlOracle& oracle,
                                           std::span<const NodeId> nodes);

}  // namespace tinysample
