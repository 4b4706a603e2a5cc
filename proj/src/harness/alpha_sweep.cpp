#include <ostream>

#include "parallel.hpp"
#include "tinysample/crawl_oracle.hpp"
#include "tinysample/harness.hpp"
#include "tinysample/samplers.hpp"

namespace tinysample {

SweepResult run_alpha_sweep(const ExperimentConfig& cfg, const Graph& g, std::size_t h) {
  if (cfg.alpha_sweep.empty()) throw ConfigError("alpha_sweep must not be empty");
  if (cfg.seeds.empty()) throw ConfigError("seeds must not be empty");
  if (h == 0) throw ConfigError("sweep size must be positive");

  SweepResult result;
  for (double a : cfg.alpha_sweep) {
    for (std::uint64_t seed : cfg.seeds) result.rows.push_back({a, seed, std::nullopt, {}});
  }
  detail::parallel_for(result.rows.size(), cfg.parallelism, [&](std::size_t i) {
    SweepRow& row = result.rows[i];
    try {
      CrawlOracle oracle(g);
      const SampleTrace trace = brwfb_sample(oracle, h, row.alpha, row.seed);
      row.fit = fit_degree_exponent(degree_sequence(induced_subgraph(g, trace.nodes).graph));
    } catch (const std::exception& e) {
      row.note = e.what();
    }
  });

  std::size_t i = 0;
  for (double a : cfg.alpha_sweep) {
    double sum = 0.0;
    std::size_t count = 0;
    for (std::size_t s = 0; s < cfg.seeds.size(); ++s, ++i) {
      if (result.rows[i].fit) {
        sum += result.rows[i].fit->slope;
        ++count;
      }
    }
    if (count > 0) {
      result.alphas.push_back(a);
      result.mean_exponents.push_back(sum / static_cast<double>(count));
    }
  }

  const auto& m = result.mean_exponents;
  if (m.size() >= 2) {
    bool increasing = true, decreasing = true;
    for (std::size_t k = 1; k < m.size(); ++k) {
      increasing &= m[k] > m[k - 1];
      decreasing &= m[k] < m[k - 1];
    }
    result.strictly_monotone = result.alphas.size() == cfg.alpha_sweep.size() &&
                               (increasing || decreasing);
    try {
      result.line = fit_line(result.alphas, m);
    } catch (const MetricError&) {
    }
  }
  return result;
}

void write_sweep_csv(std::ostream& out, const SweepResult& result) {
  out << "alpha,seed,degree_exponent,r_squared,intercept,note\r\n";
  for (const SweepRow& r : result.rows) {
    out << format_double(r.alpha) << ',' << r.seed << ','
        << (r.fit ? format_double(r.fit->slope) : "nan") << ','
        << (r.fit ? format_double(r.fit->r_squared) : "nan") << ",," << csv_field(r.note)
        << "\r\n";
  }
  // Trailing summary: least-squares line of the per-alpha mean exponent on alpha.
  out << "summary,,";
  if (result.line) {
    out << format_double(result.line->slope) << ',' << format_double(result.line->r_squared)
        << ',' << format_double(result.line->intercept);
  } else {
    out << "nan,nan,nan";
  }
  out << ','
      << csv_field(std::string("mean exponent vs alpha; monotone=") +
                   (result.strictly_monotone ? "true" : "false"))
      << "\r\n";
}

}  // namespace tinysample
