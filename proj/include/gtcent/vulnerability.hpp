#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gtcent/betweenness.hpp"
#include "gtcent/centrality.hpp"
#include "gtcent/graph.hpp"

namespace gtcent {

// Sum of 1/d over ordered pairs, edge-count distances; removed nodes are skipped.
double igm(const Graph& g, const std::vector<char>* removed = nullptr);

// Uniform over coalition sizes a..b-1. Throws std::invalid_argument unless 1 <= a < b <= n+1.
SizeDistribution interval_pd(int a, int b, int n);

struct ProtectionStrategy {
  // none leaves every exposed node to fail.
  enum class Kind { rank_inverse_square, top_fraction, full, none };
  Kind kind = Kind::rank_inverse_square;
  double fraction = 1.0;  // top_fraction only, in (0, 1]

  static ProtectionStrategy parse(const std::string& text);
  std::string name() const;
};

struct FailureModel {
  int a = 1, b = 2;  // failure-set size drawn uniformly from [a, b)
  int trials = 1000;
  std::uint64_t seed = 1;
};

struct SimulationResult {
  double mean = 0;
  double stddev = 0;
  double ci_low = 0, ci_high = 0;  // 75% normal interval for the mean
  int trials = 0;
};

// 1-based ranks by descending score, ties to the lower node index.
std::vector<int> ranks_of(const std::vector<double>& scores);

SimulationResult simulate_failures(const Graph& g, const CentralityResult& ranking,
                                   const ProtectionStrategy& strategy, const FailureModel& model);

// "interval,strategy,measure,mean_igm,ci_low,ci_high,seed"
std::string simulation_csv_header();
std::string simulation_csv_row(const FailureModel& model, const ProtectionStrategy& strategy,
                               const std::string& measure, const SimulationResult& r);

}  // namespace gtcent
