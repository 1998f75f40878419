#pragma once

#include <cstdint>
#include <vector>

#include "gtcent/centrality.hpp"
#include "gtcent/degree_games.hpp"
#include "gtcent/oracles.hpp"

namespace gtcent {

// Mean marginal contribution over max_iter random orderings. Deterministic in seed.
std::vector<double> monte_carlo_shapley(const CoalitionGame& game, std::uint64_t max_iter,
                                        std::uint64_t seed);

// Single-pass marginal contributions of each node along one ordering of all nodes,
// using per-game working arrays instead of evaluating the game twice per prefix.
class DegreeBlock {
 public:
  DegreeBlock(const Graph& g, DegreeGameSpec spec);
  // out[v] is v's contribution to the set of nodes preceding it in perm.
  void contributions(const std::vector<int>& perm, std::vector<double>& out);

 private:
  const Graph& g_;
  DegreeGameSpec spec_;
  std::vector<std::vector<int>> reach_;     // g3: nodes whose cutoff v falls within
  std::vector<std::vector<double>> dist_;   // g4: dist_[v][u] from v to u
  std::vector<char> counted_;
  std::vector<int> edges_;
  std::vector<double> weights_;
  std::vector<double> best_;
};

std::vector<double> monte_carlo_degree_block(const Graph& g, const DegreeGameSpec& spec,
                                             const std::vector<int>& perm);

// Reference for the block: each contribution from two evaluations of the game.
std::vector<double> generic_degree_block(const Graph& g, const DegreeGameSpec& spec,
                                         const std::vector<int>& perm);

CentralityResult monte_carlo_degree(const Graph& g, const DegreeGameSpec& spec,
                                    std::uint64_t max_iter, std::uint64_t seed);

}  // namespace gtcent
