#pragma once

#include <functional>
#include <vector>

#include "gtcent/centrality.hpp"
#include "gtcent/graph.hpp"
#include "gtcent/oracles.hpp"

namespace gtcent {

// Parametrised betweenness: f scales each pair dependency by the size of the
// geodesic (nodes on the path), g is the per-source term for the pair (s, v).
struct PairWeighting {
  std::function<double(int)> f;
  std::function<double(int)> g;
};

// pd[k-1] is the probability of a coalition of size k, k = 1..n.
struct SizeDistribution {
  std::vector<double> pd;

  static SizeDistribution uniform(int n);
  static SizeDistribution from_semivalue(const SemivalueWeights& w) { return {w.beta}; }
  SemivalueWeights as_semivalue() const { return {pd}; }
  void validate(int n) const;
};

// Unweighted graphs, geodesics measured in nodes.
CentralityResult pbc(const Graph& g, const PairWeighting& w);
CentralityResult svb(const Graph& g);
CentralityResult semivalue_betweenness(const Graph& g, const SizeDistribution& pd);

// Weighted graphs; f and g see the number of nodes on each weighted geodesic.
CentralityResult wpbc(const Graph& g, const PairWeighting& w);
CentralityResult wsvb(const Graph& g);
CentralityResult wsb(const Graph& g, const SizeDistribution& pd);

// The weighting whose pbc equals the semivalue term for coalitions of size k.
PairWeighting semivalue_weighting(int n, int k);

// Semivalue betweenness as the plain k-loop of pbc / wpbc calls.
CentralityResult semivalue_betweenness_by_k(const Graph& g, const SizeDistribution& pd,
                                            DistanceMode mode);

// Pair dependencies bucketed by geodesic size, summed over all sources. Any
// PairWeighting can then be evaluated in O(n * max_size).
class BetweennessProfile {
 public:
  BetweennessProfile(const Graph& g, DistanceMode mode);
  std::vector<double> apply(const PairWeighting& w) const;
  int max_size() const { return max_size_; }

 private:
  bool directed_ = false;
  int max_size_ = 1;
  std::vector<std::vector<double>> through_;   // [v][size]
  std::vector<std::vector<double>> endpoint_;  // [v][size]
};

// The group betweenness game, for the oracles.
CoalitionGame group_betweenness_game(const Graph& g, DistanceMode mode = DistanceMode::unweighted);

}  // namespace gtcent
