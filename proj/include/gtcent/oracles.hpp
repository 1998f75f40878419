#pragma once

#include <functional>
#include <vector>

#include "gtcent/graph.hpp"
#include "gtcent/subgraphs.hpp"

namespace gtcent {

// Players are 0..n-1; value(0) must be 0.
struct CoalitionGame {
  int n = 0;
  std::function<double(Mask)> value;
};

// Value of an ordered coalition (a sequence of distinct players); the empty sequence is worth 0.
struct OrderedGame {
  int n = 0;
  std::function<double(const std::vector<int>&)> value;
};

// beta[k] is the probability of a coalition of k other players, k = 0..n-1.
struct SemivalueWeights {
  std::vector<double> beta;

  static SemivalueWeights shapley(int n);
  static SemivalueWeights banzhaf(int n);
  // Throws std::invalid_argument unless beta is a distribution of the given length.
  void validate(std::size_t expected_size) const;
};

// beta over the m-1 other communities, alpha[j] over the |C_j|-1 other members of community j.
struct CoalitionalWeights {
  std::vector<double> beta;
  std::vector<std::vector<double>> alpha;

  void validate(const CommunityStructure& cs) const;
};

inline constexpr int kSubsetOracleLimit = 12;
inline constexpr int kOrderedOracleLimit = 8;

// Exhaustive evaluation of the defining sums. Exceeding the limit throws SizeLimitError.
std::vector<double> exact_shapley(const CoalitionGame& game, int limit = kSubsetOracleLimit);
std::vector<double> exact_semivalue(const CoalitionGame& game, const SemivalueWeights& w,
                                    int limit = kSubsetOracleLimit);
// For the Owen family the limit applies to the number of communities and to each community size.
std::vector<double> exact_owen(const CoalitionGame& game, const CommunityStructure& cs,
                               int limit = kSubsetOracleLimit);
std::vector<double> exact_coalitional_semivalue(const CoalitionGame& game,
                                                const CommunityStructure& cs,
                                                const CoalitionalWeights& w,
                                                int limit = kSubsetOracleLimit);
std::vector<double> exact_nowak_radzik(const OrderedGame& game, int limit = kOrderedOracleLimit);
std::vector<double> exact_sanchez_bergantinos(const OrderedGame& game,
                                              int limit = kOrderedOracleLimit);

// Shapley value by enumerating all n! orderings; only used to cross-check the subset form.
std::vector<double> permutation_shapley(const CoalitionGame& game, int limit = 9);

// Mean of the game over all orderings of the full player set.
double mean_over_orderings(const OrderedGame& game);

}  // namespace gtcent
