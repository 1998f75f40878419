#pragma once

#include <string>
#include <vector>

#include "gtcent/centrality.hpp"
#include "gtcent/graph.hpp"
#include "gtcent/oracles.hpp"

namespace gtcent {

enum class WeightPreset { owen, owen_banzhaf, sym_banzhaf, p_binomial };

// Throws std::invalid_argument on an unknown name.
WeightPreset parse_weight_preset(const std::string& name);

// p is only read for p_binomial and must lie in [0, 1].
CoalitionalWeights preset_weights(WeightPreset preset, const CommunityStructure& cs, double p = 0.5);

// Weighted group degree: total f over the nodes outside C adjacent to C.
// An empty f means every node weighs 1.
double nu_weighted_degree(const Graph& g, const std::vector<double>& f, const std::vector<int>& coalition);
CoalitionGame weighted_degree_game(const Graph& g, std::vector<double> f = {});

CentralityResult coalitional_semivalue_degree(const Graph& g, const CommunityStructure& cs,
                                              const CoalitionalWeights& w,
                                              std::vector<double> f = {});
CentralityResult owen_degree(const Graph& g, const CommunityStructure& cs, std::vector<double> f = {});

}  // namespace gtcent
