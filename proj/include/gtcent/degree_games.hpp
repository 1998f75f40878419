#pragma once

#include <functional>
#include <vector>

#include "gtcent/centrality.hpp"
#include "gtcent/graph.hpp"
#include "gtcent/oracles.hpp"

namespace gtcent {

// The five degree/closeness games. On directed graphs a node is reached along
// out-arcs, so thresholds and extended degrees are counted over in-arcs.
enum class DegreeGame { g1, g2, g3, g4, g5 };

struct DegreeGameSpec {
  DegreeGame game = DegreeGame::g1;
  std::vector<int> k;               // g2: neighbours needed to be influenced, 1..1+deg
  std::vector<double> d_cutoff;     // g3: per-node reach distance, > 0
  std::function<double(double)> f;  // g4: non-increasing in distance; never called with inf
  std::vector<double> w_cutoff;     // g5: per-node influence threshold, > 0

  // Throws std::invalid_argument on a spec that does not fit g.
  void validate(const Graph& g) const;
};

// Distances in g3/g4 are weighted shortest-path lengths (0 to itself).
double nu_degree_game(const Graph& g, const DegreeGameSpec& spec, const std::vector<int>& coalition);
CoalitionGame as_coalition_game(const Graph& g, const DegreeGameSpec& spec);

CentralityResult sv_g1(const Graph& g);
CentralityResult sv_g2(const Graph& g, const std::vector<int>& k);
CentralityResult sv_g3(const Graph& g, const std::vector<double>& d_cutoff);
CentralityResult sv_g4(const Graph& g, const std::function<double(double)>& f);

struct G5Options {
  // Terms whose weight population has at most this many members are counted exactly;
  // 0 forces the normal approximation everywhere.
  int exact_degree_limit = 20;
};
CentralityResult sv_g5_approx(const Graph& g, const std::vector<double>& w_cutoff,
                              const G5Options& opts = {});

// Convenience dispatcher over the exact algorithms above (g5 uses sv_g5_approx).
CentralityResult shapley_degree_game(const Graph& g, const DegreeGameSpec& spec);

}  // namespace gtcent
