#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gtcent/graph.hpp"
#include "gtcent/paths.hpp"

namespace gtcent {

struct CentralityResult {
  std::string measure;
  std::vector<std::pair<std::string, std::string>> params;
  std::optional<std::uint64_t> seed;
  std::vector<double> scores;  // indexed by node

  double operator[](int v) const { return scores[v]; }
  std::size_t size() const { return scores.size(); }
};

enum class ClassicKind { degree, closeness, betweenness };

// closeness is the sum of hop distances to v (unreachable nodes add 0).
// betweenness counts unordered pairs on undirected graphs, ordered pairs on directed ones.
CentralityResult classic_centrality(const Graph& g, ClassicKind kind,
                                    DistanceMode mode = DistanceMode::unweighted);

// Group measures per Everett and Borgatti. Throws std::invalid_argument on an empty group.
double group_degree(const Graph& g, const std::vector<int>& group);
double group_closeness(const Graph& g, const std::vector<int>& group);
double group_betweenness(const Graph& g, const std::vector<int>& group,
                         DistanceMode mode = DistanceMode::unweighted);
double group_centrality(const Graph& g, ClassicKind kind, const std::vector<int>& group);

// Fraction of geodesics running through the sequence in order. Pairs are unordered
// on undirected graphs and the sequence may be traversed in either direction.
double path_betweenness(const Graph& g, const std::vector<int>& seq,
                        DistanceMode mode = DistanceMode::unweighted);

// All-pairs shortest-path tables, reusable across many path_betweenness queries.
class GeodesicTable {
 public:
  GeodesicTable(const Graph& g, DistanceMode mode);
  double dist(int s, int t) const { return d_[s][t]; }
  double sigma(int s, int t) const { return sigma_[s][t]; }
  double path_betweenness(const std::vector<int>& seq) const;

 private:
  const Graph* g_;
  DistanceMode mode_;
  std::vector<std::vector<double>> d_;
  std::vector<std::vector<double>> sigma_;
};

double modularity(const Graph& g, const CommunityStructure& cs);

}  // namespace gtcent
