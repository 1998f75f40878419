#include "gtcent/mcnets.hpp"

#include <algorithm>

#include "gtcent/paths.hpp"

namespace gtcent {

namespace {

// Every geodesic from r.source to t, walked backwards over the predecessor lists.
void geodesics_to(const SsspResult& r, int t, std::vector<int>& tail, std::vector<std::vector<int>>& out) {
  tail.push_back(t);
  if (t == r.source) {
    out.emplace_back(tail.rbegin(), tail.rend());
  } else {
    for (int p : r.preds[t]) geodesics_to(r, p, tail, out);
  }
  tail.pop_back();
}

}  // namespace

RuleSet betweenness_rules(const Graph& g) {
  const int n = g.size();
  const DistanceMode mode = g.weighted() ? DistanceMode::weighted : DistanceMode::unweighted;
  GeodesicTable table(g, mode);
  RuleSet rs;
  for (int v = 0; v < n; ++v) rs.players.push_back(g.label(v));
  std::vector<int> tail;
  std::vector<std::vector<int>> paths;
  for (int s = 0; s < n; ++s) {
    auto r = sssp(g, s, mode);
    paths.clear();
    for (int t : r.order) if (t != s) geodesics_to(r, t, tail, paths);
    for (auto& p : paths) {
      std::vector<char> on(n, 0);
      for (int v : p) on[v] = 1;
      std::vector<int> rest;
      for (int v = 0; v < n; ++v) if (!on[v]) rest.push_back(v);
      Formula::Ptr f = Formula::ordered(p);
      if (!rest.empty()) f = Formula::combine(Formula::Kind::conjunction, f, Formula::negate(Formula::basic(rest)));
      rs.rules.push_back({f, table.path_betweenness(p)});
    }
  }
  return rs;
}

CentralityResult generalized_betweenness(const Graph& g, OrderedValue value) {
  auto rs = betweenness_rules(g);
  CentralityResult r;
  r.measure = value == OrderedValue::nr ? "generalized-betweenness-nr" : "generalized-betweenness-sb";
  r.scores = value == OrderedValue::nr ? comp_nr(rs) : comp_sb(rs);
  return r;
}

}  // namespace gtcent
