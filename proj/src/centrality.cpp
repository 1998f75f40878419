#include "gtcent/centrality.hpp"

#include <deque>
#include <stdexcept>

namespace gtcent {

namespace {

// Brandes accumulation over ordered pairs.
std::vector<double> brandes(const Graph& g, DistanceMode mode) {
  const int n = g.size();
  std::vector<double> cb(n, 0.0), delta(n);
  for (int s = 0; s < n; ++s) {
    auto r = sssp(g, s, mode);
    std::fill(delta.begin(), delta.end(), 0.0);
    for (auto it = r.order.rbegin(); it != r.order.rend(); ++it) {
      int w = *it;
      for (int v : r.preds[w]) delta[v] += r.sigma[v] / r.sigma[w] * (1.0 + delta[w]);
      if (w != s) cb[w] += delta[w];
    }
  }
  if (!g.directed()) for (double& x : cb) x /= 2;
  return cb;
}

std::vector<char> mask_of(const Graph& g, const std::vector<int>& group) {
  if (group.empty()) throw std::invalid_argument("empty group");
  std::vector<char> in(g.size(), 0);
  for (int v : group) in[v] = 1;
  return in;
}

}  // namespace

CentralityResult classic_centrality(const Graph& g, ClassicKind kind, DistanceMode mode) {
  CentralityResult res;
  const int n = g.size();
  res.scores.assign(n, 0.0);
  switch (kind) {
    case ClassicKind::degree:
      res.measure = "degree";
      for (int v = 0; v < n; ++v) res.scores[v] = g.degree(v);
      break;
    case ClassicKind::closeness:
      res.measure = "closeness";
      for (int s = 0; s < n; ++s) {
        auto r = sssp(g, s, DistanceMode::unweighted);
        for (int v : r.order) res.scores[v] += r.dist[v] - 1;
      }
      break;
    case ClassicKind::betweenness:
      res.measure = "betweenness";
      res.scores = brandes(g, mode);
      break;
  }
  return res;
}

double group_degree(const Graph& g, const std::vector<int>& group) {
  auto in = mask_of(g, group);
  std::vector<char> hit(g.size(), 0);
  double count = 0;
  for (int v : group) {
    for (const Arc& a : g.out(v)) {
      if (!in[a.to] && !hit[a.to]) {
        hit[a.to] = 1;
        ++count;
      }
    }
  }
  return count;
}

double group_closeness(const Graph& g, const std::vector<int>& group) {
  auto in = mask_of(g, group);
  std::vector<double> d(g.size(), kInf);
  std::deque<int> q;
  for (int v = 0; v < g.size(); ++v) {
    if (in[v]) {
      d[v] = 0;
      q.push_back(v);
    }
  }
  double total = 0;
  while (!q.empty()) {
    int v = q.front();
    q.pop_front();
    total += d[v];
    for (const Arc& a : g.out(v)) {
      if (d[a.to] == kInf) {
        d[a.to] = d[v] + 1;
        q.push_back(a.to);
      }
    }
  }
  return total;
}

double group_betweenness(const Graph& g, const std::vector<int>& group, DistanceMode mode) {
  auto in = mask_of(g, group);
  const int n = g.size();
  double total = 0;
  for (int s = 0; s < n; ++s) {
    if (in[s]) continue;
    auto full = sssp(g, s, mode);
    auto cut = sssp(g, s, mode, &in);
    for (int t = 0; t < n; ++t) {
      if (t == s || in[t] || full.sigma[t] == 0) continue;
      if (!g.directed() && t < s) continue;
      double surviving = same_length(cut.dist[t], full.dist[t]) ? cut.sigma[t] : 0.0;
      total += (full.sigma[t] - surviving) / full.sigma[t];
    }
  }
  return total;
}

double group_centrality(const Graph& g, ClassicKind kind, const std::vector<int>& group) {
  switch (kind) {
    case ClassicKind::degree:
      return group_degree(g, group);
    case ClassicKind::closeness:
      return group_closeness(g, group);
    case ClassicKind::betweenness:
      return group_betweenness(g, group);
  }
  return 0;
}

GeodesicTable::GeodesicTable(const Graph& g, DistanceMode mode) : g_(&g), mode_(mode) {
  d_.resize(g.size());
  sigma_.resize(g.size());
  for (int s = 0; s < g.size(); ++s) {
    auto r = sssp(g, s, mode);
    d_[s] = std::move(r.dist);
    sigma_[s] = std::move(r.sigma);
  }
}

double GeodesicTable::path_betweenness(const std::vector<int>& seq) const {
  const Graph& g = *g_;
  const int n = g.size();
  if (seq.empty()) return 0;
  std::vector<char> in(n, 0);
  for (int v : seq) {
    if (in[v]) throw std::invalid_argument("repeated node in sequence");
    in[v] = 1;
  }
  // Geodesics through the sequence, in order, between consecutive members.
  auto chain = [&](const std::vector<int>& q, double& len) {
    double count = 1;
    len = 0;
    for (std::size_t i = 0; i + 1 < q.size(); ++i) {
      if (sigma_[q[i]][q[i + 1]] == 0) return 0.0;
      count *= sigma_[q[i]][q[i + 1]];
      len += d_[q[i]][q[i + 1]];
    }
    return count;
  };
  // Node-count distances share an endpoint when joined.
  const double join = mode_ == DistanceMode::unweighted ? 1.0 : 0.0;
  std::vector<int> rev(seq.rbegin(), seq.rend());
  double len_f = 0, len_r = 0;
  const double inner_f = chain(seq, len_f);
  const double inner_r = seq.size() > 1 ? chain(rev, len_r) : 0.0;
  len_f -= join * (static_cast<double>(seq.size()) - 2);
  len_r -= join * (static_cast<double>(seq.size()) - 2);

  auto through = [&](int s, int t, const std::vector<int>& q, double inner, double len) {
    if (inner == 0) return 0.0;
    int a = q.front(), b = q.back();
    if (sigma_[s][a] == 0 || sigma_[b][t] == 0) return 0.0;
    double total = d_[s][a] + len + d_[b][t] - 2 * join;
    if (!same_length(total, d_[s][t])) return 0.0;
    return sigma_[s][a] * inner * sigma_[b][t];
  };

  double result = 0;
  for (int s = 0; s < n; ++s) {
    if (in[s]) continue;
    for (int t = 0; t < n; ++t) {
      if (t == s || in[t] || sigma_[s][t] == 0) continue;
      if (!g.directed() && t < s) continue;
      double c = through(s, t, seq, inner_f, len_f);
      if (!g.directed()) c += through(s, t, rev, inner_r, len_r);
      result += c / sigma_[s][t];
    }
  }
  return result;
}

double path_betweenness(const Graph& g, const std::vector<int>& seq, DistanceMode mode) {
  return GeodesicTable(g, mode).path_betweenness(seq);
}

double modularity(const Graph& g, const CommunityStructure& cs) {
  const double m = static_cast<double>(g.edge_count());
  if (m == 0) throw std::invalid_argument("modularity of a graph without edges");
  std::vector<double> inner(cs.count(), 0.0), degsum(cs.count(), 0.0);
  for (int v = 0; v < g.size(); ++v) {
    int c = cs.community_of(v);
    degsum[c] += g.degree(v);
    for (const Arc& a : g.out(v)) {
      if (cs.community_of(a.to) == c && (g.directed() || a.to > v)) inner[c] += 1;
    }
  }
  double q = 0;
  for (int c = 0; c < cs.count(); ++c) {
    double share = degsum[c] / (2 * m);
    q += inner[c] / m - share * share;
  }
  return q;
}

}  // namespace gtcent
