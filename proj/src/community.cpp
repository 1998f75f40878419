#include "gtcent/community.hpp"

#include <cmath>
#include <stdexcept>

namespace gtcent {

namespace {

// C(top - q, k) / C(top, k): chance that k draws out of top items miss q given ones.
double miss_ratio(int top, int q, int k) {
  if (top - q < k) return 0.0;
  double r = 1;
  for (int i = 0; i < k; ++i) r *= static_cast<double>(top - q - i) / (top - i);
  return r;
}

double binomial(int n, int k) {
  double r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::vector<double> uniform(int size) { return std::vector<double>(size, 1.0 / size); }

std::vector<double> halves(int size) {
  std::vector<double> b(size);
  const double scale = std::ldexp(1.0, -(size - 1));
  for (int k = 0; k < size; ++k) b[k] = binomial(size - 1, k) * scale;
  return b;
}

std::vector<double> node_values(const Graph& g, std::vector<double> f) {
  if (f.empty()) {
    f.resize(g.size());
    for (int v = 0; v < g.size(); ++v) f[v] = g.node_weight(v);
  }
  if (static_cast<int>(f.size()) != g.size()) throw std::invalid_argument("one node weight per node expected");
  return f;
}

void check_partition(const Graph& g, const CommunityStructure& cs) {
  if (cs.node_count() != g.size()) throw std::invalid_argument("community structure does not cover the graph");
  if (g.directed()) throw std::invalid_argument("weighted degree games need an undirected graph");
}

// Per node: distinct neighbouring communities other than its own.
std::vector<int> adjacent_communities(const Graph& g, const CommunityStructure& cs) {
  std::vector<int> out(g.size(), 0), seen(cs.count(), -1);
  for (int u = 0; u < g.size(); ++u) {
    seen[cs.community_of(u)] = u;
    for (const Arc& a : g.out(u)) {
      const int c = cs.community_of(a.to);
      if (seen[c] != u) {
        seen[c] = u;
        ++out[u];
      }
    }
  }
  return out;
}

int neighbours_in(const Graph& g, const CommunityStructure& cs, int u, int community) {
  int count = 0;
  for (const Arc& a : g.out(u)) count += cs.community_of(a.to) == community;
  return count;
}

}  // namespace

WeightPreset parse_weight_preset(const std::string& name) {
  if (name == "owen") return WeightPreset::owen;
  if (name == "owen_banzhaf" || name == "owen-banzhaf") return WeightPreset::owen_banzhaf;
  if (name == "sym_banzhaf" || name == "sym-banzhaf") return WeightPreset::sym_banzhaf;
  if (name == "p_binomial" || name == "p-binomial") return WeightPreset::p_binomial;
  throw std::invalid_argument("unknown weight preset: " + name);
}

CoalitionalWeights preset_weights(WeightPreset preset, const CommunityStructure& cs, double p) {
  const int m = cs.count();
  CoalitionalWeights w;
  switch (preset) {
    case WeightPreset::owen:
      w.beta = uniform(m);
      break;
    case WeightPreset::owen_banzhaf:
    case WeightPreset::sym_banzhaf:
      w.beta = halves(m);
      break;
    case WeightPreset::p_binomial:
      if (!(p >= 0 && p <= 1)) throw std::invalid_argument("p must lie in [0, 1]");
      // Probability of k other communities when each joins independently with chance p.
      w.beta.resize(m);
      for (int k = 0; k < m; ++k) {
        w.beta[k] = binomial(m - 1, k) * std::pow(p, k) * std::pow(1 - p, m - 1 - k);
      }
      break;
  }
  for (int j = 0; j < m; ++j) {
    const int size = static_cast<int>(cs.members(j).size());
    w.alpha.push_back(preset == WeightPreset::owen_banzhaf ? halves(size) : uniform(size));
  }
  return w;
}

double nu_weighted_degree(const Graph& g, const std::vector<double>& f, const std::vector<int>& coalition) {
  std::vector<char> state(g.size(), 0);  // 1 member, 2 counted neighbour
  for (int v : coalition) state[v] = 1;
  double total = 0;
  for (int v : coalition) {
    for (const Arc& a : g.out(v)) {
      if (state[a.to] == 0) {
        state[a.to] = 2;
        total += f.empty() ? g.node_weight(a.to) : f[a.to];
      }
    }
  }
  return total;
}

CoalitionGame weighted_degree_game(const Graph& g, std::vector<double> f) {
  if (g.size() > 64) throw SizeLimitError("coalition games support at most 64 players");
  f = node_values(g, std::move(f));
  return {g.size(), [&g, f](Mask c) { return nu_weighted_degree(g, f, members_of(c)); }};
}

// v's marginal contribution gains f(u) for every neighbour u outside the coalition with
// no neighbour inside it, and loses f(v) when v already had a neighbour inside it. Each
// event is the coalition missing a fixed set of communities and a fixed set of v's
// community mates, so its probability factors into two hypergeometric ratios.
CentralityResult coalitional_semivalue_degree(const Graph& g, const CommunityStructure& cs,
                                              const CoalitionalWeights& w, std::vector<double> f) {
  check_partition(g, cs);
  w.validate(cs);
  f = node_values(g, std::move(f));
  const int m = cs.count();

  std::vector<double> miss_communities(m + 1, 0.0);
  for (int q = 0; q <= m; ++q) {
    for (int k = 0; k < m; ++k) miss_communities[q] += w.beta[k] * miss_ratio(m - 1, q, k);
  }
  std::vector<std::vector<double>> miss_members(m);
  for (int j = 0; j < m; ++j) {
    const int size = static_cast<int>(cs.members(j).size());
    miss_members[j].assign(size + 1, 0.0);
    for (int a = 0; a <= size; ++a) {
      for (int l = 0; l < size; ++l) miss_members[j][a] += w.alpha[j][l] * miss_ratio(size - 1, a, l);
    }
  }

  const auto deg_cs = adjacent_communities(g, cs);
  std::vector<int> deg_own(g.size());
  for (int v = 0; v < g.size(); ++v) deg_own[v] = neighbours_in(g, cs, v, cs.community_of(v));

  std::vector<double> phi(g.size(), 0.0);
  for (int v = 0; v < g.size(); ++v) {
    const int j = cs.community_of(v);
    const auto& mm = miss_members[j];
    double value = 0;
    for (const Arc& a : g.out(v)) {
      const int u = a.to;
      if (cs.community_of(u) == j) {
        value += f[u] * miss_communities[deg_cs[u]] * mm[deg_own[u]];
      } else {
        value += f[u] * miss_communities[deg_cs[u]] * mm[neighbours_in(g, cs, u, j) - 1];
      }
    }
    value -= f[v] * (1.0 - miss_communities[deg_cs[v]] * mm[deg_own[v]]);
    phi[v] = value;
  }
  CentralityResult r;
  r.measure = "coalitional-semivalue-degree";
  r.scores = std::move(phi);
  return r;
}

CentralityResult owen_degree(const Graph& g, const CommunityStructure& cs, std::vector<double> f) {
  check_partition(g, cs);
  f = node_values(g, std::move(f));
  const auto deg_cs = adjacent_communities(g, cs);
  std::vector<int> deg_own(g.size());
  for (int v = 0; v < g.size(); ++v) deg_own[v] = neighbours_in(g, cs, v, cs.community_of(v));

  std::vector<double> phi(g.size(), 0.0);
  for (int v = 0; v < g.size(); ++v) {
    const int j = cs.community_of(v);
    double value = 0;
    for (const Arc& a : g.out(v)) {
      const int u = a.to;
      const double outer = 1.0 + deg_cs[u];
      if (cs.community_of(u) == j) {
        value += f[u] / (outer * (1.0 + deg_own[u]));
      } else {
        value += f[u] / (outer * neighbours_in(g, cs, u, j));
      }
    }
    value -= f[v] * (1.0 - 1.0 / ((1.0 + deg_cs[v]) * (1.0 + deg_own[v])));
    phi[v] = value;
  }
  CentralityResult r;
  r.measure = "owen-degree";
  r.scores = std::move(phi);
  return r;
}

}  // namespace gtcent
