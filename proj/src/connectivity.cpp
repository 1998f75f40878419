#include "gtcent/connectivity.hpp"

#include <bit>
#include <stdexcept>

#include "gtcent/random.hpp"

namespace gtcent {

namespace {

const Graph& graph_of(const ConnectivityGame& game) {
  if (!game.graph) throw std::invalid_argument("connectivity game without a graph");
  const Graph& g = *game.graph;
  if (g.directed()) throw std::invalid_argument("connectivity games need an undirected graph");
  if (g.size() > 64) throw SizeLimitError("connectivity games support at most 64 nodes");
  return g;
}

// shapley_weight[s] = s!(n-s-1)!/n!, the weight of joining a coalition of s others.
std::vector<double> shapley_weights(int n) {
  std::vector<double> w(n, 0.0);
  if (n == 0) return w;
  w[0] = 1.0 / n;
  for (int s = 1; s < n; ++s) w[s] = w[s - 1] * s / (n - s);
  return w;
}

CentralityResult named(const char* measure, std::vector<double> scores) {
  CentralityResult r;
  r.measure = measure;
  r.scores = std::move(scores);
  return r;
}

Mask neighbourhood(const std::vector<Mask>& adj, Mask s) {
  Mask out = 0;
  for (Mask m = s; m; m &= m - 1) out |= adj[std::countr_zero(m)];
  return out & ~s;
}

}  // namespace

ConnectivityGame ConnectivityGame::make(const Graph& g, ConnectivityPreset preset, ConnectedValue custom) {
  if (preset == ConnectivityPreset::custom && !custom) throw std::invalid_argument("custom preset needs a value function");
  return {&g, preset, std::move(custom)};
}

ConnectivityPreset parse_connectivity_preset(const std::string& name) {
  if (name == "unit") return ConnectivityPreset::unit;
  if (name == "edges_over_weight" || name == "edges-over-weight") return ConnectivityPreset::edges_over_weight;
  throw std::invalid_argument("unknown connectivity preset: " + name);
}

double connected_value(const ConnectivityGame& game, Mask c) {
  switch (game.preset) {
    case ConnectivityPreset::unit:
      return 1.0;
    case ConnectivityPreset::edges_over_weight: {
      const Graph& g = *game.graph;
      double edges = 0, weight = 0;
      for (int v : members_of(c)) {
        for (const Arc& a : g.out(v)) {
          if (a.to > v && (c & bit(a.to))) {
            edges += 1;
            weight += a.weight;
          }
        }
      }
      return edges == 0 ? 0.0 : edges / weight;
    }
    case ConnectivityPreset::custom:
      return game.custom(*game.graph, c);
  }
  return 0;
}

double nu_connectivity(const ConnectivityGame& game, Mask c) {
  if (c == 0) return 0;
  const Graph& g = graph_of(game);
  return is_connected(adjacency_masks(g), c) ? connected_value(game, c) : 0.0;
}

CentralityResult general_sv_connectivity(const ConnectivityGame& game, int limit) {
  const Graph& g = graph_of(game);
  const int n = g.size();
  if (n > limit) throw SizeLimitError("GeneralSV is limited to " + std::to_string(limit) + " nodes");
  const auto adj = adjacency_masks(g);
  const auto w = shapley_weights(n);
  const Mask full = n == 64 ? ~Mask{0} : (Mask{1} << n) - 1;
  std::vector<double> nu(std::size_t{1} << n, 0.0);
  for (Mask c = 1; c <= full; ++c) {
    if (is_connected(adj, c)) nu[c] = connected_value(game, c);
  }
  std::vector<double> phi(n, 0.0);
  for (Mask c = 1; c <= full; ++c) {
    const int size = popcount(c);
    for (Mask m = c; m; m &= m - 1) {
      const int i = std::countr_zero(m);
      const double mc = nu[c] - nu[c & ~bit(i)];
      if (mc != 0) phi[i] += w[size - 1] * mc;
    }
  }
  return named("general-sv", std::move(phi));
}

namespace {

struct FasterSvcg {
  const ConnectivityGame& game;
  const std::vector<Mask>& adj;
  int n;
  std::vector<double> w;
  std::vector<double> phi;
  std::uint64_t count = 0;

  void visit(Mask c, Mask pivots) {
    ++count;
    const double value = connected_value(game, c);
    const int size = popcount(c);
    for (Mask m = c; m; m &= m - 1) {
      const int i = std::countr_zero(m);
      if (pivots & bit(i)) {
        phi[i] += w[size - 1] * value;
      } else {
        const Mask rest = c & ~bit(i);
        const double without = rest ? connected_value(game, rest) : 0.0;
        phi[i] += w[size - 1] * (value - without);
      }
    }
    if (size < n) {
      const Mask all = n == 64 ? ~Mask{0} : (Mask{1} << n) - 1;
      const Mask far = all & ~c & ~neighbourhood(adj, c);
      for (Mask m = far; m; m &= m - 1) phi[std::countr_zero(m)] -= w[size] * value;
    }
  }

  // Cut vertices of c | added, given those of c.
  Mask update_pivots(Mask c, Mask pivots, Mask added) const {
    const Mask grown = c | added;
    if (popcount(grown) <= 2) return 0;
    Mask attach = 0;
    for (Mask m = added; m; m &= m - 1) {
      const Mask touching = adj[std::countr_zero(m)] & grown;
      // A new node with two neighbours inside closes a cycle.
      if (popcount(touching) != 1) return articulation_points(adj, grown);
      if (touching & added) return articulation_points(adj, grown);
      attach |= touching;
    }
    return pivots | attach;
  }

  void expand(Mask c, Mask pivots, Mask excluded) {
    const Mask nb = neighbourhood(adj, c) & ~excluded;
    if (!nb) return;
    for (Mask sub = nb; sub; sub = (sub - 1) & nb) visit(c | sub, update_pivots(c, pivots, sub));
    for (Mask sub = nb; sub; sub = (sub - 1) & nb) {
      expand(c | sub, update_pivots(c, pivots, sub), excluded | nb);
    }
  }
};

}  // namespace

CentralityResult faster_svcg(const ConnectivityGame& game, std::uint64_t* coalitions) {
  const Graph& g = graph_of(game);
  const int n = g.size();
  const auto adj = adjacency_masks(g);
  FasterSvcg e{game, adj, n, shapley_weights(n), std::vector<double>(n, 0.0)};
  for (int i = n - 1; i >= 0; --i) {
    const Mask excluded = (bit(i) << 1) - 1;
    e.visit(bit(i), 0);
    e.expand(bit(i), 0, excluded);
  }
  if (coalitions) *coalitions = e.count;
  auto r = named("faster-svcg", std::move(e.phi));
  r.params.emplace_back("coalitions", std::to_string(e.count));
  return r;
}

CentralityResult approximate_svcg(const ConnectivityGame& game, std::uint64_t max_iter, std::uint64_t seed) {
  if (max_iter == 0) throw std::invalid_argument("max_iter must be at least 1");
  const Graph& g = graph_of(game);
  const int n = g.size();
  const auto adj = adjacency_masks(g);
  std::vector<double> phi(n, 0.0);
  std::vector<int> nodes(n);
  Rng rng(seed);
  for (std::uint64_t it = 0; it < max_iter; ++it) {
    const int k = static_cast<int>(uniform_below(rng, n + 1));
    if (k == 0) continue;
    // Partial Fisher-Yates: the first k entries form a uniform k-subset.
    for (int v = 0; v < n; ++v) nodes[v] = v;
    Mask c = 0;
    for (int j = 0; j < k; ++j) {
      const int pick = j + static_cast<int>(uniform_below(rng, n - j));
      std::swap(nodes[j], nodes[pick]);
      c |= bit(nodes[j]);
    }
    if (!is_connected(adj, c)) continue;
    const double value = connected_value(game, c);
    const Mask pivots = articulation_points(adj, c);
    const double in_weight = (n + 1.0) / k;
    for (Mask m = c; m; m &= m - 1) {
      const int i = std::countr_zero(m);
      if (pivots & bit(i)) {
        phi[i] += in_weight * value;
      } else {
        const Mask rest = c & ~bit(i);
        phi[i] += in_weight * (value - (rest ? connected_value(game, rest) : 0.0));
      }
    }
    if (k < n) {
      const double out_weight = (n + 1.0) / (n - k);
      const Mask all = n == 64 ? ~Mask{0} : (Mask{1} << n) - 1;
      for (Mask m = all & ~c & ~neighbourhood(adj, c); m; m &= m - 1) {
        phi[std::countr_zero(m)] -= out_weight * value;
      }
    }
  }
  for (double& x : phi) x /= static_cast<double>(max_iter);
  auto r = named("approximate-svcg", std::move(phi));
  r.seed = seed;
  r.params.emplace_back("iterations", std::to_string(max_iter));
  return r;
}

}  // namespace gtcent
