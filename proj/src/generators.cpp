#include "gtcent/generators.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "gtcent/random.hpp"

namespace gtcent {

Graph erdos_renyi(int n, double p, std::uint64_t seed, bool directed) {
  Rng rng(seed);
  Graph g(n, directed);
  for (int u = 0; u < n; ++u) {
    for (int v = directed ? 0 : u + 1; v < n; ++v) {
      if (u != v && uniform01(rng) < p) g.add_edge(u, v);
    }
  }
  return g;
}

Graph random_tree(int n, std::uint64_t seed) {
  Rng rng(seed);
  Graph g(n);
  for (int v = 1; v < n; ++v) g.add_edge(static_cast<int>(uniform_below(rng, v)), v);
  return g;
}

Graph random_connected(int n, double p, std::uint64_t seed) {
  Rng rng(seed);
  Graph g(n);
  for (int v = 1; v < n; ++v) g.add_edge(static_cast<int>(uniform_below(rng, v)), v);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (!g.has_edge(u, v) && uniform01(rng) < p) g.add_edge(u, v);
    }
  }
  return g;
}

Graph preferential_attachment(int n, int k, std::uint64_t seed) {
  if (k < 1 || n < k + 1) throw std::invalid_argument("preferential attachment needs n > k >= 1");
  Rng rng(seed);
  Graph g(n);
  // Each node appears once per incident edge end.
  std::vector<int> ends;
  for (int u = 0; u <= k; ++u) {
    for (int v = u + 1; v <= k; ++v) {
      g.add_edge(u, v);
      ends.push_back(u);
      ends.push_back(v);
    }
  }
  std::vector<int> picked;
  for (int v = k + 1; v < n; ++v) {
    picked.clear();
    while (static_cast<int>(picked.size()) < k) {
      const int u = ends[uniform_below(rng, ends.size())];
      if (std::find(picked.begin(), picked.end(), u) == picked.end()) picked.push_back(u);
    }
    for (int u : picked) {
      g.add_edge(u, v);
      ends.push_back(u);
      ends.push_back(v);
    }
  }
  return g;
}

Graph complete_graph(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u) for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph with_random_weights(const Graph& g, double lo, double hi, std::uint64_t seed, bool integral) {
  if (!(lo > 0 && hi >= lo)) throw std::invalid_argument("weights must be positive with lo <= hi");
  Rng rng(seed);
  Graph out(g.size(), g.directed());
  std::vector<std::string> labels;
  for (int v = 0; v < g.size(); ++v) labels.push_back(g.label(v));
  out.set_labels(labels);
  for (int u = 0; u < g.size(); ++u) {
    for (const Arc& a : g.out(u)) {
      if (!g.directed() && a.to < u) continue;
      double w;
      if (integral) {
        const auto span = static_cast<std::uint64_t>(std::floor(hi) - std::ceil(lo)) + 1;
        w = std::ceil(lo) + static_cast<double>(uniform_below(rng, span));
      } else {
        w = lo + (hi - lo) * uniform01(rng);
      }
      out.add_edge(u, a.to, w);
    }
  }
  out.set_weighted(true);
  return out;
}

}  // namespace gtcent
