#include "gtcent/subgraphs.hpp"

#include <stdexcept>

namespace gtcent {

std::vector<int> members_of(Mask m) {
  std::vector<int> out;
  out.reserve(popcount(m));
  while (m) {
    out.push_back(std::countr_zero(m));
    m &= m - 1;
  }
  return out;
}

Mask mask_from(const std::vector<int>& nodes) {
  Mask m = 0;
  for (int v : nodes) m |= bit(v);
  return m;
}

std::vector<Mask> adjacency_masks(const Graph& g) {
  if (g.size() > 64) throw SizeLimitError("bitmask routines support at most 64 nodes");
  std::vector<Mask> adj(g.size(), 0);
  for (int v = 0; v < g.size(); ++v) {
    for (const Arc& a : g.out(v)) {
      adj[v] |= bit(a.to);
      adj[a.to] |= bit(v);  // connectivity ignores direction
    }
  }
  return adj;
}

bool is_connected(const std::vector<Mask>& adj, Mask c) {
  if (!c) return false;
  Mask seen = c & (~c + 1);
  Mask frontier = seen;
  while (frontier) {
    int v = std::countr_zero(frontier);
    frontier &= frontier - 1;
    Mask fresh = adj[v] & c & ~seen;
    seen |= fresh;
    frontier |= fresh;
  }
  return seen == c;
}

bool is_connected(const Graph& g, const std::vector<int>& nodes) {
  return is_connected(adjacency_masks(g), mask_from(nodes));
}

Mask articulation_points(const std::vector<Mask>& adj, Mask c) {
  if (!is_connected(adj, c)) throw std::invalid_argument("articulation points of a disconnected set");
  if (popcount(c) <= 2) return 0;
  // Iterative Hopcroft-Tarjan over the induced subgraph.
  int disc[64], low[64], parent[64];
  Mask pending[64];
  for (int i = 0; i < 64; ++i) disc[i] = -1;
  int root = std::countr_zero(c);
  int timer = 0, root_children = 0;
  Mask cut = 0;
  int stack[64], top = 0;
  disc[root] = low[root] = timer++;
  parent[root] = -1;
  pending[root] = adj[root] & c;
  stack[top++] = root;
  while (top) {
    int v = stack[top - 1];
    if (pending[v]) {
      int w = std::countr_zero(pending[v]);
      pending[v] &= pending[v] - 1;
      if (disc[w] < 0) {
        disc[w] = low[w] = timer++;
        parent[w] = v;
        pending[w] = adj[w] & c;
        stack[top++] = w;
        if (v == root) ++root_children;
      } else if (w != parent[v]) {
        low[v] = std::min(low[v], disc[w]);
      }
    } else {
      --top;
      int p = parent[v];
      if (p >= 0) {
        low[p] = std::min(low[p], low[v]);
        if (p != root && low[v] >= disc[p]) cut |= bit(p);
      }
    }
  }
  if (root_children > 1) cut |= bit(root);
  return cut;
}

std::vector<int> articulation_points(const Graph& g, const std::vector<int>& nodes) {
  return members_of(articulation_points(adjacency_masks(g), mask_from(nodes)));
}

namespace {

struct CsgEnumerator {
  const std::vector<Mask>& adj;
  const std::function<void(Mask)>& visit;
  std::uint64_t count = 0;

  Mask neighbours(Mask s) const {
    Mask out = 0;
    for (Mask m = s; m; m &= m - 1) out |= adj[std::countr_zero(m)];
    return out & ~s;
  }

  void emit(Mask s) {
    ++count;
    visit(s);
  }

  void expand(Mask s, Mask excluded) {
    const Mask nb = neighbours(s) & ~excluded;
    if (!nb) return;
    // Non-empty subsets of nb, enumerated as submasks.
    for (Mask sub = nb; sub; sub = (sub - 1) & nb) emit(s | sub);
    for (Mask sub = nb; sub; sub = (sub - 1) & nb) expand(s | sub, excluded | nb);
  }
};

}  // namespace

std::uint64_t connected_induced_subgraphs(const Graph& g, const std::function<void(Mask)>& visit) {
  auto adj = adjacency_masks(g);
  CsgEnumerator e{adj, visit};
  for (int i = g.size() - 1; i >= 0; --i) {
    // Nodes with smaller index are reserved for later roots.
    const Mask excluded = (bit(i) << 1) - 1;
    e.emit(bit(i));
    e.expand(bit(i), excluded);
  }
  return e.count;
}

}  // namespace gtcent
