#include "gtcent/monte_carlo.hpp"

#include <functional>
#include <numeric>
#include <queue>
#include <stdexcept>

#include "gtcent/paths.hpp"
#include "gtcent/random.hpp"

namespace gtcent {

namespace {

std::vector<int> identity(int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

double f_at(const std::function<double(double)>& f, double d) { return d == kInf ? 0.0 : f(d); }

}  // namespace

std::vector<double> monte_carlo_shapley(const CoalitionGame& game, std::uint64_t max_iter,
                                        std::uint64_t seed) {
  if (max_iter == 0) throw std::invalid_argument("max_iter must be positive");
  Rng rng(seed);
  auto perm = identity(game.n);
  std::vector<double> phi(game.n, 0.0);
  for (std::uint64_t it = 0; it < max_iter; ++it) {
    shuffle_in_place(perm, rng);
    Mask c = 0;
    double prev = 0;
    for (int p : perm) {
      c |= bit(p);
      const double cur = game.value(c);
      phi[p] += cur - prev;
      prev = cur;
    }
  }
  for (double& x : phi) x /= static_cast<double>(max_iter);
  return phi;
}

DegreeBlock::DegreeBlock(const Graph& g, DegreeGameSpec spec) : g_(g), spec_(std::move(spec)) {
  spec_.validate(g_);
  const int n = g_.size();
  if (spec_.game == DegreeGame::g3 || spec_.game == DegreeGame::g4) {
    dist_.resize(n);
    for (int v = 0; v < n; ++v) dist_[v] = sssp(g_, v, DistanceMode::weighted).dist;
    if (spec_.game == DegreeGame::g3) {
      reach_.resize(n);
      for (int v = 0; v < n; ++v) {
        for (int u = 0; u < n; ++u) {
          if (u != v && dist_[v][u] <= spec_.d_cutoff[u]) reach_[v].push_back(u);
        }
      }
      dist_.clear();
    }
  }
}

void DegreeBlock::contributions(const std::vector<int>& perm, std::vector<double>& out) {
  const int n = g_.size();
  out.assign(n, 0.0);
  switch (spec_.game) {
    case DegreeGame::g1:
    case DegreeGame::g2:
      counted_.assign(n, 0);
      edges_.assign(n, 0);
      for (int v : perm) {
        double mc = 0;
        if (!counted_[v]) {
          counted_[v] = 1;
          ++mc;
        }
        for (const Arc& a : g_.out(v)) {
          const int u = a.to;
          const int need = spec_.game == DegreeGame::g1 ? 1 : spec_.k[u];
          if (++edges_[u] >= need && !counted_[u]) {
            counted_[u] = 1;
            ++mc;
          }
        }
        out[v] = mc;
      }
      break;
    case DegreeGame::g3:
      counted_.assign(n, 0);
      for (int v : perm) {
        double mc = 0;
        if (!counted_[v]) {
          counted_[v] = 1;
          ++mc;
        }
        for (int u : reach_[v]) {
          if (!counted_[u]) {
            counted_[u] = 1;
            ++mc;
          }
        }
        out[v] = mc;
      }
      break;
    case DegreeGame::g4:
      best_.assign(n, kInf);
      for (int v : perm) {
        double mc = 0;
        for (int u = 0; u < n; ++u) {
          const double d = dist_[v][u];
          if (d < best_[u]) {
            mc += f_at(spec_.f, d) - f_at(spec_.f, best_[u]);
            best_[u] = d;
          }
        }
        out[v] = mc;
      }
      break;
    case DegreeGame::g5:
      counted_.assign(n, 0);
      weights_.assign(n, 0.0);
      for (int v : perm) {
        double mc = 0;
        if (!counted_[v]) {
          counted_[v] = 1;
          ++mc;
        }
        for (const Arc& a : g_.out(v)) {
          const int u = a.to;
          weights_[u] += a.weight;
          if (!counted_[u] && weights_[u] >= spec_.w_cutoff[u]) {
            counted_[u] = 1;
            ++mc;
          }
        }
        out[v] = mc;
      }
      break;
  }
}

std::vector<double> monte_carlo_degree_block(const Graph& g, const DegreeGameSpec& spec,
                                             const std::vector<int>& perm) {
  std::vector<double> out;
  DegreeBlock(g, spec).contributions(perm, out);
  return out;
}

std::vector<double> generic_degree_block(const Graph& g, const DegreeGameSpec& spec,
                                         const std::vector<int>& perm) {
  std::vector<double> out(g.size(), 0.0);
  std::vector<int> prefix;
  double prev = 0;
  for (int v : perm) {
    prefix.push_back(v);
    const double cur = nu_degree_game(g, spec, prefix);
    out[v] = cur - prev;
    prev = cur;
  }
  return out;
}

CentralityResult monte_carlo_degree(const Graph& g, const DegreeGameSpec& spec,
                                    std::uint64_t max_iter, std::uint64_t seed) {
  if (max_iter == 0) throw std::invalid_argument("max_iter must be positive");
  DegreeBlock block(g, spec);
  Rng rng(seed);
  auto perm = identity(g.size());
  std::vector<double> phi(g.size(), 0.0), mc;
  for (std::uint64_t it = 0; it < max_iter; ++it) {
    shuffle_in_place(perm, rng);
    block.contributions(perm, mc);
    for (int v = 0; v < g.size(); ++v) phi[v] += mc[v];
  }
  for (double& x : phi) x /= static_cast<double>(max_iter);
  CentralityResult r;
  r.measure = "monte-carlo";
  r.scores = std::move(phi);
  r.seed = seed;
  r.params.emplace_back("iterations", std::to_string(max_iter));
  return r;
}

}  // namespace gtcent
