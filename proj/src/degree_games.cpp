#include "gtcent/degree_games.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <functional>
#include <numeric>
#include <queue>
#include <stdexcept>

#include <boost/math/distributions/normal.hpp>

#include "gtcent/paths.hpp"

namespace gtcent {

namespace {

// Weighted distance from every node to target, following arcs forwards.
std::vector<double> distances_to(const Graph& g, int target) {
  std::vector<double> d(g.size(), kInf);
  using Item = std::pair<double, int>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
  d[target] = 0;
  pq.push({0.0, target});
  while (!pq.empty()) {
    auto [dv, v] = pq.top();
    pq.pop();
    if (dv > d[v]) continue;
    for (const Arc& a : g.in(v)) {
      double nd = dv + a.weight;
      if (nd < d[a.to]) {
        d[a.to] = nd;
        pq.push({nd, a.to});
      }
    }
  }
  return d;
}

double f_at(const std::function<double(double)>& f, double d) { return d == kInf ? 0.0 : f(d); }

CentralityResult named(const char* measure, std::vector<double> scores) {
  CentralityResult r;
  r.measure = measure;
  r.scores = std::move(scores);
  return r;
}

}  // namespace

void DegreeGameSpec::validate(const Graph& g) const {
  const auto n = static_cast<std::size_t>(g.size());
  switch (game) {
    case DegreeGame::g1:
      break;
    case DegreeGame::g2:
      if (k.size() != n) throw std::invalid_argument("g2 needs one threshold per node");
      for (int v = 0; v < g.size(); ++v) {
        if (k[v] < 1 || k[v] > 1 + g.in_degree(v)) {
          throw std::invalid_argument("g2 threshold out of range at node " + g.label(v));
        }
      }
      break;
    case DegreeGame::g3:
      if (d_cutoff.size() != n) throw std::invalid_argument("g3 needs one cutoff per node");
      for (double c : d_cutoff) if (!(c > 0)) throw std::invalid_argument("g3 cutoffs must be positive");
      break;
    case DegreeGame::g4:
      if (!f) throw std::invalid_argument("g4 needs a distance function");
      break;
    case DegreeGame::g5:
      if (w_cutoff.size() != n) throw std::invalid_argument("g5 needs one cutoff per node");
      for (double c : w_cutoff) if (!(c > 0)) throw std::invalid_argument("g5 cutoffs must be positive");
      break;
  }
}

double nu_degree_game(const Graph& g, const DegreeGameSpec& spec, const std::vector<int>& coalition) {
  if (coalition.empty()) return 0;
  const int n = g.size();
  std::vector<char> in(n, 0);
  for (int v : coalition) in[v] = 1;
  double value = 0;
  switch (spec.game) {
    case DegreeGame::g1:
    case DegreeGame::g2: {
      std::vector<int> hits(n, 0);
      for (int v : coalition) for (const Arc& a : g.out(v)) ++hits[a.to];
      for (int u = 0; u < n; ++u) {
        const int need = spec.game == DegreeGame::g1 ? 1 : spec.k[u];
        if (in[u] || hits[u] >= need) ++value;
      }
      break;
    }
    case DegreeGame::g3:
    case DegreeGame::g4: {
      for (int u = 0; u < n; ++u) {
        auto d = distances_to(g, u);
        double best = kInf;
        for (int v : coalition) best = std::min(best, d[v]);
        if (spec.game == DegreeGame::g3) {
          if (best <= spec.d_cutoff[u]) ++value;
        } else {
          value += f_at(spec.f, best);
        }
      }
      break;
    }
    case DegreeGame::g5: {
      std::vector<double> w(n, 0.0);
      for (int v : coalition) for (const Arc& a : g.out(v)) w[a.to] += a.weight;
      for (int u = 0; u < n; ++u) if (in[u] || w[u] >= spec.w_cutoff[u]) ++value;
      break;
    }
  }
  return value;
}

CoalitionGame as_coalition_game(const Graph& g, const DegreeGameSpec& spec) {
  spec.validate(g);
  if (g.size() > 64) throw SizeLimitError("coalition games support at most 64 players");
  return {g.size(), [&g, spec](Mask c) { return nu_degree_game(g, spec, members_of(c)); }};
}

CentralityResult sv_g1(const Graph& g) {
  const int n = g.size();
  std::vector<double> phi(n, 0.0);
  for (int v = 0; v < n; ++v) {
    phi[v] += 1.0 / (1 + g.in_degree(v));
    for (const Arc& a : g.out(v)) phi[v] += 1.0 / (1 + g.in_degree(a.to));
  }
  return named("sv-g1", std::move(phi));
}

CentralityResult sv_g2(const Graph& g, const std::vector<int>& k) {
  DegreeGameSpec spec{DegreeGame::g2, k, {}, {}, {}};
  spec.validate(g);
  const int n = g.size();
  // Contribution a node makes to each of its out-neighbours.
  std::vector<double> through(n, 0.0);
  for (int u = 0; u < n; ++u) {
    const double d = g.in_degree(u);
    if (d > 0) through[u] = std::max(0.0, (d - k[u] + 1) / (d * (1 + d)));
  }
  std::vector<double> phi(n, 0.0);
  for (int v = 0; v < n; ++v) {
    phi[v] = std::min(1.0, k[v] / (1.0 + g.in_degree(v)));
    for (const Arc& a : g.out(v)) phi[v] += through[a.to];
  }
  auto r = named("sv-g2", std::move(phi));
  return r;
}

CentralityResult sv_g3(const Graph& g, const std::vector<double>& d_cutoff) {
  DegreeGameSpec spec{DegreeGame::g3, {}, d_cutoff, {}, {}};
  spec.validate(g);
  const int n = g.size();
  std::vector<double> phi(n, 0.0);
  std::vector<int> reach;
  for (int u = 0; u < n; ++u) {
    auto d = distances_to(g, u);
    reach.clear();
    for (int v = 0; v < n; ++v) if (v != u && d[v] <= d_cutoff[u]) reach.push_back(v);
    const double share = 1.0 / (1.0 + static_cast<double>(reach.size()));
    phi[u] += share;
    for (int v : reach) phi[v] += share;
  }
  return named("sv-g3", std::move(phi));
}

CentralityResult sv_g4(const Graph& g, const std::function<double(double)>& f) {
  if (!f) throw std::invalid_argument("g4 needs a distance function");
  const int n = g.size();
  std::vector<double> phi(n, 0.0);
  std::vector<int> w(n);
  for (int u = 0; u < n; ++u) {
    auto d = distances_to(g, u);
    // Sorted distances; u itself sits at index 0.
    std::iota(w.begin(), w.end(), 0);
    std::swap(w[0], w[u]);
    std::sort(w.begin() + 1, w.end(), [&](int a, int b) { return d[a] < d[b] || (d[a] == d[b] && a < b); });
    double sum = 0, prev_d = -1, prev_sv = 0;
    for (int idx = n - 1; idx >= 1; --idx) {
      const double dist = d[w[idx]];
      const double fd = f_at(f, dist);
      double cur;
      if (idx < n - 1 && (dist == prev_d || (dist != kInf && same_length(dist, prev_d)))) {
        cur = prev_sv;
      } else {
        cur = fd / (1.0 + idx) - sum;
      }
      phi[w[idx]] += cur;
      sum += fd / (static_cast<double>(idx) * (1.0 + idx));
      prev_d = dist;
      prev_sv = cur;
    }
    phi[u] += f(0.0) - sum;
  }
  return named("sv-g4", std::move(phi));
}

namespace {

// For each size m, the probability that a uniformly drawn m-subset of pop sums into [lo, hi).
class SubsetSumWindow {
 public:
  SubsetSumWindow(std::vector<double> pop, int exact_limit) : pop_(std::move(pop)) {
    const double n = static_cast<double>(pop_.size());
    exact_ = static_cast<int>(pop_.size()) <= exact_limit;
    if (exact_) {
      const std::size_t count = std::size_t{1} << pop_.size();
      sums_.resize(count);
      sums_[0] = 0;
      for (std::size_t m = 1; m < count; ++m) {
        sums_[m] = sums_[m & (m - 1)] + pop_[std::countr_zero(m)];
      }
    } else if (n > 0) {
      double s = 0, s2 = 0;
      for (double x : pop_) {
        s += x;
        s2 += x * x;
      }
      mean_ = s / n;
      var_ = std::max(0.0, s2 / n - mean_ * mean_);
    }
  }

  std::vector<double> by_size(double lo, double hi) const {
    const int n = static_cast<int>(pop_.size());
    std::vector<double> p(n + 1, 0.0);
    if (exact_) {
      std::vector<double> total(n + 1, 0.0);
      for (std::size_t mask = 0; mask < sums_.size(); ++mask) {
        const int m = std::popcount(mask);
        total[m] += 1;
        if (sums_[mask] >= lo && sums_[mask] < hi) p[m] += 1;
      }
      for (int m = 0; m <= n; ++m) p[m] /= total[m];
      return p;
    }
    for (int m = 0; m <= n; ++m) {
      // Sampling without replacement from a finite population.
      const double mu = m * mean_;
      const double var = n > 1 ? m * var_ * (n - m) / (n - 1.0) : 0.0;
      if (var <= 0) {
        p[m] = (mu >= lo && mu < hi) ? 1.0 : 0.0;
        continue;
      }
      boost::math::normal_distribution<double> normal(mu, std::sqrt(var));
      const double upper = hi == kInf ? 1.0 : boost::math::cdf(normal, hi);
      const double lower = lo == -kInf ? 0.0 : boost::math::cdf(normal, lo);
      p[m] = std::max(0.0, upper - lower);
    }
    return p;
  }

 private:
  std::vector<double> pop_;
  bool exact_ = false;
  std::vector<double> sums_;
  double mean_ = 0, var_ = 0;
};

}  // namespace

CentralityResult sv_g5_approx(const Graph& g, const std::vector<double>& w_cutoff, const G5Options& opts) {
  DegreeGameSpec spec{DegreeGame::g5, {}, {}, {}, w_cutoff};
  spec.validate(g);
  const int n = g.size();
  std::vector<double> phi(n, 0.0);
  std::vector<double> pop;
  for (int v = 0; v < n; ++v) {
    pop.clear();
    for (const Arc& a : g.in(v)) pop.push_back(a.weight);
    const int d = static_cast<int>(pop.size());
    auto p = SubsetSumWindow(pop, opts.exact_degree_limit).by_size(-kInf, w_cutoff[v]);
    for (int m = 0; m <= d; ++m) phi[v] += p[m] / (1.0 + d);
  }
  for (int u = 0; u < n; ++u) {
    const auto& in = g.in(u);
    const int d = static_cast<int>(in.size());
    for (int skip = 0; skip < d; ++skip) {
      pop.clear();
      for (int j = 0; j < d; ++j) if (j != skip) pop.push_back(in[j].weight);
      const double lambda = in[skip].weight;
      auto z = SubsetSumWindow(pop, opts.exact_degree_limit).by_size(w_cutoff[u] - lambda, w_cutoff[u]);
      double p = 0;
      for (int m = 0; m <= d - 1; ++m) p += z[m] * (d - m) / (static_cast<double>(d) * (d + 1.0));
      phi[in[skip].to] += p;
    }
  }
  auto r = named("sv-g5", std::move(phi));
  r.params.emplace_back("exact_degree_limit", std::to_string(opts.exact_degree_limit));
  return r;
}

CentralityResult shapley_degree_game(const Graph& g, const DegreeGameSpec& spec) {
  spec.validate(g);
  switch (spec.game) {
    case DegreeGame::g1:
      return sv_g1(g);
    case DegreeGame::g2:
      return sv_g2(g, spec.k);
    case DegreeGame::g3:
      return sv_g3(g, spec.d_cutoff);
    case DegreeGame::g4:
      return sv_g4(g, spec.f);
    case DegreeGame::g5:
      return sv_g5_approx(g, spec.w_cutoff);
  }
  return {};
}

}  // namespace gtcent
