#include "gtcent/betweenness.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "gtcent/paths.hpp"

namespace gtcent {

namespace {

CentralityResult named(const char* measure, std::vector<double> scores) {
  CentralityResult r;
  r.measure = measure;
  r.scores = std::move(scores);
  return r;
}

// Undirected totals count each pair from both ends, so the per-source term is
// doubled and everything halved at the end.
void finish(const Graph& g, std::vector<double>& c) {
  if (g.directed()) return;
  for (double& x : c) x /= 2;
}

double source_factor(const Graph& g) { return g.directed() ? 1.0 : 2.0; }

}  // namespace

SizeDistribution SizeDistribution::uniform(int n) {
  return {std::vector<double>(n, 1.0 / n)};
}

void SizeDistribution::validate(int n) const {
  if (static_cast<int>(pd.size()) != n) throw std::invalid_argument("size distribution needs one entry per size 1..n");
  double total = 0;
  for (double p : pd) {
    if (!(p >= 0) || !std::isfinite(p)) throw std::invalid_argument("size distribution entries must be non-negative");
    total += p;
  }
  if (std::fabs(total - 1) > 1e-9) throw std::invalid_argument("size distribution must sum to 1");
}

CentralityResult pbc(const Graph& g, const PairWeighting& w) {
  const int n = g.size();
  std::vector<double> c(n, 0.0), delta(n);
  const double gf = source_factor(g);
  for (int s = 0; s < n; ++s) {
    auto r = sssp(g, s, DistanceMode::unweighted);
    for (int v : r.order) delta[v] = 0;
    for (auto it = r.order.rbegin(); it != r.order.rend(); ++it) {
      const int x = *it;
      const double fx = w.f(static_cast<int>(r.dist[x]));
      for (int p : r.preds[x]) delta[p] += r.sigma[p] / r.sigma[x] * (fx + delta[x]);
      if (x == s) continue;
      const double gx = w.g(static_cast<int>(r.dist[x]));
      c[x] += delta[x] + gf * gx;
      // Directed pairs are visited once, so the source takes its endpoint share here.
      if (g.directed()) c[s] += gx;
    }
  }
  finish(g, c);
  return named("pbc", std::move(c));
}

CentralityResult svb(const Graph& g) {
  PairWeighting w{[](int d) { return 1.0 / d; }, [](int d) { return (2.0 - d) / (2.0 * d); }};
  auto r = pbc(g, w);
  r.measure = "svb";
  return r;
}

PairWeighting semivalue_weighting(int n, int k) {
  if (n < 2) return {[](int) { return 0.0; }, [](int) { return 0.0; }};
  // C(n-d, k-1) / C(n-1, k-1) as a running product of fractions.
  auto f = [n, k](int d) {
    if (n - d < k - 1) return 0.0;
    double r = 1;
    for (int j = 0; j < k - 1; ++j) r *= static_cast<double>(n - d - j) / (n - 1 - j);
    return r;
  };
  const double shift = static_cast<double>(k - n) / (n - 1);
  return {f, [f, shift](int d) { return f(d) + shift; }};
}

CentralityResult semivalue_betweenness_by_k(const Graph& g, const SizeDistribution& pd, DistanceMode mode) {
  const int n = g.size();
  pd.validate(n);
  std::vector<double> c(n, 0.0);
  for (int k = 1; k <= n; ++k) {
    if (pd.pd[k - 1] == 0) continue;
    auto w = semivalue_weighting(n, k);
    auto part = mode == DistanceMode::unweighted ? pbc(g, w) : wpbc(g, w);
    for (int v = 0; v < n; ++v) c[v] += pd.pd[k - 1] * part.scores[v];
  }
  return named(mode == DistanceMode::unweighted ? "semivalue-betweenness" : "wsb", std::move(c));
}

CentralityResult wpbc(const Graph& g, const PairWeighting& w) {
  const int n = g.size();
  std::vector<double> c(n, 0.0);
  const double gf = source_factor(g);
  // x[v][i]: for a geodesic prefix of i nodes ending at v, the weighted sum over
  // all ways to extend it to a later target t, each scaled by 1/sigma_st.
  std::vector<std::vector<double>> x(n, std::vector<double>(n + 2, 0.0));
  std::vector<double> fv(n + 2, 0.0);
  for (int i = 2; i <= n; ++i) fv[i] = w.f(i);
  for (int s = 0; s < n; ++s) {
    auto r = sssp(g, s, DistanceMode::weighted);
    auto t = path_count_polynomials(g, r);
    for (int v : r.order) std::fill(x[v].begin(), x[v].end(), 0.0);
    for (auto it = r.order.rbegin(); it != r.order.rend(); ++it) {
      const int v = *it;
      for (int p : r.preds[v]) {
        for (int i = 1; i < n; ++i) x[p][i] += fv[i + 1] / r.sigma[v] + x[v][i + 1];
      }
      if (v == s) continue;
      double dep = 0, term = 0;
      for (int i = 1; i <= n; ++i) {
        if (t[v][i] == 0) continue;
        dep += t[v][i] * x[v][i];
        term += t[v][i] * w.g(i);
      }
      c[v] += dep + gf * term / r.sigma[v];
      if (g.directed()) c[s] += term / r.sigma[v];
    }
  }
  finish(g, c);
  return named("wpbc", std::move(c));
}

CentralityResult wsvb(const Graph& g) {
  PairWeighting w{[](int i) { return 1.0 / i; }, [](int i) { return (2.0 - i) / (2.0 * i); }};
  auto r = wpbc(g, w);
  r.measure = "wsvb";
  return r;
}

BetweennessProfile::BetweennessProfile(const Graph& g, DistanceMode mode) : directed_(g.directed()) {
  const int n = g.size();
  through_.assign(n, std::vector<double>(n + 1, 0.0));
  endpoint_.assign(n, std::vector<double>(n + 1, 0.0));
  std::vector<int> longest(n);
  std::vector<std::vector<double>> t(n), y(n);
  for (int s = 0; s < n; ++s) {
    auto r = sssp(g, s, mode);
    // Longest geodesic (in nodes) from s; bounds every polynomial below.
    int top = 1;
    for (int v : r.order) {
      longest[v] = 1;
      for (int p : r.preds[v]) longest[v] = std::max(longest[v], longest[p] + 1);
      top = std::max(top, longest[v]);
    }
    max_size_ = std::max(max_size_, top);
    for (int v : r.order) {
      t[v].assign(top + 1, 0.0);
      y[v].assign(top + 1, 0.0);
    }
    t[s][1] = 1;
    for (int v : r.order) {
      for (int p : r.preds[v]) {
        for (int i = 1; i < top; ++i) t[v][i + 1] += t[p][i];
      }
    }
    // y[v][j]: geodesic continuations past v adding j nodes, each weighted by 1/sigma_st.
    for (auto it = r.order.rbegin(); it != r.order.rend(); ++it) {
      const int v = *it;
      for (int p : r.preds[v]) {
        y[p][1] += 1.0 / r.sigma[v];
        for (int j = 1; j < top; ++j) y[p][j + 1] += y[v][j];
      }
      if (v == s) continue;
      for (int i = 1; i <= top; ++i) {
        if (t[v][i] == 0) continue;
        endpoint_[v][i] += t[v][i] / r.sigma[v];
        if (directed_) endpoint_[s][i] += t[v][i] / r.sigma[v];
        for (int j = 1; i + j <= top; ++j) through_[v][i + j] += t[v][i] * y[v][j];
      }
    }
  }
  for (auto& row : through_) row.resize(max_size_ + 1);
  for (auto& row : endpoint_) row.resize(max_size_ + 1);
}

std::vector<double> BetweennessProfile::apply(const PairWeighting& w) const {
  std::vector<double> f(max_size_ + 1, 0.0), gt(max_size_ + 1, 0.0);
  const double gf = directed_ ? 1.0 : 2.0;
  for (int i = 2; i <= max_size_; ++i) {
    f[i] = w.f(i);
    gt[i] = gf * w.g(i);
  }
  std::vector<double> c(through_.size(), 0.0);
  for (std::size_t v = 0; v < c.size(); ++v) {
    for (int i = 2; i <= max_size_; ++i) c[v] += through_[v][i] * f[i] + endpoint_[v][i] * gt[i];
    if (!directed_) c[v] /= 2;
  }
  return c;
}

namespace {

std::vector<double> profile_semivalue(const Graph& g, const SizeDistribution& pd, DistanceMode mode) {
  const int n = g.size();
  pd.validate(n);
  BetweennessProfile profile(g, mode);
  std::vector<double> c(n, 0.0);
  for (int k = 1; k <= n; ++k) {
    if (pd.pd[k - 1] == 0) continue;
    auto part = profile.apply(semivalue_weighting(n, k));
    for (int v = 0; v < n; ++v) c[v] += pd.pd[k - 1] * part[v];
  }
  return c;
}

}  // namespace

CentralityResult semivalue_betweenness(const Graph& g, const SizeDistribution& pd) {
  return named("semivalue-betweenness", profile_semivalue(g, pd, DistanceMode::unweighted));
}

CentralityResult wsb(const Graph& g, const SizeDistribution& pd) {
  return named("wsb", profile_semivalue(g, pd, DistanceMode::weighted));
}

CoalitionGame group_betweenness_game(const Graph& g, DistanceMode mode) {
  if (g.size() > 64) throw SizeLimitError("coalition games support at most 64 players");
  return {g.size(), [&g, mode](Mask c) { return c == 0 ? 0.0 : group_betweenness(g, members_of(c), mode); }};
}

}  // namespace gtcent
