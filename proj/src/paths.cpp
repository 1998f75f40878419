#include "gtcent/paths.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <functional>
#include <queue>

namespace gtcent {

bool same_length(double a, double b) {
  if (std::isinf(a) || std::isinf(b)) return a == b;
  return std::fabs(a - b) <= 1e-12 * std::max({1.0, std::fabs(a), std::fabs(b)});
}

SsspResult sssp(const Graph& g, int s, DistanceMode mode, const std::vector<char>* removed) {
  const int n = g.size();
  SsspResult r;
  r.source = s;
  r.mode = mode;
  r.dist.assign(n, kInf);
  r.sigma.assign(n, 0.0);
  r.preds.assign(n, {});
  r.order.reserve(n);
  auto blocked = [&](int v) { return removed && (*removed)[v]; };

  if (mode == DistanceMode::unweighted) {
    std::deque<int> q;
    r.dist[s] = 1;
    r.sigma[s] = 1;
    q.push_back(s);
    while (!q.empty()) {
      int v = q.front();
      q.pop_front();
      r.order.push_back(v);
      for (const Arc& a : g.out(v)) {
        int w = a.to;
        if (blocked(w)) continue;
        if (r.dist[w] == kInf) {
          r.dist[w] = r.dist[v] + 1;
          q.push_back(w);
        }
        if (r.dist[w] == r.dist[v] + 1) {
          r.sigma[w] += r.sigma[v];
          r.preds[w].push_back(v);
        }
      }
    }
    return r;
  }

  using Item = std::pair<double, int>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
  std::vector<char> done(n, 0);
  r.dist[s] = 0;
  r.sigma[s] = 1;
  pq.push({0.0, s});
  while (!pq.empty()) {
    auto [d, v] = pq.top();
    pq.pop();
    if (done[v]) continue;
    done[v] = 1;
    r.order.push_back(v);
    for (const Arc& a : g.out(v)) {
      int w = a.to;
      if (blocked(w) || done[w]) continue;
      double nd = d + a.weight;
      if (r.dist[w] == kInf || (nd < r.dist[w] && !same_length(nd, r.dist[w]))) {
        r.dist[w] = nd;
        r.sigma[w] = r.sigma[v];
        r.preds[w].assign(1, v);
        pq.push({nd, w});
      } else if (same_length(nd, r.dist[w])) {
        r.sigma[w] += r.sigma[v];
        r.preds[w].push_back(v);
      }
    }
  }
  return r;
}

std::vector<std::vector<double>> hop_distances(const Graph& g) {
  std::vector<std::vector<double>> d(g.size());
  for (int s = 0; s < g.size(); ++s) {
    auto r = sssp(g, s, DistanceMode::unweighted);
    d[s] = std::move(r.dist);
    for (double& x : d[s]) x -= 1;  // node count to edge count; inf stays inf
  }
  return d;
}

PathCountPolynomial PathCountPolynomial::unit(int max_nodes) {
  PathCountPolynomial p(max_nodes);
  p.c_[1] = 1.0;
  return p;
}

PathCountPolynomial PathCountPolynomial::shifted_right() const {
  PathCountPolynomial p(max_nodes());
  for (int i = 1; i + 1 < static_cast<int>(c_.size()); ++i) p.c_[i + 1] = c_[i];
  return p;
}

PathCountPolynomial PathCountPolynomial::shifted_left() const {
  PathCountPolynomial p(max_nodes());
  for (int i = 2; i < static_cast<int>(c_.size()); ++i) p.c_[i - 1] = c_[i];
  return p;
}

PathCountPolynomial& PathCountPolynomial::operator+=(const PathCountPolynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0.0);
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

double PathCountPolynomial::total() const {
  double t = 0;
  for (double x : c_) t += x;
  return t;
}

PathCountPolynomial operator*(const PathCountPolynomial& a, const PathCountPolynomial& b) {
  PathCountPolynomial p(std::max(a.max_nodes(), b.max_nodes()));
  const int top = p.max_nodes();
  for (int i = 1; i <= a.max_nodes(); ++i) {
    if (a.c_[i] == 0) continue;
    for (int j = 1; j <= b.max_nodes() && i + j <= top; ++j) p.c_[i + j] += a.c_[i] * b.c_[j];
  }
  return p;
}

std::vector<PathCountPolynomial> path_count_polynomials(const Graph& g, const SsspResult& r) {
  const int n = g.size();
  std::vector<PathCountPolynomial> t(n, PathCountPolynomial(n));
  t[r.source] = PathCountPolynomial::unit(n);
  for (int v : r.order) {
    for (int p : r.preds[v]) t[v] += t[p].shifted_right();
  }
  return t;
}

std::vector<PathCountPolynomial> path_count_polynomials(const Graph& g, int s) {
  return path_count_polynomials(g, sssp(g, s, DistanceMode::weighted));
}

}  // namespace gtcent
