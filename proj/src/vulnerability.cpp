#include "gtcent/vulnerability.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include <boost/math/distributions/normal.hpp>

#include "gtcent/random.hpp"

namespace gtcent {

double igm(const Graph& g, const std::vector<char>* removed) {
  const int n = g.size();
  std::vector<int> dist(n);
  std::deque<int> q;
  double total = 0;
  for (int s = 0; s < n; ++s) {
    if (removed && (*removed)[s]) continue;
    std::fill(dist.begin(), dist.end(), -1);
    dist[s] = 0;
    q.assign(1, s);
    while (!q.empty()) {
      const int v = q.front();
      q.pop_front();
      if (v != s) total += 1.0 / dist[v];
      for (const Arc& a : g.out(v)) {
        if (dist[a.to] >= 0 || (removed && (*removed)[a.to])) continue;
        dist[a.to] = dist[v] + 1;
        q.push_back(a.to);
      }
    }
  }
  return total;
}

SizeDistribution interval_pd(int a, int b, int n) {
  if (!(1 <= a && a < b && b <= n + 1)) throw std::invalid_argument("interval must satisfy 1 <= a < b <= n+1");
  SizeDistribution pd{std::vector<double>(n, 0.0)};
  for (int k = a; k < b; ++k) pd.pd[k - 1] = 1.0 / (b - a);
  return pd;
}

ProtectionStrategy ProtectionStrategy::parse(const std::string& text) {
  ProtectionStrategy s;
  if (text == "rank-inv-sq") {
    s.kind = Kind::rank_inverse_square;
  } else if (text == "full") {
    s.kind = Kind::full;
  } else if (text == "none") {
    s.kind = Kind::none;
  } else if (text.rfind("top:", 0) == 0) {
    s.kind = Kind::top_fraction;
    std::size_t used = 0;
    try {
      s.fraction = std::stod(text.substr(4), &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != text.size() - 4 || !(s.fraction > 0 && s.fraction <= 1)) {
      throw std::invalid_argument("top fraction must lie in (0, 1]");
    }
  } else {
    throw std::invalid_argument("unknown protection strategy: " + text);
  }
  return s;
}

std::string ProtectionStrategy::name() const {
  switch (kind) {
    case Kind::rank_inverse_square:
      return "rank-inv-sq";
    case Kind::full:
      return "full";
    case Kind::none:
      return "none";
    case Kind::top_fraction: {
      std::ostringstream os;
      os << "top:" << fraction;
      return os.str();
    }
  }
  return {};
}

std::vector<int> ranks_of(const std::vector<double>& scores) {
  std::vector<int> order(scores.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return scores[a] > scores[b]; });
  std::vector<int> rank(scores.size());
  for (std::size_t i = 0; i < order.size(); ++i) rank[order[i]] = static_cast<int>(i) + 1;
  return rank;
}

SimulationResult simulate_failures(const Graph& g, const CentralityResult& ranking,
                                   const ProtectionStrategy& strategy, const FailureModel& model) {
  const int n = g.size();
  if (static_cast<int>(ranking.scores.size()) != n) throw std::invalid_argument("ranking does not match the graph");
  if (!(1 <= model.a && model.a < model.b && model.b <= n + 1)) {
    throw std::invalid_argument("failure interval must satisfy 1 <= a < b <= n+1");
  }
  if (model.trials < 1) throw std::invalid_argument("at least one trial is needed");
  if (strategy.kind == ProtectionStrategy::Kind::top_fraction && !(strategy.fraction > 0 && strategy.fraction <= 1)) {
    throw std::invalid_argument("top fraction must lie in (0, 1]");
  }
  const auto rank = ranks_of(ranking.scores);
  const int protected_top = static_cast<int>(std::ceil(strategy.fraction * n - 1e-9));

  Rng rng(model.seed);
  std::vector<int> nodes(n);
  std::vector<char> removed(n);
  std::vector<double> samples;
  samples.reserve(model.trials);
  for (int trial = 0; trial < model.trials; ++trial) {
    const int size = model.a + static_cast<int>(uniform_below(rng, model.b - model.a));
    std::iota(nodes.begin(), nodes.end(), 0);
    std::fill(removed.begin(), removed.end(), 0);
    for (int j = 0; j < size; ++j) {
      const int pick = j + static_cast<int>(uniform_below(rng, n - j));
      std::swap(nodes[j], nodes[pick]);
      const int v = nodes[j];
      bool saved = false;
      switch (strategy.kind) {
        case ProtectionStrategy::Kind::rank_inverse_square:
          saved = uniform01(rng) < 1.0 / (static_cast<double>(rank[v]) * rank[v]);
          break;
        case ProtectionStrategy::Kind::top_fraction:
          saved = rank[v] <= protected_top;
          break;
        case ProtectionStrategy::Kind::full:
          saved = true;
          break;
        case ProtectionStrategy::Kind::none:
          break;
      }
      removed[v] = !saved;
    }
    samples.push_back(igm(g, &removed));
  }

  SimulationResult r;
  r.trials = model.trials;
  // Running mean, so identical samples reproduce their value exactly.
  double ss = 0;
  for (int k = 0; k < model.trials; ++k) {
    const double delta = samples[k] - r.mean;
    r.mean += delta / (k + 1);
    ss += delta * (samples[k] - r.mean);
  }
  r.stddev = model.trials > 1 ? std::sqrt(ss / (model.trials - 1)) : 0.0;
  const double z = boost::math::quantile(boost::math::normal_distribution<double>(), 0.875);
  const double half = z * r.stddev / std::sqrt(static_cast<double>(model.trials));
  r.ci_low = r.mean - half;
  r.ci_high = r.mean + half;
  return r;
}

std::string simulation_csv_header() { return "interval,strategy,measure,mean_igm,ci_low,ci_high,seed"; }

std::string simulation_csv_row(const FailureModel& model, const ProtectionStrategy& strategy,
                               const std::string& measure, const SimulationResult& r) {
  std::ostringstream os;
  os.precision(12);
  os << '[' << model.a << ';' << model.b << ")," << strategy.name() << ',' << measure << ',' << r.mean << ','
     << r.ci_low << ',' << r.ci_high << ',' << model.seed;
  return os.str();
}

}  // namespace gtcent
