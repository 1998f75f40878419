#include "gtcent/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace gtcent {

namespace {

void check_limit(int n, int limit, const char* what) {
  if (n > limit) {
    throw SizeLimitError(std::string(what) + ": " + std::to_string(n) + " exceeds the limit of " +
                         std::to_string(limit));
  }
  if (n > 63) throw SizeLimitError(std::string(what) + ": at most 63 players");
}

double binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  double r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Per-size weights beta(k) / C(n-1, k).
std::vector<double> per_coalition(const std::vector<double>& beta) {
  const int n = static_cast<int>(beta.size());
  std::vector<double> w(n);
  for (int k = 0; k < n; ++k) w[k] = beta[k] / binom(n - 1, k);
  return w;
}

std::vector<double> all_values(const CoalitionGame& game) {
  std::vector<double> v(std::size_t{1} << game.n);
  for (Mask c = 1; c < v.size(); ++c) v[c] = game.value(c);
  v[0] = 0;
  return v;
}

std::vector<double> subset_sum(const CoalitionGame& game, const std::vector<double>& w) {
  const int n = game.n;
  auto val = all_values(game);
  std::vector<double> phi(n, 0.0);
  for (Mask c = 0; c < val.size(); ++c) {
    const int k = popcount(c);
    if (k == n) continue;
    for (int i = 0; i < n; ++i) {
      if (c & bit(i)) continue;
      phi[i] += w[k] * (val[c | bit(i)] - val[c]);
    }
  }
  return phi;
}

void check_distribution(const std::vector<double>& p, std::size_t size, const char* what) {
  if (p.size() != size) throw std::invalid_argument(std::string(what) + ": wrong table length");
  double total = 0;
  for (double x : p) {
    if (!(x >= 0)) throw std::invalid_argument(std::string(what) + ": negative probability");
    total += x;
  }
  if (std::fabs(total - 1) > 1e-12) throw std::invalid_argument(std::string(what) + ": does not sum to 1");
}

}  // namespace

SemivalueWeights SemivalueWeights::shapley(int n) {
  return {std::vector<double>(n, 1.0 / n)};
}

SemivalueWeights SemivalueWeights::banzhaf(int n) {
  std::vector<double> b(n);
  for (int k = 0; k < n; ++k) b[k] = binom(n - 1, k) / std::ldexp(1.0, n - 1);
  return {b};
}

void SemivalueWeights::validate(std::size_t expected_size) const {
  check_distribution(beta, expected_size, "semivalue weights");
}

void CoalitionalWeights::validate(const CommunityStructure& cs) const {
  check_distribution(beta, cs.count(), "community weights");
  if (alpha.size() != static_cast<std::size_t>(cs.count())) {
    throw std::invalid_argument("one member table per community expected");
  }
  for (int j = 0; j < cs.count(); ++j) check_distribution(alpha[j], cs.members(j).size(), "member weights");
}

std::vector<double> exact_shapley(const CoalitionGame& game, int limit) {
  check_limit(game.n, limit, "Shapley oracle");
  return subset_sum(game, per_coalition(SemivalueWeights::shapley(game.n).beta));
}

std::vector<double> exact_semivalue(const CoalitionGame& game, const SemivalueWeights& w, int limit) {
  check_limit(game.n, limit, "semivalue oracle");
  w.validate(game.n);
  return subset_sum(game, per_coalition(w.beta));
}

std::vector<double> exact_coalitional_semivalue(const CoalitionGame& game,
                                                const CommunityStructure& cs,
                                                const CoalitionalWeights& w, int limit) {
  if (cs.node_count() != game.n) throw std::invalid_argument("community structure size mismatch");
  check_limit(cs.count(), limit, "coalitional oracle (communities)");
  for (int j = 0; j < cs.count(); ++j) {
    check_limit(static_cast<int>(cs.members(j).size()), limit, "coalitional oracle (community size)");
  }
  if (game.n > 64) throw SizeLimitError("coalitional oracle: at most 64 players");
  w.validate(cs);
  const int m = cs.count();
  const auto bw = per_coalition(w.beta);
  std::vector<Mask> block(m, 0);
  for (int j = 0; j < m; ++j) block[j] = mask_from(cs.members(j));

  std::vector<double> phi(game.n, 0.0);
  for (int j = 0; j < m; ++j) {
    const auto aw = per_coalition(w.alpha[j]);
    const auto& mem = cs.members(j);
    const int cj = static_cast<int>(mem.size());
    std::vector<int> others;
    for (int r = 0; r < m; ++r) if (r != j) others.push_back(r);
    for (int idx = 0; idx < cj; ++idx) {
      const int i = mem[idx];
      std::vector<int> mates;
      for (int x : mem) if (x != i) mates.push_back(x);
      double total = 0;
      for (Mask rs = 0; rs < (Mask{1} << others.size()); ++rs) {
        Mask outer = 0;
        for (std::size_t q = 0; q < others.size(); ++q) if (rs & bit(q)) outer |= block[others[q]];
        const double wr = bw[popcount(rs)];
        if (wr == 0) continue;
        for (Mask cs_ = 0; cs_ < (Mask{1} << mates.size()); ++cs_) {
          const double wc = aw[popcount(cs_)];
          if (wc == 0) continue;
          Mask c = outer;
          for (std::size_t q = 0; q < mates.size(); ++q) if (cs_ & bit(q)) c |= bit(mates[q]);
          const double without = c ? game.value(c) : 0.0;
          total += wr * wc * (game.value(c | bit(i)) - without);
        }
      }
      phi[i] = total;
    }
  }
  return phi;
}

std::vector<double> exact_owen(const CoalitionGame& game, const CommunityStructure& cs, int limit) {
  CoalitionalWeights w;
  w.beta.assign(cs.count(), 1.0 / cs.count());
  for (int j = 0; j < cs.count(); ++j) {
    const auto s = cs.members(j).size();
    w.alpha.emplace_back(s, 1.0 / static_cast<double>(s));
  }
  return exact_coalitional_semivalue(game, cs, w, limit);
}

std::vector<double> permutation_shapley(const CoalitionGame& game, int limit) {
  check_limit(game.n, limit, "permutation oracle");
  std::vector<int> perm(game.n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<double> phi(game.n, 0.0);
  double count = 0;
  do {
    Mask c = 0;
    double prev = 0;
    for (int p : perm) {
      c |= bit(p);
      double cur = game.value(c);
      phi[p] += cur - prev;
      prev = cur;
    }
    ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  for (double& x : phi) x /= count;
  return phi;
}

std::vector<double> exact_nowak_radzik(const OrderedGame& game, int limit) {
  check_limit(game.n, limit, "NR oracle");
  std::vector<int> perm(game.n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<double> phi(game.n, 0.0);
  double count = 0;
  std::vector<int> prefix;
  do {
    prefix.clear();
    double prev = 0;
    for (int p : perm) {
      prefix.push_back(p);
      double cur = game.value(prefix);
      phi[p] += cur - prev;
      prev = cur;
    }
    ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  for (double& x : phi) x /= count;
  return phi;
}

std::vector<double> exact_sanchez_bergantinos(const OrderedGame& game, int limit) {
  check_limit(game.n, limit, "SB oracle");
  std::vector<int> perm(game.n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<double> phi(game.n, 0.0);
  double count = 0;
  std::vector<int> prefix, inserted;
  do {
    prefix.clear();
    double base = 0;
    for (int p : perm) {
      const std::size_t k = prefix.size();
      double sum = 0;
      for (std::size_t l = 0; l <= k; ++l) {
        inserted.assign(prefix.begin(), prefix.end());
        inserted.insert(inserted.begin() + static_cast<std::ptrdiff_t>(l), p);
        sum += game.value(inserted) - base;
      }
      phi[p] += sum / static_cast<double>(k + 1);
      prefix.push_back(p);
      base = game.value(prefix);
    }
    ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  for (double& x : phi) x /= count;
  return phi;
}

double mean_over_orderings(const OrderedGame& game) {
  std::vector<int> perm(game.n);
  std::iota(perm.begin(), perm.end(), 0);
  double total = 0, count = 0;
  do {
    total += game.value(perm);
    ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total / count;
}

}  // namespace gtcent
