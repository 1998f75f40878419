#pragma once

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <vector>

#include "gtcent/graph.hpp"
#include "gtcent/random.hpp"

namespace gtcent::testing {

inline double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
  EXPECT_EQ(a.size(), b.size());
  double m = 0;
  for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i) m = std::max(m, std::fabs(a[i] - b[i]));
  return m;
}

#define EXPECT_VEC_NEAR(a, b, tol) EXPECT_LE(::gtcent::testing::max_abs_diff((a), (b)), (tol))

inline double score_of(const Graph& g, const std::vector<double>& s, const std::string& label) {
  return s[g.index(label)];
}

inline double sum(const std::vector<double>& v) {
  double s = 0;
  for (double x : v) s += x;
  return s;
}

// A random distribution over n entries.
inline std::vector<double> random_distribution(int n, Rng& rng) {
  std::vector<double> p(n);
  double total = 0;
  for (double& x : p) total += x = uniform01(rng) + 0.05;
  for (double& x : p) x /= total;
  return p;
}

// Random assignment of n nodes to m non-empty communities.
inline std::vector<int> random_partition(int n, int m, Rng& rng) {
  std::vector<int> a(n);
  for (int v = 0; v < n; ++v) a[v] = v < m ? v : static_cast<int>(uniform_below(rng, m));
  shuffle_in_place(a, rng);
  return a;
}

}  // namespace gtcent::testing
