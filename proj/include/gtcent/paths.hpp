#pragma once

#include <limits>
#include <vector>

#include "gtcent/graph.hpp"

namespace gtcent {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

// Unweighted distances count the nodes on the path (a neighbour is at distance 2,
// the source at 1). Weighted distances sum edge weights (source at 0).
enum class DistanceMode { unweighted, weighted };

struct SsspResult {
  int source = -1;
  DistanceMode mode = DistanceMode::unweighted;
  std::vector<double> dist;
  std::vector<double> sigma;
  std::vector<std::vector<int>> preds;
  // Reachable nodes in non-decreasing distance, source first.
  std::vector<int> order;
};

// removed, when given, masks nodes out of the graph. The source must not be removed.
SsspResult sssp(const Graph& g, int s, DistanceMode mode,
                const std::vector<char>* removed = nullptr);

// Relative tolerance used to decide that two weighted path lengths tie.
bool same_length(double a, double b);

// Edge-count distance matrix, kInf when unreachable.
std::vector<std::vector<double>> hop_distances(const Graph& g);

// T[i] is the number of shortest paths with exactly i nodes; index 0 unused.
class PathCountPolynomial {
 public:
  PathCountPolynomial() = default;
  explicit PathCountPolynomial(int max_nodes) : c_(max_nodes + 1, 0.0) {}

  static PathCountPolynomial unit(int max_nodes);  // coefficient 1 at index 1

  int max_nodes() const { return static_cast<int>(c_.size()) - 1; }
  double operator[](int i) const { return i < static_cast<int>(c_.size()) ? c_[i] : 0.0; }
  double& operator[](int i) { return c_[i]; }
  const std::vector<double>& coeffs() const { return c_; }

  // Every path gains one node.
  PathCountPolynomial shifted_right() const;
  // Every path loses one node; used to avoid counting a shared endpoint twice.
  PathCountPolynomial shifted_left() const;
  PathCountPolynomial& operator+=(const PathCountPolynomial& o);
  void reset() { std::fill(c_.begin(), c_.end(), 0.0); }
  double total() const;

  // Sizes of concatenated paths add, so this is a plain convolution of the coefficients.
  friend PathCountPolynomial operator*(const PathCountPolynomial& a, const PathCountPolynomial& b);

 private:
  std::vector<double> c_;
};

// T_sv for every v, built over the weighted shortest-path DAG rooted at s.
std::vector<PathCountPolynomial> path_count_polynomials(const Graph& g, int s);
std::vector<PathCountPolynomial> path_count_polynomials(const Graph& g, const SsspResult& r);

}  // namespace gtcent
