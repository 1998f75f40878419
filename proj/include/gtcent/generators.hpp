#pragma once

#include <cstdint>

#include "gtcent/graph.hpp"

namespace gtcent {

// All generators are deterministic in the seed. Node labels are the indices.
Graph erdos_renyi(int n, double p, std::uint64_t seed, bool directed = false);
// A uniform random recursive tree plus independent extra edges with probability p.
Graph random_connected(int n, double p, std::uint64_t seed);
Graph random_tree(int n, std::uint64_t seed);
// Starts from a clique on k+1 nodes; every later node links to k distinct nodes
// picked with probability proportional to degree.
Graph preferential_attachment(int n, int k, std::uint64_t seed);
Graph complete_graph(int n);

// Same topology, weights uniform in [lo, hi]; integer weights when integral is set.
Graph with_random_weights(const Graph& g, double lo, double hi, std::uint64_t seed, bool integral = false);

}  // namespace gtcent
