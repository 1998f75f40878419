#pragma once

#include <bit>
#include <cstdint>
#include <functional>
#include <vector>

#include "gtcent/graph.hpp"

namespace gtcent {

// Node sets over graphs of at most 64 nodes.
using Mask = std::uint64_t;

inline int popcount(Mask m) { return std::popcount(m); }
inline Mask bit(int v) { return Mask{1} << v; }
std::vector<int> members_of(Mask m);
Mask mask_from(const std::vector<int>& nodes);

// Neighbourhood bitmasks; requires g.size() <= 64.
std::vector<Mask> adjacency_masks(const Graph& g);

bool is_connected(const std::vector<Mask>& adj, Mask c);
bool is_connected(const Graph& g, const std::vector<int>& nodes);

// Cut vertices of the subgraph induced by c. Throws std::invalid_argument if c is disconnected.
Mask articulation_points(const std::vector<Mask>& adj, Mask c);
std::vector<int> articulation_points(const Graph& g, const std::vector<int>& nodes);

// Visits each non-empty connected node set exactly once (Moerkotte and Neumann expansion)
// and returns how many were visited.
std::uint64_t connected_induced_subgraphs(const Graph& g, const std::function<void(Mask)>& visit);

}  // namespace gtcent
