#pragma once

#include <vector>

#include "gtcent/graph.hpp"
#include "gtcent/oracles.hpp"

namespace gtcent::fixtures {

// 13-node sample network, nodes v1..v13.
Graph sample13();
// Two stars: v1 with eight leaves, and v2 - v3 each with four leaves; one leaf of v1
// is linked to one leaf of v2. 19 nodes.
Graph two_hubs();
// v2 - v3, each with four leaves.
Graph linked_stars();
Graph path(int n);  // nodes 1..n
Graph triangle();

// Zachary's karate club, nodes 1..34.
Graph karate_club();
// Community 0 holds the instructor's faction (nodes 1-9, 11-14, 17, 18, 20, 22),
// community 1 the administrator's. This is the split recorded after the club divided.
CommunityStructure karate_factions(const Graph& karate);

// Three players picking apples: stands of height 20, 40, 20; a coalition reaches
// 10 apples per unit of its tallest stand, and all three together reach 600.
CoalitionGame apples_game();

}  // namespace gtcent::fixtures
