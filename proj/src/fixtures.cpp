#include "gtcent/fixtures.hpp"

#include <algorithm>
#include <string>

namespace gtcent::fixtures {

namespace {

Graph from_pairs(const std::vector<std::pair<std::string, std::string>>& pairs) {
  std::vector<EdgeSpec> edges;
  for (const auto& [u, v] : pairs) edges.push_back({u, v, std::nullopt, 0});
  return build_graph(edges);
}

}  // namespace

Graph sample13() {
  return from_pairs({{"v1", "v7"}, {"v7", "v2"}, {"v4", "v1"}, {"v5", "v1"}, {"v1", "v6"},
                     {"v6", "v2"}, {"v2", "v9"}, {"v9", "v3"}, {"v1", "v8"}, {"v8", "v2"},
                     {"v2", "v10"}, {"v10", "v3"}, {"v8", "v11"}, {"v11", "v12"}, {"v11", "v13"}});
}

Graph two_hubs() {
  std::vector<std::pair<std::string, std::string>> e;
  for (int i = 0; i < 8; ++i) e.emplace_back("v1", "a" + std::to_string(i + 1));
  e.emplace_back("v2", "v3");
  for (int i = 0; i < 4; ++i) {
    e.emplace_back("v2", "b" + std::to_string(i + 1));
    e.emplace_back("v3", "c" + std::to_string(i + 1));
  }
  e.emplace_back("a4", "b1");
  return from_pairs(e);
}

Graph linked_stars() {
  std::vector<std::pair<std::string, std::string>> e{{"v2", "v3"}};
  for (int i = 0; i < 4; ++i) {
    e.emplace_back("v2", "b" + std::to_string(i + 1));
    e.emplace_back("v3", "c" + std::to_string(i + 1));
  }
  return from_pairs(e);
}

Graph path(int n) {
  std::vector<std::pair<std::string, std::string>> e;
  for (int i = 1; i < n; ++i) e.emplace_back(std::to_string(i), std::to_string(i + 1));
  return from_pairs(e);
}

Graph triangle() { return from_pairs({{"a", "b"}, {"b", "c"}, {"a", "c"}}); }

Graph karate_club() {
  static const int edges[][2] = {
      {1, 2},   {1, 3},   {1, 4},   {1, 5},   {1, 6},   {1, 7},   {1, 8},   {1, 9},   {1, 11},  {1, 12},
      {1, 13},  {1, 14},  {1, 18},  {1, 20},  {1, 22},  {1, 32},  {2, 3},   {2, 4},   {2, 8},   {2, 14},
      {2, 18},  {2, 20},  {2, 22},  {2, 31},  {3, 4},   {3, 8},   {3, 9},   {3, 10},  {3, 14},  {3, 28},
      {3, 29},  {3, 33},  {4, 8},   {4, 13},  {4, 14},  {5, 7},   {5, 11},  {6, 7},   {6, 11},  {6, 17},
      {7, 17},  {9, 31},  {9, 33},  {9, 34},  {10, 34}, {14, 34}, {15, 33}, {15, 34}, {16, 33}, {16, 34},
      {19, 33}, {19, 34}, {20, 34}, {21, 33}, {21, 34}, {23, 33}, {23, 34}, {24, 26}, {24, 28}, {24, 30},
      {24, 33}, {24, 34}, {25, 26}, {25, 28}, {25, 32}, {26, 32}, {27, 30}, {27, 34}, {28, 34}, {29, 32},
      {29, 34}, {30, 33}, {30, 34}, {31, 33}, {31, 34}, {32, 33}, {32, 34}, {33, 34}};
  Graph g(34);
  std::vector<std::string> labels;
  for (int v = 0; v < 34; ++v) labels.push_back(std::to_string(v + 1));
  g.set_labels(labels);
  for (const auto& e : edges) g.add_edge(e[0] - 1, e[1] - 1);
  return g;
}

CommunityStructure karate_factions(const Graph& karate) {
  static const int instructor[] = {1, 2, 3, 4, 5, 6, 7, 8, 9, 11, 12, 13, 14, 17, 18, 20, 22};
  std::vector<int> side(karate.size(), 1);
  for (int v : instructor) side[karate.index(std::to_string(v))] = 0;
  return CommunityStructure(side);
}

CoalitionGame apples_game() {
  return {3, [](Mask c) {
            if (c == 0) return 0.0;
            if (c == 0b111) return 600.0;
            const double height[] = {20, 40, 20};
            double best = 0;
            for (int i = 0; i < 3; ++i) if (c & bit(i)) best = std::max(best, height[i]);
            return best * 10;
          }};
}

}  // namespace gtcent::fixtures
