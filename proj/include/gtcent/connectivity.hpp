#pragma once

#include <cstdint>
#include <functional>

#include "gtcent/centrality.hpp"
#include "gtcent/graph.hpp"
#include "gtcent/subgraphs.hpp"

namespace gtcent {

enum class ConnectivityPreset { unit, edges_over_weight, custom };

// Value of a connected, non-empty node set. Disconnected sets are worth 0 regardless.
using ConnectedValue = std::function<double(const Graph&, Mask)>;

struct ConnectivityGame {
  const Graph* graph = nullptr;
  ConnectivityPreset preset = ConnectivityPreset::unit;
  ConnectedValue custom;

  static ConnectivityGame make(const Graph& g, ConnectivityPreset preset, ConnectedValue custom = {});
};

ConnectivityPreset parse_connectivity_preset(const std::string& name);

// Value of c assuming it is connected; edges_over_weight gives 0 on a single node.
double connected_value(const ConnectivityGame& game, Mask c);
double nu_connectivity(const ConnectivityGame& game, Mask c);

inline constexpr int kGeneralSvLimit = 22;

// Scans all coalitions. Throws SizeLimitError past the limit.
CentralityResult general_sv_connectivity(const ConnectivityGame& game, int limit = kGeneralSvLimit);

// Visits only connected coalitions; coalitions, when given, receives how many.
CentralityResult faster_svcg(const ConnectivityGame& game, std::uint64_t* coalitions = nullptr);

// Unbiased estimate from max_iter sampled coalitions.
CentralityResult approximate_svcg(const ConnectivityGame& game, std::uint64_t max_iter, std::uint64_t seed);

}  // namespace gtcent
