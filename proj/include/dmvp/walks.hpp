#pragma once

#include "dmvp/types.hpp"

namespace dmvp {

// Times a fixed underlying walk greedily: each next edge is taken at its
// earliest presence at or after the current time. Optimal for the walk; fails
// (nullopt) if an edge never reappears within the horizon. When edgeMask is
// given, masked-out edges count as absent.
std::optional<Journey> time_walk(const NormalizedTvg& tvg, const std::vector<Vertex>& walk,
                                 Time startTime, const std::vector<char>* edgeMask = nullptr);

// Edge id for an unordered vertex pair, or -1.
EdgeId find_edge(const NormalizedTvg& tvg, Vertex a, Vertex b);

}  // namespace dmvp
