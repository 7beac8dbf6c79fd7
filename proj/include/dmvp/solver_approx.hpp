#pragma once

#include "dmvp/types.hpp"

namespace dmvp {

struct StaticWalk {
    Time cost = 0;                // 2(n-1) - ecc(s)
    std::vector<Vertex> walk;     // vertex sequence, |walk| = cost + 1
};

// Minimal static covering walk of a tree from s: depth-first traversal taking
// the branch toward a farthest leaf last and not returning from it.
StaticWalk static_tree_mvp(int n, const std::vector<Edge>& edges, Vertex s);

// Follows the static optimal walk, waiting at each edge until present.
// Ratio <= Delta on instances whose edges recur within every Delta-window.
Solution approx_delta_tree(const NormalizedTvg& tvg, Time delta);

// Depth-first traversal of a breadth-first spanning tree, waiting for each
// next edge; cost <= 2nDelta - 3Delta and ratio <= 2Delta on such instances.
Solution approx_spanning_traversal(const NormalizedTvg& tvg, Time delta);

}  // namespace dmvp
