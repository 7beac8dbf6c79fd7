#pragma once

#include "dmvp/types.hpp"

namespace dmvp {

enum class Shape { Path, Cycle, Star, Spider, Comb, Tree, AlmostTree, General };

const char* shape_name(Shape s);

struct TopologyInfo {
    Shape shape = Shape::General;  // most specific label
    int c = 0;                     // |E| - |V| + 1 (extra edges over a tree)
    bool isTree = false;
    bool isPath = false;
    bool isCycle = false;
    bool isStar = false;
    bool isSpider = false;
    bool isComb = false;

    std::vector<Vertex> leaves;  // degree-1 vertices, ascending

    // Maximal non-bridge chains through degree-2 interior vertices, as vertex
    // sequences between junctions (closed chains have front == back). These are
    // the paths an optimal covering may drop one edge from.
    std::vector<std::vector<Vertex>> degree2Paths;

    std::optional<Vertex> center;    // spider center (or path anchor)
    std::vector<Vertex> pathOrder;   // endpoint-to-endpoint order when isPath
    std::vector<Vertex> cycleOrder;  // cyclic order when isCycle
    std::vector<Vertex> backbone;    // degree-3 span when isComb
};

// Exact shape detection of a connected underlying graph.
TopologyInfo detect_topology(int n, const std::vector<Edge>& edges);

inline TopologyInfo detect_topology(const TvgInstance& instance) {
    return detect_topology(instance.n, instance.edges);
}

// Unique tree path between two vertices (undefined on non-trees).
std::vector<Vertex> tree_path(int n, const std::vector<Edge>& edges, Vertex from, Vertex to);

}  // namespace dmvp
