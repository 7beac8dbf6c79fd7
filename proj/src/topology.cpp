#include "dmvp/topology.hpp"

#include <algorithm>
#include <functional>
#include <queue>

namespace dmvp {

const char* shape_name(Shape s) {
    switch (s) {
        case Shape::Path: return "path";
        case Shape::Cycle: return "cycle";
        case Shape::Star: return "star";
        case Shape::Spider: return "spider";
        case Shape::Comb: return "comb";
        case Shape::Tree: return "tree";
        case Shape::AlmostTree: return "almost-tree";
        case Shape::General: return "general";
    }
    return "?";
}

namespace {

// Non-bridge edges via iterative DFS lowlink.
std::vector<char> find_cycle_edges(int n, const std::vector<Edge>& edges) {
    auto adj = build_adjacency(n, edges);
    std::vector<char> onCycle(edges.size(), 0);
    std::vector<int> disc(static_cast<std::size_t>(n), -1), low(static_cast<std::size_t>(n), 0);
    int timer = 0;

    struct Frame {
        Vertex v;
        EdgeId viaEdge;
        std::size_t childIdx;
    };
    for (Vertex root = 0; root < n; ++root) {
        if (disc[static_cast<std::size_t>(root)] != -1) continue;
        std::vector<Frame> stack{{root, -1, 0}};
        disc[static_cast<std::size_t>(root)] = low[static_cast<std::size_t>(root)] = timer++;
        while (!stack.empty()) {
            Frame& f = stack.back();
            auto& nbrs = adj[static_cast<std::size_t>(f.v)];
            if (f.childIdx < nbrs.size()) {
                auto [e, w] = nbrs[f.childIdx++];
                if (e == f.viaEdge) continue;
                if (disc[static_cast<std::size_t>(w)] == -1) {
                    disc[static_cast<std::size_t>(w)] = low[static_cast<std::size_t>(w)] = timer++;
                    stack.push_back({w, e, 0});
                } else {
                    low[static_cast<std::size_t>(f.v)] =
                        std::min(low[static_cast<std::size_t>(f.v)], disc[static_cast<std::size_t>(w)]);
                    if (disc[static_cast<std::size_t>(w)] < disc[static_cast<std::size_t>(f.v)])
                        onCycle[static_cast<std::size_t>(e)] = 1;  // back edge
                }
            } else {
                stack.pop_back();
                if (!stack.empty()) {
                    Frame& parent = stack.back();
                    low[static_cast<std::size_t>(parent.v)] = std::min(
                        low[static_cast<std::size_t>(parent.v)], low[static_cast<std::size_t>(f.v)]);
                    if (low[static_cast<std::size_t>(f.v)] <= disc[static_cast<std::size_t>(parent.v)])
                        onCycle[static_cast<std::size_t>(f.viaEdge)] = 1;
                }
            }
        }
    }
    return onCycle;
}

}  // namespace

std::vector<Vertex> tree_path(int n, const std::vector<Edge>& edges, Vertex from, Vertex to) {
    auto adj = build_adjacency(n, edges);
    std::vector<Vertex> parent(static_cast<std::size_t>(n), -1);
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::queue<Vertex> q;
    q.push(from);
    seen[static_cast<std::size_t>(from)] = 1;
    while (!q.empty()) {
        Vertex v = q.front();
        q.pop();
        for (auto [e, w] : adj[static_cast<std::size_t>(v)]) {
            (void)e;
            if (!seen[static_cast<std::size_t>(w)]) {
                seen[static_cast<std::size_t>(w)] = 1;
                parent[static_cast<std::size_t>(w)] = v;
                q.push(w);
            }
        }
    }
    std::vector<Vertex> path;
    for (Vertex v = to; v != -1; v = parent[static_cast<std::size_t>(v)]) path.push_back(v);
    std::reverse(path.begin(), path.end());
    return path;
}

TopologyInfo detect_topology(int n, const std::vector<Edge>& edges) {
    TopologyInfo info;
    auto adj = build_adjacency(n, edges);
    std::vector<int> deg(static_cast<std::size_t>(n), 0);
    for (const Edge& e : edges) {
        ++deg[static_cast<std::size_t>(e.u)];
        ++deg[static_cast<std::size_t>(e.v)];
    }
    info.c = static_cast<int>(edges.size()) - n + 1;

    for (Vertex v = 0; v < n; ++v)
        if (deg[static_cast<std::size_t>(v)] == 1) info.leaves.push_back(v);

    int maxDeg = 0;
    int branchCount = 0;  // degree > 2
    Vertex branch = -1;
    for (Vertex v = 0; v < n; ++v) {
        maxDeg = std::max(maxDeg, deg[static_cast<std::size_t>(v)]);
        if (deg[static_cast<std::size_t>(v)] > 2) {
            ++branchCount;
            if (branch == -1) branch = v;
        }
    }

    if (info.c == 0) {
        info.isTree = true;
        info.isPath = (maxDeg <= 2);
        // star: at most one vertex of degree greater than one
        int multi = 0;
        for (Vertex v = 0; v < n; ++v)
            if (deg[static_cast<std::size_t>(v)] > 1) ++multi;
        info.isStar = (multi <= 1);
        info.isSpider = (branchCount <= 1);

        if (maxDeg <= 3) {
            std::vector<Vertex> d3;
            for (Vertex v = 0; v < n; ++v)
                if (deg[static_cast<std::size_t>(v)] == 3) d3.push_back(v);
            if (d3.size() <= 1) {
                info.isComb = true;
                info.backbone = d3;
            } else {
                // the minimal subtree spanning all degree-3 vertices must be a path
                auto far = [&](Vertex from) {
                    Vertex best = d3[0];
                    std::size_t bestLen = 0;
                    for (Vertex v : d3) {
                        std::size_t len = tree_path(n, edges, from, v).size();
                        if (len > bestLen) {
                            bestLen = len;
                            best = v;
                        }
                    }
                    return best;
                };
                Vertex a = far(d3[0]);
                Vertex b = far(a);
                auto span = tree_path(n, edges, a, b);
                std::vector<char> onSpan(static_cast<std::size_t>(n), 0);
                for (Vertex v : span) onSpan[static_cast<std::size_t>(v)] = 1;
                info.isComb = std::all_of(d3.begin(), d3.end(), [&](Vertex v) {
                    return onSpan[static_cast<std::size_t>(v)] != 0;
                });
                if (info.isComb) info.backbone = span;
            }
        }

        if (info.isPath) {
            info.shape = Shape::Path;
            if (n == 1) {
                info.pathOrder = {0};
            } else {
                Vertex end = info.leaves.front();
                info.pathOrder.push_back(end);
                Vertex prev = -1, cur = end;
                while (static_cast<int>(info.pathOrder.size()) < n) {
                    for (auto [e, w] : adj[static_cast<std::size_t>(cur)]) {
                        (void)e;
                        if (w != prev) {
                            info.pathOrder.push_back(w);
                            prev = cur;
                            cur = w;
                            break;
                        }
                    }
                }
            }
        } else if (info.isStar) {
            info.shape = Shape::Star;
        } else if (info.isSpider) {
            info.shape = Shape::Spider;
        } else if (info.isComb) {
            info.shape = Shape::Comb;
        } else {
            info.shape = Shape::Tree;
        }

        if (info.isSpider) info.center = (branch != -1) ? branch : (info.isPath ? info.pathOrder.front() : 0);
        return info;
    }

    // c >= 1
    bool allDeg2 = std::all_of(deg.begin(), deg.end(), [](int d) { return d == 2; });
    if (info.c == 1 && allDeg2) {
        info.isCycle = true;
        info.shape = Shape::Cycle;
        info.cycleOrder.push_back(0);
        Vertex prev = -1, cur = 0;
        while (static_cast<int>(info.cycleOrder.size()) < n) {
            for (auto [e, w] : adj[static_cast<std::size_t>(cur)]) {
                (void)e;
                if (w != prev) {
                    info.cycleOrder.push_back(w);
                    prev = cur;
                    cur = w;
                    break;
                }
            }
        }
        // whole cycle is one closed chain; anchor at vertex 0
        std::vector<Vertex> loop = info.cycleOrder;
        loop.push_back(info.cycleOrder.front());
        info.degree2Paths.push_back(std::move(loop));
        return info;
    }

    info.shape = (info.c <= 3) ? Shape::AlmostTree : Shape::General;

    // Chains of cycle edges between junctions (degree != 2 vertices).
    auto onCycle = find_cycle_edges(n, edges);
    std::vector<char> edgeUsed(edges.size(), 0);
    for (Vertex j = 0; j < n; ++j) {
        if (deg[static_cast<std::size_t>(j)] == 2) continue;
        for (auto [e0, w0] : adj[static_cast<std::size_t>(j)]) {
            if (edgeUsed[static_cast<std::size_t>(e0)] || !onCycle[static_cast<std::size_t>(e0)])
                continue;
            std::vector<Vertex> chain{j};
            Vertex cur = w0;
            EdgeId via = e0;
            edgeUsed[static_cast<std::size_t>(e0)] = 1;
            while (deg[static_cast<std::size_t>(cur)] == 2) {
                chain.push_back(cur);
                for (auto [e, w] : adj[static_cast<std::size_t>(cur)]) {
                    if (e != via) {
                        edgeUsed[static_cast<std::size_t>(e)] = 1;
                        via = e;
                        cur = w;
                        break;
                    }
                }
            }
            chain.push_back(cur);
            info.degree2Paths.push_back(std::move(chain));
        }
    }
    return info;
}

}  // namespace dmvp
