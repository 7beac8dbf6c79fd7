#include "dmvp/solver_approx.hpp"

#include <algorithm>
#include <functional>
#include <queue>

#include "dmvp/topology.hpp"
#include "dmvp/walks.hpp"

namespace dmvp {

StaticWalk static_tree_mvp(int n, const std::vector<Edge>& edges, Vertex s) {
    StaticWalk out;
    if (n == 1) {
        out.walk = {s};
        return out;
    }
    auto adj = build_adjacency(n, edges);

    // Rooted structure with subtree depths.
    std::vector<Vertex> parent(static_cast<std::size_t>(n), -1);
    std::vector<std::vector<Vertex>> children(static_cast<std::size_t>(n));
    std::vector<Vertex> order;
    order.push_back(s);
    parent[static_cast<std::size_t>(s)] = s;
    for (std::size_t i = 0; i < order.size(); ++i) {
        Vertex v = order[i];
        for (auto [e, w] : adj[static_cast<std::size_t>(v)]) {
            (void)e;
            if (parent[static_cast<std::size_t>(w)] == -1) {
                parent[static_cast<std::size_t>(w)] = v;
                children[static_cast<std::size_t>(v)].push_back(w);
                order.push_back(w);
            }
        }
    }
    std::vector<int> depth(static_cast<std::size_t>(n), 0);
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        Vertex v = *it;
        for (Vertex ch : children[static_cast<std::size_t>(v)])
            depth[static_cast<std::size_t>(v)] =
                std::max(depth[static_cast<std::size_t>(v)], depth[static_cast<std::size_t>(ch)] + 1);
    }

    out.cost = 2 * static_cast<Time>(n - 1) - depth[static_cast<std::size_t>(s)];
    out.walk.push_back(s);
    // Deepest child last (lowest index on ties); no return along that branch.
    std::function<void(Vertex, bool)> visit = [&](Vertex v, bool finalBranch) {
        const auto& kids = children[static_cast<std::size_t>(v)];
        if (kids.empty()) return;
        Vertex deep = kids.front();
        for (Vertex ch : kids)
            if (depth[static_cast<std::size_t>(ch)] > depth[static_cast<std::size_t>(deep)]) deep = ch;
        for (Vertex ch : kids) {
            if (finalBranch && ch == deep) continue;
            out.walk.push_back(ch);
            visit(ch, false);
            out.walk.push_back(v);
        }
        if (finalBranch) {
            out.walk.push_back(deep);
            visit(deep, true);
        }
    };
    visit(s, true);
    return out;
}

Solution approx_delta_tree(const NormalizedTvg& tvg, Time delta) {
    TopologyInfo info = detect_topology(tvg.base);
    if (!info.isTree) throw PreconditionError("underlying graph is not a tree");
    (void)delta;  // quantifies the guarantee only; the walk never consults it

    StaticWalk plan = static_tree_mvp(tvg.vertex_count(), tvg.base.edges, tvg.base.start);
    Solution sol;
    sol.algorithm = "tree-b-approx";
    sol.stats.candidatesExamined = 1;
    auto timed = time_walk(tvg, plan.walk, 0);
    if (!timed) {
        sol.cost = kUnreachable;
        sol.note = "an edge of the static walk never reappears within the horizon";
        return sol;
    }
    sol.cost = timed->temporal_length();
    sol.journey = *timed;
    return sol;
}

Solution approx_spanning_traversal(const NormalizedTvg& tvg, Time delta) {
    (void)delta;
    const int n = tvg.vertex_count();
    const Vertex s = tvg.base.start;

    // BFS tree from s; neighbor lists are edge-id ordered, which makes the
    // spanning tree deterministic.
    std::vector<Vertex> parent(static_cast<std::size_t>(n), -1);
    std::vector<std::vector<Vertex>> children(static_cast<std::size_t>(n));
    std::queue<Vertex> q;
    q.push(s);
    parent[static_cast<std::size_t>(s)] = s;
    while (!q.empty()) {
        Vertex v = q.front();
        q.pop();
        for (auto [e, w] : tvg.adj[static_cast<std::size_t>(v)]) {
            (void)e;
            if (parent[static_cast<std::size_t>(w)] == -1) {
                parent[static_cast<std::size_t>(w)] = v;
                children[static_cast<std::size_t>(v)].push_back(w);
                q.push(w);
            }
        }
    }
    for (auto& kids : children) std::sort(kids.begin(), kids.end());

    // Full depth-first walk, then trim the pure return after the last new vertex.
    std::vector<Vertex> walk{s};
    std::function<void(Vertex)> dfs = [&](Vertex v) {
        for (Vertex ch : children[static_cast<std::size_t>(v)]) {
            walk.push_back(ch);
            dfs(ch);
            walk.push_back(v);
        }
    };
    dfs(s);
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::size_t lastNew = 0;
    for (std::size_t i = 0; i < walk.size(); ++i) {
        if (!seen[static_cast<std::size_t>(walk[i])]) {
            seen[static_cast<std::size_t>(walk[i])] = 1;
            lastNew = i;
        }
    }
    walk.resize(lastNew + 1);

    Solution sol;
    sol.algorithm = "spanning-approx";
    sol.stats.candidatesExamined = 1;
    auto timed = time_walk(tvg, walk, 0);
    if (!timed) {
        sol.cost = kUnreachable;
        sol.note = "an edge of the spanning traversal never reappears within the horizon";
        return sol;
    }
    sol.cost = timed->temporal_length();
    sol.journey = *timed;
    return sol;
}

}  // namespace dmvp
