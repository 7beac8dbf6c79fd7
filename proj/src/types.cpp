#include "dmvp/types.hpp"

#include <algorithm>
#include <set>

namespace dmvp {

Time TvgInstance::total_duration() const {
    Time total = 0;
    for (const Snapshot& s : snapshots) total += s.duration;
    return total;
}

std::vector<std::vector<std::pair<EdgeId, Vertex>>>
build_adjacency(int n, const std::vector<Edge>& edges) {
    std::vector<std::vector<std::pair<EdgeId, Vertex>>> adj(static_cast<std::size_t>(n));
    for (EdgeId e = 0; e < static_cast<EdgeId>(edges.size()); ++e) {
        adj[static_cast<std::size_t>(edges[static_cast<std::size_t>(e)].u)].emplace_back(
            e, edges[static_cast<std::size_t>(e)].v);
        adj[static_cast<std::size_t>(edges[static_cast<std::size_t>(e)].v)].emplace_back(
            e, edges[static_cast<std::size_t>(e)].u);
    }
    return adj;
}

bool underlying_connected(int n, const std::vector<Edge>& edges) {
    if (n <= 1) return true;
    auto adj = build_adjacency(n, edges);
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::vector<Vertex> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        Vertex v = stack.back();
        stack.pop_back();
        for (auto [e, w] : adj[static_cast<std::size_t>(v)]) {
            (void)e;
            if (!seen[static_cast<std::size_t>(w)]) {
                seen[static_cast<std::size_t>(w)] = 1;
                ++count;
                stack.push_back(w);
            }
        }
    }
    return count == n;
}

void TvgInstance::check() const {
    if (n < 1) throw ValidationError("vertex count must be positive");
    std::set<std::pair<Vertex, Vertex>> seenEdges;
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const Edge& e = edges[i];
        if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n)
            throw ValidationError("edge " + std::to_string(i) + " endpoint out of range");
        if (e.u == e.v)
            throw ValidationError("edge " + std::to_string(i) + " is a self-loop");
        auto key = std::minmax(e.u, e.v);
        if (!seenEdges.insert(key).second)
            throw ValidationError("edge " + std::to_string(i) + " duplicates an earlier edge");
    }
    if (snapshots.empty()) throw ValidationError("instance must have at least one snapshot");
    for (std::size_t s = 0; s < snapshots.size(); ++s) {
        const Snapshot& snap = snapshots[s];
        if (snap.duration < 1)
            throw ValidationError("snapshot " + std::to_string(s) + " has zero duration");
        std::set<EdgeId> active;
        for (EdgeId e : snap.active) {
            if (e < 0 || e >= static_cast<EdgeId>(edges.size()))
                throw ValidationError("snapshot " + std::to_string(s) + " references edge " +
                                      std::to_string(e) + " out of range");
            if (!active.insert(e).second)
                throw ValidationError("snapshot " + std::to_string(s) + " lists edge " +
                                      std::to_string(e) + " twice");
        }
    }
    if (start < 0 || start >= n) throw ValidationError("start vertex out of range");
    if (!underlying_connected(n, edges))
        throw ValidationError("underlying graph disconnected");
}

}  // namespace dmvp
