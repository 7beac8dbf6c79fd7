#include "dmvp/foremost.hpp"

namespace dmvp {

ForemostTable build_foremost_table(const NormalizedTvg& tvg, const std::vector<char>* edgeMask) {
    const int n = tvg.vertex_count();
    const Time T = tvg.totalSteps;
    ForemostTable table(n, T);

    for (Vertex u = 0; u < n; ++u) {
        table.d_mut(T, u, u) = 0;
        for (Time t = 0; t < T; ++t) table.d_mut(t, u, u) = 0;
    }

    auto usable = [&](EdgeId e) { return edgeMask == nullptr || (*edgeMask)[static_cast<std::size_t>(e)] != 0; };

    for (Time t = T - 1; t >= 0; --t) {
        for (Vertex u = 0; u < n; ++u) {
            for (Vertex v = 0; v < n; ++v) {
                if (u == v) continue;
                Time best = sat_add(table.d(t + 1, u, v), 1);
                int action = is_reachable(best) ? ForemostTable::kWait : ForemostTable::kNone;
                for (auto [e, k] : tvg.adj[static_cast<std::size_t>(u)]) {
                    if (!usable(e) || !tvg.edge_present(e, t)) continue;
                    Time viaK = sat_add(table.d(t + 1, k, v), 1);
                    // Moves beat waiting at equal cost; incidence lists are
                    // edge-id ordered, so the lowest edge wins ties.
                    if (viaK < best || (viaK == best && action == ForemostTable::kWait)) {
                        best = viaK;
                        action = e;
                    }
                }
                table.d_mut(t, u, v) = best;
                table.next_mut(t, u, v) = is_reachable(best) ? action : ForemostTable::kNone;
            }
        }
    }
    return table;
}

Journey foremost_journey(const ForemostTable& table, const NormalizedTvg& tvg, Vertex u,
                         Vertex v, Time t) {
    if (!is_reachable(table.d(t, u, v)))
        throw PreconditionError("no journey from " + std::to_string(u) + " to " +
                                std::to_string(v) + " departing at " + std::to_string(t));
    Journey journey;
    journey.startVertex = u;
    journey.startTime = t;
    Vertex cur = u;
    Time now = t;
    while (cur != v) {
        int action = table.next(now, cur, v);
        if (action == ForemostTable::kWait) {
            ++now;
            continue;
        }
        EdgeId e = action;
        journey.moves.push_back(Move{e, now});
        cur = tvg.base.edges[static_cast<std::size_t>(e)].other(cur);
        ++now;
    }
    return journey;
}

}  // namespace dmvp
