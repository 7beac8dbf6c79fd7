#include "dmvp/solver_exact.hpp"

#include <algorithm>

namespace dmvp {

namespace {

Solution trivial_single_vertex(const char* algorithm, Vertex start) {
    Solution sol;
    sol.cost = 0;
    sol.journey.startVertex = start;
    sol.algorithm = algorithm;
    return sol;
}

}  // namespace

Solution solve_brute_force(const NormalizedTvg& tvg, const SolverOptions& opts) {
    const int n = tvg.vertex_count();
    if (n > opts.maxBruteVertices || n > 24)
        throw PreconditionError("brute-force state bound exceeded: n=" + std::to_string(n) +
                                " > " + std::to_string(std::min(opts.maxBruteVertices, 24)));
    const Vertex s = tvg.base.start;
    if (n == 1) return trivial_single_vertex("brute", s);

    const std::uint32_t full = (1u << n) - 1;
    const std::size_t stateCount = static_cast<std::size_t>(n) << n;
    auto stateId = [n](Vertex v, std::uint32_t mask) {
        return (static_cast<std::size_t>(mask) * static_cast<std::size_t>(n)) +
               static_cast<std::size_t>(v);
    };

    struct Pred {
        std::int32_t depTime = -1;
        std::int32_t edge = -1;
        std::uint32_t prevMask = 0;
    };
    std::vector<char> alive(stateCount, 0);
    std::vector<std::int32_t> arrTime(stateCount, -1);
    std::vector<Pred> pred(stateCount);

    Solution sol;
    sol.algorithm = "brute";

    const std::uint32_t startMask = 1u << s;
    alive[stateId(s, startMask)] = 1;
    arrTime[stateId(s, startMask)] = 0;
    sol.stats.statesExpanded = 1;

    Vertex doneVertex = -1;
    Time doneTime = kUnreachable;
    if (startMask == full) {
        doneVertex = s;
        doneTime = 0;
    }

    for (Time t = 0; t < tvg.totalSteps && doneVertex == -1; ++t) {
        std::vector<std::pair<Vertex, std::uint32_t>> born;
        for (std::uint32_t mask = startMask; mask <= full; ++mask) {
            if (!(mask & startMask)) continue;
            for (Vertex v = 0; v < n; ++v) {
                if (!alive[stateId(v, mask)]) continue;
                for (auto [e, w] : tvg.adj[static_cast<std::size_t>(v)]) {
                    if (!tvg.edge_present(e, t)) continue;
                    std::uint32_t nmask = mask | (1u << w);
                    std::size_t id = stateId(w, nmask);
                    if (alive[id] || arrTime[id] != -1) continue;
                    arrTime[id] = static_cast<std::int32_t>(t + 1);
                    pred[id] = Pred{static_cast<std::int32_t>(t), e, mask};
                    born.emplace_back(w, nmask);
                    ++sol.stats.statesExpanded;
                    if (nmask == full && doneVertex == -1) {
                        doneVertex = w;
                        doneTime = t + 1;
                    } else if (nmask == full && t + 1 == doneTime && w < doneVertex) {
                        doneVertex = w;
                    }
                }
            }
        }
        for (auto [v, mask] : born) alive[stateId(v, mask)] = 1;
    }

    if (doneVertex == -1) {
        sol.cost = kUnreachable;
        return sol;
    }

    sol.cost = doneTime;
    Journey journey;
    journey.startVertex = s;
    journey.startTime = 0;
    std::vector<Move> rev;
    Vertex cur = doneVertex;
    std::uint32_t mask = full;
    while (!(cur == s && mask == startMask)) {
        const Pred& p = pred[stateId(cur, mask)];
        rev.push_back(Move{p.edge, p.depTime});
        cur = tvg.base.edges[static_cast<std::size_t>(p.edge)].other(cur);
        mask = p.prevMask;
    }
    journey.moves.assign(rev.rbegin(), rev.rend());
    sol.journey = std::move(journey);
    return sol;
}

Solution solve_exact_subset_dp(const NormalizedTvg& tvg, const SolverOptions& opts) {
    const int n = tvg.vertex_count();
    if (n > opts.maxSubsetDpVertices || n > 24)
        throw PreconditionError("subset DP bound exceeded: n=" + std::to_string(n) + " > " +
                                std::to_string(std::min(opts.maxSubsetDpVertices, 24)));
    const Vertex s = tvg.base.start;
    if (n == 1) return trivial_single_vertex("exact", s);

    ForemostTable table = build_foremost_table(tvg);
    const Time T = tvg.totalSteps;

    const std::uint32_t full = (1u << n) - 1;
    const std::uint32_t sBit = 1u << s;
    const std::size_t slots = (static_cast<std::size_t>(full) + 1) * static_cast<std::size_t>(n);
    std::vector<Time> cost(slots, kUnreachable);
    std::vector<std::int8_t> pred(slots, -1);
    auto at = [n](std::uint32_t mask, Vertex v) {
        return static_cast<std::size_t>(mask) * static_cast<std::size_t>(n) +
               static_cast<std::size_t>(v);
    };

    Solution sol;
    sol.algorithm = "exact";

    cost[at(sBit, s)] = 0;
    ++sol.stats.statesExpanded;
    for (Vertex v = 0; v < n; ++v) {
        if (v == s) continue;
        cost[at(sBit | (1u << v), v)] = table.d(0, s, v);
        pred[at(sBit | (1u << v), v)] = static_cast<std::int8_t>(s);
        ++sol.stats.statesExpanded;
        ++sol.stats.candidatesExamined;
    }

    // Build up in population-count order (Gosper's hack per size class).
    for (int size = 3; size <= n; ++size) {
        std::uint32_t mask = (1u << size) - 1;
        while (mask <= full) {
            if ((mask & sBit) != 0) {
                for (Vertex v = 0; v < n; ++v) {
                    if (v == s || !(mask & (1u << v))) continue;
                    std::uint32_t prevMask = mask & ~(1u << v);
                    Time best = kUnreachable;
                    std::int8_t bestU = -1;
                    for (Vertex u = 0; u < n; ++u) {
                        if (u == s || !(prevMask & (1u << u))) continue;
                        Time base = cost[at(prevMask, u)];
                        if (!is_reachable(base) || base > T) continue;
                        Time total = sat_add(base, table.d(base, u, v));
                        ++sol.stats.candidatesExamined;
                        if (total < best) {
                            best = total;
                            bestU = static_cast<std::int8_t>(u);
                        }
                    }
                    cost[at(mask, v)] = best;
                    pred[at(mask, v)] = bestU;
                    ++sol.stats.statesExpanded;
                }
            }
            // next mask with the same popcount
            std::uint32_t c = mask & -mask;
            std::uint32_t r = mask + c;
            if (r == 0) break;
            mask = (((r ^ mask) >> 2) / c) | r;
        }
    }

    Time best = kUnreachable;
    Vertex bestEnd = -1;
    for (Vertex v = 0; v < n; ++v) {
        if (v == s) continue;
        Time c = cost[at(full, v)];
        if (c < best) {
            best = c;
            bestEnd = v;
        }
    }
    sol.cost = best;
    if (!is_reachable(best)) return sol;

    // Recover the vertex order, then stitch foremost legs together.
    std::vector<Vertex> order;
    std::uint32_t mask = full;
    Vertex cur = bestEnd;
    while (cur != s) {
        order.push_back(cur);
        Vertex prev = pred[at(mask, cur)];
        mask &= ~(1u << cur);
        cur = prev;
    }
    order.push_back(s);
    std::reverse(order.begin(), order.end());

    Journey journey;
    journey.startVertex = s;
    journey.startTime = 0;
    Time now = 0;
    for (std::size_t i = 0; i + 1 < order.size(); ++i) {
        Journey leg = foremost_journey(table, tvg, order[i], order[i + 1], now);
        journey.moves.insert(journey.moves.end(), leg.moves.begin(), leg.moves.end());
        now = leg.arrival_time();
    }
    sol.journey = std::move(journey);
    return sol;
}

}  // namespace dmvp
