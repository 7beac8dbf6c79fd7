#include "dmvp/solver_topology.hpp"

#include <algorithm>
#include <functional>

#include "dmvp/foremost.hpp"
#include "dmvp/walks.hpp"

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

Solution solve_path(const NormalizedTvg& tvg) {
    TopologyInfo info = detect_topology(tvg.base);
    if (!info.isPath) throw PreconditionError("underlying graph is not a path");
    const int n = tvg.vertex_count();
    const Vertex s = tvg.base.start;
    if (n == 1) {
        Solution sol = trivial_single_vertex("path", s);
        sol.stats.candidatesExamined = 2;
        return sol;
    }

    const auto& order = info.pathOrder;
    int k = static_cast<int>(std::find(order.begin(), order.end(), s) - order.begin());

    // One journey heads for each endpoint first, turns there, then crosses to
    // the opposite endpoint; whichever finishes first is optimal.
    struct Walker {
        int pos;
        int firstEnd;   // endpoint reached before turning
        int secondEnd;  // completion endpoint
        bool turned;
        bool done;
        std::vector<Move> moves;
    };
    Walker left{k, 0, n - 1, k == 0, n == 1, {}};
    Walker right{k, n - 1, 0, k == n - 1, n == 1, {}};

    Solution sol;
    sol.algorithm = "path";
    sol.stats.candidatesExamined = 2;

    auto step = [&](Walker& w, Time t) {
        if (w.done) return;
        int target = w.turned ? w.secondEnd : w.firstEnd;
        int dir = target > w.pos ? 1 : -1;
        EdgeId e = find_edge(tvg, order[static_cast<std::size_t>(w.pos)],
                             order[static_cast<std::size_t>(w.pos + dir)]);
        if (!tvg.edge_present(e, t)) return;
        w.moves.push_back(Move{e, t});
        w.pos += dir;
        if (w.pos == w.firstEnd && !w.turned) w.turned = true;
        if (w.pos == w.secondEnd && w.turned) w.done = true;
    };

    for (Time t = 0; t < tvg.totalSteps; ++t) {
        step(left, t);
        step(right, t);
        if (left.done || right.done) {
            Walker& winner = left.done ? left : right;
            sol.cost = t + 1;
            sol.journey.startVertex = s;
            sol.journey.startTime = 0;
            sol.journey.moves = std::move(winner.moves);
            return sol;
        }
    }
    sol.cost = kUnreachable;
    return sol;
}

Solution solve_cycle(const NormalizedTvg& tvg) {
    TopologyInfo info = detect_topology(tvg.base);
    if (!info.isCycle) throw PreconditionError("underlying graph is not a cycle");
    const int n = tvg.vertex_count();
    const Vertex s = tvg.base.start;

    // Rotate the cyclic order to start at s; orient deterministically toward
    // the smaller neighbor.
    std::vector<Vertex> ring = info.cycleOrder;
    auto it = std::find(ring.begin(), ring.end(), s);
    std::rotate(ring.begin(), it, ring.end());
    if (ring[1] > ring[static_cast<std::size_t>(n - 1)])
        std::reverse(ring.begin() + 1, ring.end());
    auto at = [&](int i) { return ring[static_cast<std::size_t>(((i % n) + n) % n)]; };

    Solution sol;
    sol.algorithm = "cycle";

    auto collapse = [](std::vector<Vertex> w) {
        w.erase(std::unique(w.begin(), w.end()), w.end());
        return w;
    };

    for (int k = 1; k <= n - 1; ++k) {
        // ascending to v_{k-1}, reverse, descending through v_0 to v_k
        std::vector<Vertex> w1;
        for (int i = 0; i <= k - 1; ++i) w1.push_back(at(i));
        for (int i = k - 2; i >= 0; --i) w1.push_back(at(i));
        for (int i = n - 1; i >= k; --i) w1.push_back(at(i));
        // descending to v_{k+1}, reverse, ascending through v_0 to v_k
        std::vector<Vertex> w2;
        w2.push_back(at(0));
        for (int i = n - 1; i >= k + 1; --i) w2.push_back(at(i));
        for (int i = k + 2; i <= n - 1; ++i) w2.push_back(at(i));
        for (int i = 0; i <= k; ++i) w2.push_back(at(i));

        for (const auto& walk : {collapse(w1), collapse(w2)}) {
            ++sol.stats.candidatesExamined;
            auto timed = time_walk(tvg, walk, 0);
            if (timed && timed->temporal_length() < sol.cost) {
                sol.cost = timed->temporal_length();
                sol.journey = *timed;
            }
        }
    }
    return sol;
}

namespace {

// Held-Karp over visit elements. A leaf element is reached by a foremost leg;
// a chain element is a foremost leg to its entry followed by a greedy
// traversal of the fixed chain (one direction per use).
struct DpElement {
    bool isChain = false;
    Vertex leaf = -1;
    std::vector<Vertex> route;  // chain vertex sequence (forward direction)
};

struct ElementDpResult {
    Time cost = kUnreachable;
    Journey journey;
    std::int64_t statesExpanded = 0;
    std::int64_t candidatesExamined = 0;
};

ElementDpResult run_element_dp(const NormalizedTvg& tvg, const ForemostTable& table,
                               const std::vector<DpElement>& elements,
                               const std::vector<char>* edgeMask) {
    const Vertex s = tvg.base.start;
    ElementDpResult result;
    const int m = static_cast<int>(elements.size());
    if (m == 0) {
        result.cost = 0;
        result.journey.startVertex = s;
        return result;
    }

    // A state is (visited element mask, last element, direction of last).
    auto entryOf = [&](int e, int dir) {
        const DpElement& el = elements[static_cast<std::size_t>(e)];
        if (!el.isChain) return el.leaf;
        return dir == 0 ? el.route.front() : el.route.back();
    };
    auto exitOf = [&](int e, int dir) {
        const DpElement& el = elements[static_cast<std::size_t>(e)];
        if (!el.isChain) return el.leaf;
        return dir == 0 ? el.route.back() : el.route.front();
    };
    auto traverse = [&](int e, int dir, Time from) -> Time {
        const DpElement& el = elements[static_cast<std::size_t>(e)];
        if (!el.isChain) return from;
        std::vector<Vertex> route = el.route;
        if (dir == 1) std::reverse(route.begin(), route.end());
        auto timed = time_walk(tvg, route, from, edgeMask);
        return timed ? timed->arrival_time() : kUnreachable;
    };

    const std::size_t states = (static_cast<std::size_t>(1) << m) * static_cast<std::size_t>(m) * 2;
    std::vector<Time> cost(states, kUnreachable);
    struct From {
        std::int16_t elem = -1;
        std::int8_t dir = 0;
    };
    std::vector<From> pred(states);
    auto id = [m](std::uint32_t mask, int e, int dir) {
        return (static_cast<std::size_t>(mask) * static_cast<std::size_t>(m) +
                static_cast<std::size_t>(e)) * 2 + static_cast<std::size_t>(dir);
    };

    const std::uint32_t full = (1u << m) - 1;
    for (int e = 0; e < m; ++e) {
        int dirs = elements[static_cast<std::size_t>(e)].isChain ? 2 : 1;
        for (int dir = 0; dir < dirs; ++dir) {
            Time leg = table.d(0, s, entryOf(e, dir));
            if (!is_reachable(leg)) continue;
            Time arr = traverse(e, dir, leg);
            cost[id(1u << e, e, dir)] = arr;
            ++result.statesExpanded;
        }
    }

    for (std::uint32_t mask = 1; mask <= full; ++mask) {
        for (int last = 0; last < m; ++last) {
            if (!(mask & (1u << last))) continue;
            int lastDirs = elements[static_cast<std::size_t>(last)].isChain ? 2 : 1;
            for (int ldir = 0; ldir < lastDirs; ++ldir) {
                Time base = cost[id(mask, last, ldir)];
                if (!is_reachable(base) || base > tvg.totalSteps) continue;
                Vertex from = exitOf(last, ldir);
                for (int nxt = 0; nxt < m; ++nxt) {
                    if (mask & (1u << nxt)) continue;
                    int dirs = elements[static_cast<std::size_t>(nxt)].isChain ? 2 : 1;
                    for (int dir = 0; dir < dirs; ++dir) {
                        ++result.candidatesExamined;
                        Time leg = table.d(base, from, entryOf(nxt, dir));
                        if (!is_reachable(leg)) continue;
                        Time arr = traverse(nxt, dir, base + leg);
                        std::size_t slot = id(mask | (1u << nxt), nxt, dir);
                        if (arr < cost[slot]) {
                            cost[slot] = arr;
                            pred[slot] = From{static_cast<std::int16_t>(last),
                                              static_cast<std::int8_t>(ldir)};
                            ++result.statesExpanded;
                        }
                    }
                }
            }
        }
    }

    int bestElem = -1, bestDir = 0;
    for (int e = 0; e < m; ++e) {
        int dirs = elements[static_cast<std::size_t>(e)].isChain ? 2 : 1;
        for (int dir = 0; dir < dirs; ++dir) {
            Time c = cost[id(full, e, dir)];
            if (c < result.cost) {
                result.cost = c;
                bestElem = e;
                bestDir = dir;
            }
        }
    }
    if (!is_reachable(result.cost)) return result;

    // Unwind the element order, then re-time forward to emit moves.
    std::vector<std::pair<int, int>> orderRev;
    std::uint32_t mask = full;
    int e = bestElem, dir = bestDir;
    while (e != -1) {
        orderRev.emplace_back(e, dir);
        From f = pred[id(mask, e, dir)];
        mask &= ~(1u << e);
        e = f.elem;
        dir = f.dir;
    }
    std::reverse(orderRev.begin(), orderRev.end());

    Journey journey;
    journey.startVertex = s;
    journey.startTime = 0;
    Vertex cur = s;
    Time now = 0;
    for (auto [el, d] : orderRev) {
        Journey leg = foremost_journey(table, tvg, cur, entryOf(el, d), now);
        journey.moves.insert(journey.moves.end(), leg.moves.begin(), leg.moves.end());
        now = leg.arrival_time();
        const DpElement& def = elements[static_cast<std::size_t>(el)];
        if (def.isChain) {
            std::vector<Vertex> route = def.route;
            if (d == 1) std::reverse(route.begin(), route.end());
            auto timed = time_walk(tvg, route, now, edgeMask);
            journey.moves.insert(journey.moves.end(), timed->moves.begin(), timed->moves.end());
            now = timed->arrival_time();
        }
        cur = exitOf(el, d);
    }
    result.journey = std::move(journey);
    return result;
}

std::vector<DpElement> leaf_elements(const std::vector<Vertex>& leaves, Vertex start) {
    std::vector<DpElement> elements;
    for (Vertex l : leaves)
        if (l != start) elements.push_back(DpElement{false, l, {}});
    return elements;
}

}  // namespace

Solution solve_tree_leaf_dp(const NormalizedTvg& tvg, const TopologyInfo& info,
                            const SolverOptions& opts) {
    if (!info.isTree) throw PreconditionError("underlying graph is not a tree");
    const Vertex s = tvg.base.start;
    if (tvg.vertex_count() == 1) return trivial_single_vertex("tree", s);

    auto elements = leaf_elements(info.leaves, s);
    if (static_cast<int>(elements.size()) > opts.maxLeafElements)
        throw PreconditionError("leaf count " + std::to_string(elements.size()) +
                                " exceeds bound " + std::to_string(opts.maxLeafElements));

    ForemostTable table = build_foremost_table(tvg);
    ElementDpResult dp = run_element_dp(tvg, table, elements, nullptr);

    Solution sol;
    sol.algorithm = "tree";
    sol.cost = dp.cost;
    sol.journey = std::move(dp.journey);
    sol.stats.statesExpanded = dp.statesExpanded;
    sol.stats.candidatesExamined = dp.candidatesExamined;
    return sol;
}

Solution solve_almost_tree(const NormalizedTvg& tvg, const TopologyInfo& info,
                           const SolverOptions& opts) {
    const int c = info.c;
    if (c > opts.maxAlmostTreeC)
        throw PreconditionError("almost-tree parameter c=" + std::to_string(c) +
                                " exceeds bound " + std::to_string(opts.maxAlmostTreeC));
    const Vertex s = tvg.base.start;
    const int n = tvg.vertex_count();
    if (n == 1) return trivial_single_vertex("almost-tree", s);

    const int nChains = static_cast<int>(info.degree2Paths.size());
    // Any candidate has at most leaves(G) + 2c' new leaves + surviving chains.
    int worstElements = static_cast<int>(info.leaves.size()) + nChains + std::min(c, nChains);
    if (worstElements > opts.maxLeafElements)
        throw PreconditionError("element bound exceeded: up to " +
                                std::to_string(worstElements) + " > " +
                                std::to_string(opts.maxLeafElements));

    // Edge ids along each chain, in route order.
    std::vector<std::vector<EdgeId>> chainEdges(static_cast<std::size_t>(nChains));
    for (int i = 0; i < nChains; ++i) {
        const auto& route = info.degree2Paths[static_cast<std::size_t>(i)];
        for (std::size_t j = 0; j + 1 < route.size(); ++j)
            chainEdges[static_cast<std::size_t>(i)].push_back(
                find_edge(tvg, route[j], route[j + 1]));
    }

    Solution sol;
    sol.algorithm = "almost-tree";

    std::vector<char> mask(tvg.base.edges.size(), 1);
    std::vector<int> degree(static_cast<std::size_t>(n), 0);

    auto evaluate_candidate = [&](const std::vector<int>& removedChains) {
        ++sol.stats.candidatesExamined;
        // connectivity of the candidate subgraph
        std::vector<Edge> kept;
        for (EdgeId e = 0; e < static_cast<EdgeId>(tvg.base.edges.size()); ++e)
            if (mask[static_cast<std::size_t>(e)])
                kept.push_back(tvg.base.edges[static_cast<std::size_t>(e)]);
        if (!underlying_connected(n, kept)) return;

        std::fill(degree.begin(), degree.end(), 0);
        for (const Edge& e : kept) {
            ++degree[static_cast<std::size_t>(e.u)];
            ++degree[static_cast<std::size_t>(e.v)];
        }
        std::vector<Vertex> leaves;
        for (Vertex v = 0; v < n; ++v)
            if (degree[static_cast<std::size_t>(v)] == 1) leaves.push_back(v);

        std::vector<DpElement> elements = leaf_elements(leaves, s);
        std::vector<char> removed(static_cast<std::size_t>(nChains), 0);
        for (int i : removedChains) removed[static_cast<std::size_t>(i)] = 1;
        for (int i = 0; i < nChains; ++i)
            if (!removed[static_cast<std::size_t>(i)])
                elements.push_back(DpElement{true, -1, info.degree2Paths[static_cast<std::size_t>(i)]});

        if (static_cast<int>(elements.size()) > opts.maxLeafElements)
            throw PreconditionError("element count " + std::to_string(elements.size()) +
                                    " exceeds bound " + std::to_string(opts.maxLeafElements));

        ForemostTable table = build_foremost_table(tvg, &mask);
        ElementDpResult dp = run_element_dp(tvg, table, elements, &mask);
        sol.stats.statesExpanded += dp.statesExpanded;
        if (dp.cost < sol.cost) {
            sol.cost = dp.cost;
            sol.journey = dp.journey;
        }
    };

    // Choose up to c chains, then one edge to drop from each chosen chain.
    std::vector<int> chosen;
    std::function<void(std::size_t)> dropFrom = [&](std::size_t idx) {
        if (idx == chosen.size()) {
            evaluate_candidate(chosen);
            return;
        }
        int chain = chosen[idx];
        for (EdgeId e : chainEdges[static_cast<std::size_t>(chain)]) {
            mask[static_cast<std::size_t>(e)] = 0;
            dropFrom(idx + 1);
            mask[static_cast<std::size_t>(e)] = 1;
        }
    };
    std::function<void(int, int)> chooseChains = [&](int from, int remaining) {
        dropFrom(0);
        if (remaining == 0) return;
        for (int i = from; i < nChains; ++i) {
            chosen.push_back(i);
            chooseChains(i + 1, remaining - 1);
            chosen.pop_back();
        }
    };
    chooseChains(0, std::min(c, nChains));

    return sol;
}

}  // namespace dmvp
