#include "dmvp/solver_periodic.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "dmvp/matching.hpp"
#include "dmvp/walks.hpp"

namespace dmvp {

// ===== period 2 over trees ====================================================

std::optional<std::vector<P2EdgeType>> infer_p2_types(const NormalizedTvg& tvg) {
    const int m = tvg.edge_count();
    std::vector<P2EdgeType> types(static_cast<std::size_t>(m));
    for (EdgeId e = 0; e < m; ++e) {
        // presence must be constant per parity across the horizon
        std::array<int, 2> value{-1, -1};
        for (Time t = 0; t < tvg.totalSteps; ++t) {
            int q = static_cast<int>(t & 1);
            int present = tvg.edge_present(e, t) ? 1 : 0;
            if (value[static_cast<std::size_t>(q)] == -1)
                value[static_cast<std::size_t>(q)] = present;
            else if (value[static_cast<std::size_t>(q)] != present)
                return std::nullopt;
        }
        bool even = value[0] == 1;
        bool odd = value[1] == 1;
        if (!even && !odd) return std::nullopt;
        types[static_cast<std::size_t>(e)] =
            even ? (odd ? P2EdgeType::Always : P2EdgeType::OnlyEven) : P2EdgeType::OnlyOdd;
    }
    return types;
}

namespace {

bool p2_present(P2EdgeType type, int parity) {
    switch (type) {
        case P2EdgeType::Always: return true;
        case P2EdgeType::OnlyEven: return parity == 0;
        case P2EdgeType::OnlyOdd: return parity == 1;
    }
    return false;
}

// Penalty over the sum of fastest costs when covering a (with-return) element
// multiset from a given start parity: alternating pairs are free, and only
// surplus elements of one parity class pay.
Time pair_penalty(int parity, int n10, int n01) {
    int want = parity == 0 ? n10 : n01;   // class taken fastest at this parity
    int other = parity == 0 ? n01 : n10;
    if (want >= other) return std::max(want - other - 1, 0);
    return other - want;
}

struct P2Element {
    Vertex child = -1;
    EdgeId edge = -1;
    FwClass type = FwClass::FW11;
    Time mw = 0;
    std::array<Time, 2> cw{0, 0};  // with return, per start parity at the parent
    std::array<Time, 2> c{0, 0};   // without return
};

struct P2Tree {
    std::vector<std::vector<Vertex>> children;
    std::vector<EdgeId> edgeToParent;
    std::vector<Vertex> postOrder;
    std::vector<P2EdgeType> types;
};

P2Tree build_rooted(const NormalizedTvg& tvg, const std::vector<P2EdgeType>& types) {
    const int n = tvg.vertex_count();
    P2Tree t;
    t.types = types;
    t.children.assign(static_cast<std::size_t>(n), {});
    t.edgeToParent.assign(static_cast<std::size_t>(n), -1);
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::vector<Vertex> order{tvg.base.start};
    seen[static_cast<std::size_t>(tvg.base.start)] = 1;
    for (std::size_t i = 0; i < order.size(); ++i) {
        Vertex v = order[i];
        for (auto [e, w] : tvg.adj[static_cast<std::size_t>(v)]) {
            if (!seen[static_cast<std::size_t>(w)]) {
                seen[static_cast<std::size_t>(w)] = 1;
                t.children[static_cast<std::size_t>(v)].push_back(w);
                t.edgeToParent[static_cast<std::size_t>(w)] = e;
                order.push_back(w);
            }
        }
    }
    t.postOrder.assign(order.rbegin(), order.rend());
    return t;
}

struct P2State {
    std::vector<SubtreeProfile> profile;      // per vertex
    std::vector<std::vector<P2Element>> elems;  // per vertex, child visit elements
};

// Crossing an edge from parity q: departs immediately if present, else waits
// one step. Returns (elapsed, parity after arrival).
std::pair<Time, int> cross_cost(P2EdgeType type, int q) {
    if (p2_present(type, q)) return {1, q ^ 1};
    return {2, q};
}

P2Element derive_element(Vertex child, EdgeId edge, P2EdgeType type, const SubtreeProfile& sub) {
    P2Element el;
    el.child = child;
    el.edge = edge;
    for (int q = 0; q < 2; ++q) {
        auto [in, qChild] = cross_cost(type, q);
        Time cover = sub.cw[static_cast<std::size_t>(qChild)];
        int qBack = (qChild + static_cast<int>(cover % 2)) & 1;
        auto [out, qEnd] = cross_cost(type, qBack);
        (void)qEnd;
        el.cw[static_cast<std::size_t>(q)] = in + cover + out;
        el.c[static_cast<std::size_t>(q)] = in + sub.c[static_cast<std::size_t>(qChild)];
    }
    el.mw = std::min(el.cw[0], el.cw[1]);
    el.type = el.cw[0] == el.cw[1] ? FwClass::FW11
              : (el.cw[0] < el.cw[1] ? FwClass::FW10 : FwClass::FW01);
    return el;
}

// With-return cost of visiting a set of elements from a start parity; counts
// may exclude one element (the chosen final one).
Time with_return_cost(Time sumMw, int n10, int n01, int parity) {
    return sumMw + pair_penalty(parity, n10, n01);
}

P2State compute_p2_state(const NormalizedTvg& tvg, const P2Tree& tree) {
    const int n = tvg.vertex_count();
    P2State st;
    st.profile.assign(static_cast<std::size_t>(n), {});
    st.elems.assign(static_cast<std::size_t>(n), {});

    for (Vertex v : tree.postOrder) {
        auto& elems = st.elems[static_cast<std::size_t>(v)];
        for (Vertex ch : tree.children[static_cast<std::size_t>(v)]) {
            EdgeId e = tree.edgeToParent[static_cast<std::size_t>(ch)];
            elems.push_back(derive_element(ch, e, tree.types[static_cast<std::size_t>(e)],
                                           st.profile[static_cast<std::size_t>(ch)]));
        }
        SubtreeProfile& p = st.profile[static_cast<std::size_t>(v)];
        if (elems.empty()) {
            p = SubtreeProfile{};
            continue;
        }
        Time sumMw = 0;
        int n10 = 0, n01 = 0;
        for (const P2Element& el : elems) {
            sumMw += el.mw;
            if (el.type == FwClass::FW10) ++n10;
            if (el.type == FwClass::FW01) ++n01;
        }
        for (int q = 0; q < 2; ++q)
            p.cw[static_cast<std::size_t>(q)] = with_return_cost(sumMw, n10, n01, q);
        p.mw = std::min(p.cw[0], p.cw[1]);
        p.type = p.cw[0] == p.cw[1] ? FwClass::FW11
                 : (p.cw[0] < p.cw[1] ? FwClass::FW10 : FwClass::FW01);

        for (int q = 0; q < 2; ++q) {
            Time best = kUnreachable;
            for (const P2Element& el : elems) {
                int m10 = n10 - (el.type == FwClass::FW10 ? 1 : 0);
                int m01 = n01 - (el.type == FwClass::FW01 ? 1 : 0);
                Time others = with_return_cost(sumMw - el.mw, m10, m01, q);
                int qf = (q + static_cast<int>(others % 2)) & 1;
                best = std::min(best, others + el.c[static_cast<std::size_t>(qf)]);
            }
            p.c[static_cast<std::size_t>(q)] = best;
        }
        p.m = std::min(p.c[0], p.c[1]);
    }
    return st;
}

// Emits element visits realizing the with-return penalty formula: alternating
// pairs first, then surplus elements, then the always-fast ones.
std::vector<std::size_t> element_order(const std::vector<P2Element>& elems,
                                       const std::vector<char>& skip, int parity) {
    std::vector<std::size_t> tens, ones, elevens;
    for (std::size_t i = 0; i < elems.size(); ++i) {
        if (skip[i]) continue;
        switch (elems[i].type) {
            case FwClass::FW10: tens.push_back(i); break;
            case FwClass::FW01: ones.push_back(i); break;
            case FwClass::FW11: elevens.push_back(i); break;
        }
    }
    std::vector<std::size_t> order;
    std::size_t a = 0, b = 0;
    while (a < tens.size() && b < ones.size()) {
        if (parity == 0) {
            order.push_back(tens[a++]);
            order.push_back(ones[b++]);
        } else {
            order.push_back(ones[b++]);
            order.push_back(tens[a++]);
        }
    }
    while (a < tens.size()) order.push_back(tens[a++]);
    while (b < ones.size()) order.push_back(ones[b++]);
    order.insert(order.end(), elevens.begin(), elevens.end());
    return order;
}

class P2Assembler {
  public:
    P2Assembler(const NormalizedTvg& tvg, const P2Tree& tree, const P2State& st)
        : tvg_(tvg), tree_(tree), st_(st) {}

    // Returns arrival time, emitting moves along the way.
    Time cover(Vertex v, Time now, bool withReturn, Journey& out) {
        const auto& elems = st_.elems[static_cast<std::size_t>(v)];
        std::vector<char> skip(elems.size(), 0);
        if (elems.empty()) return now;
        if (withReturn) {
            for (std::size_t i : element_order(elems, skip, static_cast<int>(now & 1)))
                now = visit(v, elems[i], now, true, out);
            return now;
        }
        // final element = argmin of the no-return formula at this parity
        int q = static_cast<int>(now & 1);
        Time sumMw = 0;
        int n10 = 0, n01 = 0;
        for (const P2Element& el : elems) {
            sumMw += el.mw;
            if (el.type == FwClass::FW10) ++n10;
            if (el.type == FwClass::FW01) ++n01;
        }
        std::size_t bestIdx = 0;
        Time best = kUnreachable;
        for (std::size_t i = 0; i < elems.size(); ++i) {
            const P2Element& el = elems[i];
            int m10 = n10 - (el.type == FwClass::FW10 ? 1 : 0);
            int m01 = n01 - (el.type == FwClass::FW01 ? 1 : 0);
            Time others = with_return_cost(sumMw - el.mw, m10, m01, q);
            int qf = (q + static_cast<int>(others % 2)) & 1;
            Time total = others + el.c[static_cast<std::size_t>(qf)];
            if (total < best) {
                best = total;
                bestIdx = i;
            }
        }
        skip[bestIdx] = 1;
        for (std::size_t i : element_order(elems, skip, q))
            now = visit(v, elems[i], now, true, out);
        return visit(v, elems[bestIdx], now, false, out);
    }

  private:
    Time visit(Vertex parent, const P2Element& el, Time now, bool withReturn, Journey& out) {
        P2EdgeType type = tree_.types[static_cast<std::size_t>(el.edge)];
        now = cross(el.edge, type, now, out);
        now = cover(el.child, now, withReturn, out);
        if (withReturn) now = cross(el.edge, type, now, out);
        (void)parent;
        return now;
    }

    Time cross(EdgeId e, P2EdgeType type, Time now, Journey& out) {
        if (!p2_present(type, static_cast<int>(now & 1))) ++now;
        out.moves.push_back(Move{e, now});
        return now + 1;
    }

    const NormalizedTvg& tvg_;
    const P2Tree& tree_;
    const P2State& st_;
};

}  // namespace

std::vector<SubtreeProfile> p2_profiles(const NormalizedTvg& tvg) {
    TopologyInfo info = detect_topology(tvg.base);
    if (!info.isTree) throw PreconditionError("underlying graph is not a tree");
    auto types = infer_p2_types(tvg);
    if (!types) throw PreconditionError("instance not consistent with p=2");
    P2Tree tree = build_rooted(tvg, *types);
    return compute_p2_state(tvg, tree).profile;
}

Solution solve_tree_p2(const NormalizedTvg& tvg) {
    TopologyInfo info = detect_topology(tvg.base);
    if (!info.isTree) throw PreconditionError("underlying graph is not a tree");
    auto types = infer_p2_types(tvg);
    if (!types) throw PreconditionError("instance not consistent with p=2");

    const Vertex s = tvg.base.start;
    Solution sol;
    sol.algorithm = "p2-tree";
    if (tvg.vertex_count() == 1) {
        sol.cost = 0;
        sol.journey.startVertex = s;
        return sol;
    }

    P2Tree tree = build_rooted(tvg, *types);
    P2State st = compute_p2_state(tvg, tree);
    sol.stats.statesExpanded = tvg.vertex_count();

    Time cost = st.profile[static_cast<std::size_t>(s)].c[0];
    if (cost > tvg.totalSteps) {  // witness would not fit in the horizon
        sol.cost = kUnreachable;
        return sol;
    }

    Journey journey;
    journey.startVertex = s;
    journey.startTime = 0;
    P2Assembler assembler(tvg, tree, st);
    Time arrival = assembler.cover(s, 0, false, journey);
    if (arrival != cost)
        throw DmvpError("internal: p2 witness cost mismatch (" + std::to_string(arrival) +
                        " vs " + std::to_string(cost) + ")");
    sol.cost = cost;
    sol.journey = std::move(journey);
    return sol;
}

// ===== fixed period over spiders ==============================================

namespace {

// Periodic presence pattern per edge, plus a consistency check of the horizon
// against it.
std::vector<std::vector<char>> periodic_pattern(const NormalizedTvg& tvg, Time p) {
    if (p < 1) throw PreconditionError("period must be positive");
    if (tvg.totalSteps < p)
        throw PreconditionError("horizon shorter than one period");
    const int m = tvg.edge_count();
    std::vector<std::vector<char>> pattern(static_cast<std::size_t>(m),
                                           std::vector<char>(static_cast<std::size_t>(p), 0));
    for (EdgeId e = 0; e < m; ++e) {
        bool any = false;
        for (Time r = 0; r < p; ++r) {
            pattern[static_cast<std::size_t>(e)][static_cast<std::size_t>(r)] =
                tvg.edge_present(e, r) ? 1 : 0;
            any = any || tvg.edge_present(e, r);
        }
        if (!any)
            throw PreconditionError("edge " + std::to_string(e) +
                                    " absent for a full period (not a periodic instance)");
        for (Time t = 0; t < tvg.totalSteps; ++t)
            if (tvg.edge_present(e, t) !=
                (pattern[static_cast<std::size_t>(e)][static_cast<std::size_t>(t % p)] != 0))
                throw PreconditionError("presence not consistent with period " + std::to_string(p));
    }
    return pattern;
}

// Greedy timing of a fixed walk under a periodic pattern; never fails since
// every edge is present at some residue.
Time periodic_walk(const std::vector<std::vector<char>>& pattern, Time p,
                   const NormalizedTvg& tvg, const std::vector<Vertex>& route, Time start,
                   std::vector<Move>* movesOut) {
    Time now = start;
    for (std::size_t i = 0; i + 1 < route.size(); ++i) {
        EdgeId e = find_edge(tvg, route[i], route[i + 1]);
        while (pattern[static_cast<std::size_t>(e)][static_cast<std::size_t>(now % p)] == 0) ++now;
        if (movesOut != nullptr) movesOut->push_back(Move{e, now});
        ++now;
    }
    return now;
}

std::vector<std::vector<Vertex>> spider_arms(const NormalizedTvg& tvg, Vertex center) {
    std::vector<std::vector<Vertex>> arms;
    for (auto [e, w] : tvg.adj[static_cast<std::size_t>(center)]) {
        (void)e;
        std::vector<Vertex> route{center, w};
        Vertex prev = center, cur = w;
        while (tvg.adj[static_cast<std::size_t>(cur)].size() == 2) {
            for (auto [e2, nxt] : tvg.adj[static_cast<std::size_t>(cur)]) {
                (void)e2;
                if (nxt != prev) {
                    route.push_back(nxt);
                    prev = cur;
                    cur = nxt;
                    break;
                }
            }
        }
        arms.push_back(std::move(route));
    }
    return arms;
}

}  // namespace

ArmClassification classify_arms(const NormalizedTvg& tvg, Time p) {
    TopologyInfo info = detect_topology(tvg.base);
    if (!info.isSpider) throw PreconditionError("underlying graph is not a spider");
    auto pattern = periodic_pattern(tvg, p);

    ArmClassification out;
    out.center = *info.center;
    out.armRoutes = spider_arms(tvg, out.center);

    const int arms = static_cast<int>(out.armRoutes.size());
    out.armClassOf.assign(static_cast<std::size_t>(arms), -1);
    out.armFastRound.assign(static_cast<std::size_t>(arms), 0);
    out.armOneWay.assign(static_cast<std::size_t>(arms),
                         std::vector<Time>(static_cast<std::size_t>(p), 0));

    std::map<std::pair<std::vector<Time>, std::vector<Time>>, int> classIndex;
    for (int a = 0; a < arms; ++a) {
        std::vector<Vertex> down = out.armRoutes[static_cast<std::size_t>(a)];
        std::vector<Vertex> round = down;
        round.insert(round.end(), down.rbegin() + 1, down.rend());

        std::vector<Time> roundCost(static_cast<std::size_t>(p)), retRes(static_cast<std::size_t>(p));
        for (Time r = 0; r < p; ++r) {
            Time end = periodic_walk(pattern, p, tvg, round, r, nullptr);
            roundCost[static_cast<std::size_t>(r)] = end - r;
            retRes[static_cast<std::size_t>(r)] = end % p;
            out.armOneWay[static_cast<std::size_t>(a)][static_cast<std::size_t>(r)] =
                periodic_walk(pattern, p, tvg, down, r, nullptr) - r;
        }
        Time fast = *std::min_element(roundCost.begin(), roundCost.end());
        out.armFastRound[static_cast<std::size_t>(a)] = fast;
        std::vector<Time> extra(static_cast<std::size_t>(p));
        for (Time r = 0; r < p; ++r)
            extra[static_cast<std::size_t>(r)] = roundCost[static_cast<std::size_t>(r)] - fast;

        auto key = std::make_pair(extra, retRes);
        auto it = classIndex.find(key);
        if (it == classIndex.end()) {
            ArmClass cls;
            cls.e = extra;
            cls.r = retRes;
            cls.memberCount = 1;
            cls.representative = a;
            classIndex.emplace(key, static_cast<int>(out.classes.size()));
            out.armClassOf[static_cast<std::size_t>(a)] = static_cast<int>(out.classes.size());
            out.classes.push_back(std::move(cls));
        } else {
            out.armClassOf[static_cast<std::size_t>(a)] = it->second;
            ++out.classes[static_cast<std::size_t>(it->second)].memberCount;
        }
    }
    return out;
}

namespace {

struct SpiderPlanResult {
    Time cost = kUnreachable;
    std::vector<int> dispatchClasses;  // class ids in dispatch order
    int finalArm = -1;
};

// DP over (remaining counts per class, residue) minimizing total extra time;
// the per-arm fastest round trips are order-independent.
SpiderPlanResult plan_spider(const ArmClassification& cls, const std::vector<char>& include,
                             Time p, Time startElapsed, const SolverOptions& opts,
                             SolveStats& stats) {
    SpiderPlanResult result;
    const int k = static_cast<int>(cls.classes.size());
    std::vector<int> count(static_cast<std::size_t>(k), 0);
    std::vector<std::vector<int>> members(static_cast<std::size_t>(k));
    Time sumFast = 0;
    int totalArms = 0;
    for (std::size_t a = 0; a < cls.armRoutes.size(); ++a) {
        if (!include[a]) continue;
        int ci = cls.armClassOf[a];
        ++count[static_cast<std::size_t>(ci)];
        members[static_cast<std::size_t>(ci)].push_back(static_cast<int>(a));
        sumFast += cls.armFastRound[a];
        ++totalArms;
    }
    if (totalArms == 0) {
        result.cost = startElapsed;
        return result;
    }

    // mixed-radix state encoding of remaining counts
    std::vector<std::int64_t> stride(static_cast<std::size_t>(k) + 1, 1);
    for (int i = 0; i < k; ++i)
        stride[static_cast<std::size_t>(i) + 1] =
            stride[static_cast<std::size_t>(i)] * (count[static_cast<std::size_t>(i)] + 1);
    std::int64_t vecStates = stride[static_cast<std::size_t>(k)];
    if (vecStates * p > opts.maxSpiderStates)
        throw PreconditionError("spider DP state bound exceeded");

    const Time INF = kUnreachable;
    std::vector<Time> extra(static_cast<std::size_t>(vecStates * p), INF);
    std::vector<std::int8_t> choice(static_cast<std::size_t>(vecStates * p), -1);
    auto slot = [&](std::int64_t vec, Time r) {
        return static_cast<std::size_t>(vec * p + r);
    };

    std::int64_t fullVec = 0;
    for (int i = 0; i < k; ++i)
        fullVec += stride[static_cast<std::size_t>(i)] * count[static_cast<std::size_t>(i)];
    Time r0 = startElapsed % p;
    extra[slot(fullVec, r0)] = 0;

    // remaining counts only decrease; descending vec index is a valid order
    for (std::int64_t vec = fullVec; vec >= 0; --vec) {
        for (Time r = 0; r < p; ++r) {
            Time cur = extra[slot(vec, r)];
            if (!is_reachable(cur)) continue;
            ++stats.statesExpanded;
            for (int ci = 0; ci < k; ++ci) {
                std::int64_t rem =
                    (vec / stride[static_cast<std::size_t>(ci)]) % (count[static_cast<std::size_t>(ci)] + 1);
                if (rem == 0) continue;
                const ArmClass& acl = cls.classes[static_cast<std::size_t>(ci)];
                Time nExtra = cur + acl.e[static_cast<std::size_t>(r)];
                Time nr = acl.r[static_cast<std::size_t>(r)];
                std::int64_t nvec = vec - stride[static_cast<std::size_t>(ci)];
                ++stats.candidatesExamined;
                if (nExtra < extra[slot(nvec, nr)]) {
                    extra[slot(nvec, nr)] = nExtra;
                    choice[slot(nvec, nr)] = static_cast<std::int8_t>(ci);
                }
            }
        }
    }

    // one arm left: take it without return, choosing the cheapest member
    Time best = kUnreachable;
    std::int64_t bestVec = -1;
    Time bestR = 0;
    int bestArm = -1;
    for (int ci = 0; ci < k; ++ci) {
        if (count[static_cast<std::size_t>(ci)] == 0) continue;
        std::int64_t vec = stride[static_cast<std::size_t>(ci)];
        for (Time r = 0; r < p; ++r) {
            Time e = extra[slot(vec, r)];
            if (!is_reachable(e)) continue;
            for (int arm : members[static_cast<std::size_t>(ci)]) {
                Time total = startElapsed + sumFast - cls.armFastRound[static_cast<std::size_t>(arm)] +
                             e + cls.armOneWay[static_cast<std::size_t>(arm)][static_cast<std::size_t>(r)];
                if (total < best) {
                    best = total;
                    bestVec = vec;
                    bestR = r;
                    bestArm = arm;
                }
            }
        }
    }
    if (bestArm == -1) return result;

    result.cost = best;
    result.finalArm = bestArm;
    // trace dispatches backwards from (bestVec, bestR) to the full vector
    std::vector<int> rev;
    std::int64_t vec = bestVec;
    Time r = bestR;
    while (vec != fullVec || r != r0) {
        int ci = choice[slot(vec, r)];
        if (ci < 0) break;  // reached the start state
        rev.push_back(ci);
        // invert: previous state had one more of class ci and residue q with r_ci(q) == r
        std::int64_t pvec = vec + stride[static_cast<std::size_t>(ci)];
        const ArmClass& acl = cls.classes[static_cast<std::size_t>(ci)];
        Time pq = -1;
        for (Time q = 0; q < p; ++q) {
            if (acl.r[static_cast<std::size_t>(q)] != r) continue;
            if (!is_reachable(extra[slot(pvec, q)])) continue;
            if (extra[slot(pvec, q)] + acl.e[static_cast<std::size_t>(q)] == extra[slot(vec, r)]) {
                pq = q;
                break;
            }
        }
        if (pq < 0) throw DmvpError("internal: spider DP trace failed");
        vec = pvec;
        r = pq;
    }
    std::reverse(rev.begin(), rev.end());
    result.dispatchClasses = std::move(rev);
    return result;
}

}  // namespace

Solution solve_spider_fixed_p(const NormalizedTvg& tvg, Time p, const SolverOptions& opts) {
    if (p > opts.maxPeriod)
        throw PreconditionError("period " + std::to_string(p) + " exceeds bound " +
                                std::to_string(opts.maxPeriod));
    TopologyInfo info = detect_topology(tvg.base);
    if (!info.isSpider) throw PreconditionError("underlying graph is not a spider");

    Solution sol;
    sol.algorithm = "spider-p";
    const Vertex s = tvg.base.start;
    if (tvg.vertex_count() == 1) {
        sol.cost = 0;
        sol.journey.startVertex = s;
        return sol;
    }

    ArmClassification cls = classify_arms(tvg, p);
    auto pattern = periodic_pattern(tvg, p);
    const Vertex center = cls.center;

    struct Plan {
        Time cost = kUnreachable;
        std::vector<Move> prefix;
        Time prefixEnd = 0;
        std::vector<char> include;
        SpiderPlanResult plan;
    };

    auto make_plan = [&](const std::vector<Vertex>& prefixRoute,
                         const std::vector<char>& include) {
        Plan plan;
        plan.include = include;
        std::vector<Move> moves;
        Time end = prefixRoute.empty()
                       ? 0
                       : periodic_walk(pattern, p, tvg, prefixRoute, 0, &moves);
        plan.prefix = std::move(moves);
        plan.prefixEnd = end;
        plan.plan = plan_spider(cls, include, p, end, opts, sol.stats);
        plan.cost = plan.plan.cost;
        return plan;
    };

    std::vector<char> all(cls.armRoutes.size(), 1);
    std::vector<Plan> plans;

    if (s == center) {
        plans.push_back(make_plan({}, all));
    } else {
        // locate s on its arm
        int ownArm = -1;
        std::size_t posOnArm = 0;
        for (std::size_t a = 0; a < cls.armRoutes.size() && ownArm == -1; ++a) {
            const auto& route = cls.armRoutes[a];
            for (std::size_t i = 1; i < route.size(); ++i)
                if (route[i] == s) {
                    ownArm = static_cast<int>(a);
                    posOnArm = i;
                    break;
                }
        }
        if (ownArm == -1) throw DmvpError("internal: start not found on any arm");
        const auto& route = cls.armRoutes[static_cast<std::size_t>(ownArm)];
        bool atLeaf = posOnArm + 1 == route.size();

        // go to the own leaf first, then to the center
        if (!atLeaf) {
            std::vector<Vertex> downUp(route.begin() + static_cast<std::ptrdiff_t>(posOnArm),
                                       route.end());
            for (std::size_t i = route.size() - 1; i-- > 0;) downUp.push_back(route[i]);
            std::vector<char> include = all;
            include[static_cast<std::size_t>(ownArm)] = 0;
            plans.push_back(make_plan(downUp, include));
        }
        // or head straight to the center
        std::vector<Vertex> up(route.begin(), route.begin() + static_cast<std::ptrdiff_t>(posOnArm) + 1);
        std::reverse(up.begin(), up.end());
        std::vector<char> include = all;
        if (atLeaf) include[static_cast<std::size_t>(ownArm)] = 0;
        plans.push_back(make_plan(up, include));
    }

    const Plan* best = nullptr;
    for (const Plan& plan : plans)
        if (best == nullptr || plan.cost < best->cost) best = &plan;
    if (best == nullptr || !is_reachable(best->cost)) {
        sol.cost = kUnreachable;
        return sol;
    }
    if (best->cost > tvg.totalSteps) {  // does not fit in the horizon
        sol.cost = kUnreachable;
        return sol;
    }

    // materialize the journey: prefix, round trips per dispatch, final one-way
    Journey journey;
    journey.startVertex = s;
    journey.startTime = 0;
    journey.moves = best->prefix;
    Time now = best->prefixEnd;

    std::vector<std::vector<int>> remaining(cls.classes.size());
    for (std::size_t a = 0; a < cls.armRoutes.size(); ++a) {
        if (!best->include[a]) continue;
        if (static_cast<int>(a) == best->plan.finalArm) continue;
        remaining[static_cast<std::size_t>(cls.armClassOf[a])].push_back(static_cast<int>(a));
    }
    for (int ci : best->plan.dispatchClasses) {
        auto& pool = remaining[static_cast<std::size_t>(ci)];
        if (pool.empty()) throw DmvpError("internal: spider dispatch pool empty");
        int arm = pool.front();
        pool.erase(pool.begin());
        const auto& down = cls.armRoutes[static_cast<std::size_t>(arm)];
        std::vector<Vertex> round = down;
        round.insert(round.end(), down.rbegin() + 1, down.rend());
        now = periodic_walk(pattern, p, tvg, round, now, &journey.moves);
    }
    if (best->plan.finalArm >= 0)
        now = periodic_walk(pattern, p, tvg, cls.armRoutes[static_cast<std::size_t>(best->plan.finalArm)],
                            now, &journey.moves);
    if (now != best->cost)
        throw DmvpError("internal: spider witness cost mismatch");
    sol.cost = best->cost;
    sol.journey = std::move(journey);
    return sol;
}

// ===== combs ==================================================================

Solution solve_comb_online(const NormalizedTvg& tvg) {
    TopologyInfo info = detect_topology(tvg.base);
    if (!info.isComb) throw PreconditionError("underlying graph is not a comb");
    const int n = tvg.vertex_count();
    const Vertex s = tvg.base.start;

    Solution sol;
    sol.algorithm = "comb-online";
    sol.stats.candidatesExamined = 1;
    if (n == 1) {
        sol.cost = 0;
        sol.journey.startVertex = s;
        return sol;
    }

    auto adj = tvg.adj;
    auto degree = [&](Vertex v) { return adj[static_cast<std::size_t>(v)].size(); };
    // The start must be a backbone end: a leaf, or a degree-2 vertex whose
    // second branch is its own arm (every junction on the other side).
    if (degree(s) > 2)
        throw PreconditionError("start is not a backbone end");

    std::vector<Vertex> d3;
    for (Vertex v = 0; v < n; ++v)
        if (degree(v) == 3) d3.push_back(v);

    // backbone: path from s through every degree-3 vertex, then down the longer
    // remaining branch of the last one
    std::vector<Vertex> backbone;
    std::vector<std::vector<Vertex>> armAt(static_cast<std::size_t>(n));
    auto walkToLeaf = [&](Vertex from, Vertex via) {
        std::vector<Vertex> path{from, via};
        Vertex prev = from, cur = via;
        while (degree(cur) == 2) {
            for (auto [e, w] : adj[static_cast<std::size_t>(cur)]) {
                (void)e;
                if (w != prev) {
                    path.push_back(w);
                    prev = cur;
                    cur = w;
                    break;
                }
            }
        }
        return path;  // ends at a leaf or a degree-3 vertex
    };

    if (d3.empty()) {
        backbone = info.pathOrder;
        if (backbone.front() != s) std::reverse(backbone.begin(), backbone.end());
        if (backbone.front() != s) throw PreconditionError("start is not a backbone end");
    } else {
        // order degree-3 vertices by distance from s; all must lie on one path
        Vertex last = d3.front();
        std::size_t bestLen = 0;
        for (Vertex v : d3) {
            std::size_t len = tree_path(n, tvg.base.edges, s, v).size();
            if (len > bestLen) {
                bestLen = len;
                last = v;
            }
        }
        backbone = tree_path(n, tvg.base.edges, s, last);
        std::vector<char> onPath(static_cast<std::size_t>(n), 0);
        for (Vertex v : backbone) onPath[static_cast<std::size_t>(v)] = 1;
        for (Vertex v : d3)
            if (!onPath[static_cast<std::size_t>(v)])
                throw PreconditionError("start is not a backbone end");

        // extend past the last junction along the longer branch; the shorter
        // hangs as its arm
        Vertex prevOnPath = backbone[backbone.size() - 2];
        std::vector<std::vector<Vertex>> branches;
        for (auto [e, w] : adj[static_cast<std::size_t>(last)]) {
            (void)e;
            if (w != prevOnPath) branches.push_back(walkToLeaf(last, w));
        }
        if (branches.size() != 2) throw DmvpError("internal: comb tail expected two branches");
        std::size_t tail = branches[0].size() >= branches[1].size() ? 0 : 1;
        if (branches[0].size() == branches[1].size() && branches[1][1] < branches[0][1]) tail = 1;
        armAt[static_cast<std::size_t>(last)] =
            std::vector<Vertex>(branches[1 - tail].begin() + 1, branches[1 - tail].end());
        backbone.insert(backbone.end(), branches[tail].begin() + 1, branches[tail].end());
    }

    std::vector<char> onBackbone(static_cast<std::size_t>(n), 0);
    for (Vertex v : backbone) onBackbone[static_cast<std::size_t>(v)] = 1;
    for (std::size_t i = 0; i < backbone.size(); ++i) {
        Vertex v = backbone[i];
        if (!armAt[static_cast<std::size_t>(v)].empty()) continue;
        for (auto [e, w] : adj[static_cast<std::size_t>(v)]) {
            (void)e;
            if (onBackbone[static_cast<std::size_t>(w)]) continue;
            if ((i > 0 && w == backbone[i - 1]) ||
                (i + 1 < backbone.size() && w == backbone[i + 1]))
                continue;
            auto arm = walkToLeaf(v, w);
            armAt[static_cast<std::size_t>(v)] = std::vector<Vertex>(arm.begin() + 1, arm.end());
        }
    }

    // the online policy: arms first when standing at their junction
    Journey journey;
    journey.startVertex = s;
    journey.startTime = 0;
    Time now = 0;
    auto greedy = [&](Vertex from, Vertex to) -> bool {
        EdgeId e = find_edge(tvg, from, to);
        while (now < tvg.totalSteps && !tvg.edge_present(e, now)) ++now;
        if (now >= tvg.totalSteps) return false;
        journey.moves.push_back(Move{e, now});
        ++now;
        return true;
    };
    for (std::size_t i = 0; i < backbone.size(); ++i) {
        Vertex v = backbone[i];
        const auto& arm = armAt[static_cast<std::size_t>(v)];
        if (!arm.empty()) {
            Vertex cur = v;
            for (Vertex w : arm) {
                if (!greedy(cur, w)) { sol.cost = kUnreachable; return sol; }
                cur = w;
            }
            for (std::size_t j = arm.size(); j-- > 0;) {
                Vertex back = j == 0 ? v : arm[j - 1];
                if (!greedy(arm[j], back)) { sol.cost = kUnreachable; return sol; }
            }
        }
        if (i + 1 < backbone.size()) {
            if (!greedy(v, backbone[i + 1])) { sol.cost = kUnreachable; return sol; }
        }
    }
    sol.cost = now;
    sol.journey = std::move(journey);
    return sol;
}

// ===== uniform spiders ========================================================

NoWaitDecision decide_uniform_spider_no_wait(const NormalizedTvg& tvg) {
    TopologyInfo info = detect_topology(tvg.base);
    if (!info.isSpider) throw PreconditionError("underlying graph is not a spider");
    const Vertex s = tvg.base.start;

    NoWaitDecision out;
    if (tvg.vertex_count() == 1) {
        out.feasible = true;
        out.budget = 0;
        out.witness = Journey{s, 0, {}};
        return out;
    }

    Vertex center = *info.center;
    auto arms = spider_arms(tvg, center);
    const Time l = static_cast<Time>(arms.front().size()) - 1;
    for (const auto& arm : arms)
        if (static_cast<Time>(arm.size()) - 1 != l)
            throw PreconditionError("arms not uniform");

    // locate the start
    Time d = 0;
    int ownArm = -1;
    if (s != center) {
        for (std::size_t a = 0; a < arms.size() && ownArm == -1; ++a)
            for (std::size_t i = 1; i < arms[a].size(); ++i)
                if (arms[a][i] == s) {
                    ownArm = static_cast<int>(a);
                    d = static_cast<Time>(i);
                    break;
                }
        if (static_cast<int>(arms.size()) < 2)
            throw PreconditionError("off-center start needs at least two arms");
    }

    const Time armCount = static_cast<Time>(arms.size());
    out.budget = 2 * armCount * l - l - d;

    Journey journey;
    journey.startVertex = s;
    journey.startTime = 0;
    Time now = 0;
    auto takeExact = [&](Vertex from, Vertex to) -> bool {
        EdgeId e = find_edge(tvg, from, to);
        if (now >= tvg.totalSteps || !tvg.edge_present(e, now)) return false;
        journey.moves.push_back(Move{e, now});
        ++now;
        return true;
    };

    if (s != center) {
        // the own leaf must come first, wait-free
        const auto& route = arms[static_cast<std::size_t>(ownArm)];
        for (std::size_t i = static_cast<std::size_t>(d); i + 1 < route.size(); ++i)
            if (!takeExact(route[i], route[i + 1])) return out;
        for (std::size_t i = route.size() - 1; i-- > 0;)
            if (!takeExact(route[i + 1], route[i])) return out;
    }

    std::vector<int> rest;
    for (int a = 0; a < static_cast<int>(arms.size()); ++a)
        if (a != ownArm) rest.push_back(a);
    const int alpha = static_cast<int>(rest.size());
    if (alpha == 0) {
        out.feasible = true;
        out.witness = journey;
        return out;
    }

    // arm i fits block j iff the wait-free round trip (one-way for the last
    // block) is fully present at the block's fixed times
    auto fits = [&](int arm, int block) {
        const auto& route = arms[static_cast<std::size_t>(rest[static_cast<std::size_t>(arm)])];
        Time t = now + static_cast<Time>(block) * 2 * l;
        bool lastBlock = block == alpha - 1;
        for (std::size_t i = 0; i + 1 < route.size(); ++i, ++t) {
            EdgeId e = find_edge(tvg, route[i], route[i + 1]);
            if (t >= tvg.totalSteps || !tvg.edge_present(e, t)) return false;
        }
        if (lastBlock) return true;
        for (std::size_t i = route.size() - 1; i-- > 0; ++t) {
            EdgeId e = find_edge(tvg, route[i], route[i + 1]);
            if (t >= tvg.totalSteps || !tvg.edge_present(e, t)) return false;
        }
        return true;
    };

    BipartiteMatcher matcher(alpha, alpha);
    for (int a = 0; a < alpha; ++a)
        for (int b = 0; b < alpha; ++b)
            if (fits(a, b)) matcher.add_edge(a, b);
    if (matcher.solve() != alpha) return out;

    for (int b = 0; b < alpha; ++b) {
        const auto& route = arms[static_cast<std::size_t>(rest[static_cast<std::size_t>(matcher.match_of_right(b))])];
        for (std::size_t i = 0; i + 1 < route.size(); ++i)
            if (!takeExact(route[i], route[i + 1])) throw DmvpError("internal: matched block unusable");
        if (b == alpha - 1) break;
        for (std::size_t i = route.size() - 1; i-- > 0;)
            if (!takeExact(route[i + 1], route[i])) throw DmvpError("internal: matched block unusable");
    }

    if (journey.temporal_length() != out.budget)
        throw DmvpError("internal: no-wait witness is not budget-exact");
    out.feasible = true;
    out.witness = std::move(journey);
    return out;
}

}  // namespace dmvp
