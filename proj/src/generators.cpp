#include "dmvp/generators.hpp"

#include <algorithm>
#include <set>

#include "dmvp/rng.hpp"

namespace dmvp {

namespace {

Edge mk_edge(Vertex a, Vertex b) { return a < b ? Edge{a, b} : Edge{b, a}; }

std::vector<EdgeId> sorted(std::vector<EdgeId> ids) {
    std::sort(ids.begin(), ids.end());
    return ids;
}

}  // namespace

TvgInstance gen_setcover_star(int universeSize, const std::vector<std::vector<int>>& sets, int k) {
    const int m = universeSize;
    const int n = static_cast<int>(sets.size());
    if (m < 1) throw PreconditionError("universe must be nonempty");
    if (n < 1) throw PreconditionError("set family must be nonempty");
    if (k < 1 || k > n) throw PreconditionError("k must be in [1, |S|]");
    for (const auto& s : sets) {
        if (s.empty()) throw PreconditionError("sets must be nonempty");
        for (int el : s)
            if (el < 1 || el > m) throw PreconditionError("set element out of universe range");
    }

    TvgInstance inst;
    inst.n = 1 + m + n + 1;  // center, elements, set points, check point
    inst.start = 0;
    // edge j-1 = (c, element j); edge m+i-1 = (c, set point i); edge m+n = (c, p0)
    for (int j = 1; j <= m; ++j) inst.edges.push_back(mk_edge(0, j));
    for (int i = 1; i <= n; ++i) inst.edges.push_back(mk_edge(0, m + i));
    inst.edges.push_back(mk_edge(0, m + n + 1));

    auto elementEdge = [&](int j) { return j - 1; };
    auto setEdge = [&](int i) { return m + i - 1; };
    const EdgeId checkEdge = m + n;

    for (int i = 1; i <= n; ++i) {
        inst.snapshots.push_back(Snapshot{1, {setEdge(i)}});
        std::vector<EdgeId> take;
        for (int el : sets[static_cast<std::size_t>(i - 1)]) take.push_back(elementEdge(el));
        inst.snapshots.push_back(
            Snapshot{2 * static_cast<Time>(sets[static_cast<std::size_t>(i - 1)].size()),
                     sorted(std::move(take))});
        inst.snapshots.push_back(Snapshot{1, {setEdge(i)}});
    }
    inst.snapshots.push_back(Snapshot{2, {checkEdge}});
    std::vector<EdgeId> finish;
    for (int i = 1; i <= n; ++i) finish.push_back(setEdge(i));
    inst.snapshots.push_back(Snapshot{2 * static_cast<Time>(k) - 1, sorted(std::move(finish))});

    inst.hint = ClassHint{TvgClassKind::R, std::nullopt, std::nullopt};
    inst.check();
    return inst;
}

TvgInstance gen_setcover_comb(int universeSize, const std::vector<std::vector<int>>& sets, int k) {
    const int m = universeSize;
    const int n = static_cast<int>(sets.size());
    if (m < 1) throw PreconditionError("universe must be nonempty");
    if (n < 1) throw PreconditionError("set family must be nonempty");
    if (k < 1 || k > n) throw PreconditionError("k must be in [1, |S|]");
    for (const auto& s : sets) {
        if (s.empty()) throw PreconditionError("sets must be nonempty");
        for (int el : s)
            if (el < 1 || el > m) throw PreconditionError("set element out of universe range");
    }

    TvgInstance inst;
    const int backboneLen = m + n + 2;  // b_0 .. b_{m+n+1}
    inst.n = backboneLen + m + n + 2;
    inst.start = 0;  // b_0
    auto bb = [&](int i) { return i; };
    auto elementTooth = [&](int j) { return backboneLen + (j - 1); };
    auto setTooth = [&](int i) { return backboneLen + m + (i - 1); };
    const Vertex p0 = backboneLen + m + n;
    const Vertex pLast = backboneLen + m + n + 1;

    std::vector<EdgeId> backbone;
    for (int i = 0; i <= m + n; ++i) {
        backbone.push_back(static_cast<EdgeId>(inst.edges.size()));
        inst.edges.push_back(mk_edge(bb(i), bb(i + 1)));
    }
    std::vector<EdgeId> elementEdge(static_cast<std::size_t>(m) + 1);
    for (int j = 1; j <= m; ++j) {
        elementEdge[static_cast<std::size_t>(j)] = static_cast<EdgeId>(inst.edges.size());
        inst.edges.push_back(mk_edge(bb(j), elementTooth(j)));
    }
    std::vector<EdgeId> setEdge(static_cast<std::size_t>(n) + 1);
    for (int i = 1; i <= n; ++i) {
        setEdge[static_cast<std::size_t>(i)] = static_cast<EdgeId>(inst.edges.size());
        inst.edges.push_back(mk_edge(bb(m + i), setTooth(i)));
    }
    const EdgeId p0Edge = static_cast<EdgeId>(inst.edges.size());
    inst.edges.push_back(mk_edge(bb(0), p0));
    const EdgeId pLastEdge = static_cast<EdgeId>(inst.edges.size());
    inst.edges.push_back(mk_edge(bb(m + n + 1), pLast));

    auto withBackbone = [&](std::vector<EdgeId> extra) {
        extra.insert(extra.end(), backbone.begin(), backbone.end());
        return sorted(std::move(extra));
    };

    for (int i = 1; i <= n; ++i) {
        inst.snapshots.push_back(Snapshot{static_cast<Time>(m + n), withBackbone({})});
        inst.snapshots.push_back(Snapshot{1, withBackbone({setEdge[static_cast<std::size_t>(i)]})});
        std::vector<EdgeId> take;
        for (int el : sets[static_cast<std::size_t>(i - 1)])
            take.push_back(elementEdge[static_cast<std::size_t>(el)]);
        inst.snapshots.push_back(Snapshot{3 * static_cast<Time>(m), withBackbone(std::move(take))});
        inst.snapshots.push_back(Snapshot{1, withBackbone({setEdge[static_cast<std::size_t>(i)]})});
    }
    inst.snapshots.push_back(Snapshot{static_cast<Time>(m + n), withBackbone({})});
    inst.snapshots.push_back(Snapshot{2, {p0Edge}});
    std::vector<EdgeId> finish{pLastEdge};
    for (int i = 1; i <= n; ++i) finish.push_back(setEdge[static_cast<std::size_t>(i)]);
    inst.snapshots.push_back(
        Snapshot{static_cast<Time>(m + n + 2 + 2 * k), withBackbone(std::move(finish))});

    inst.hint = ClassHint{TvgClassKind::R, std::nullopt, std::nullopt};
    inst.check();
    return inst;
}

namespace {

// Shared machinery for the 3-partition gadgets: per-step presence from arm
// modes. Flashing is phase-locked to absolute time (one presence every delta
// steps), which keeps the observed recurrence bound at exactly delta across
// mode boundaries; the carrying front is anchored where carrying begins.
enum class ArmMode { Steady, Flashing, Carrying };

struct ModeArm {
    std::vector<EdgeId> edges;  // by depth from the attachment vertex
    std::vector<ArmMode> modePerSegment;
};

TvgInstance emit_mode_instance(TvgInstance skeleton, const std::vector<Time>& segmentDurations,
                               const std::vector<ModeArm>& arms, Time delta) {
    std::vector<Time> segStart(segmentDurations.size() + 1, 0);
    for (std::size_t i = 0; i < segmentDurations.size(); ++i)
        segStart[i + 1] = segStart[i] + segmentDurations[i];
    const Time total = segStart.back();

    std::vector<std::vector<char>> active(static_cast<std::size_t>(total),
                                          std::vector<char>(skeleton.edges.size(), 0));

    for (const ModeArm& arm : arms) {
        // group consecutive segments with one mode into a single anchored run
        std::size_t seg = 0;
        while (seg < segmentDurations.size()) {
            std::size_t end = seg;
            while (end + 1 < segmentDurations.size() &&
                   arm.modePerSegment[end + 1] == arm.modePerSegment[seg])
                ++end;
            const ArmMode mode = arm.modePerSegment[seg];
            const Time runStart = segStart[seg];
            const Time runEnd = segStart[end + 1];
            for (Time t = runStart; t < runEnd; ++t) {
                bool flash = (t % delta) == delta - 1;
                for (std::size_t depth = 0; depth < arm.edges.size(); ++depth) {
                    bool present = false;
                    switch (mode) {
                        case ArmMode::Steady: present = true; break;
                        case ArmMode::Flashing: present = flash; break;
                        case ArmMode::Carrying:
                            present = flash || (t - runStart == static_cast<Time>(depth));
                            break;
                    }
                    if (present)
                        active[static_cast<std::size_t>(t)]
                              [static_cast<std::size_t>(arm.edges[depth])] = 1;
                }
            }
            seg = end + 1;
        }
    }

    // merge consecutive identical step sets into snapshots
    for (Time t = 0; t < total; ++t) {
        if (!skeleton.snapshots.empty() &&
            active[static_cast<std::size_t>(t)] == active[static_cast<std::size_t>(t - 1)]) {
            ++skeleton.snapshots.back().duration;
            continue;
        }
        Snapshot snap;
        snap.duration = 1;
        for (EdgeId e = 0; e < static_cast<EdgeId>(skeleton.edges.size()); ++e)
            if (active[static_cast<std::size_t>(t)][static_cast<std::size_t>(e)])
                snap.active.push_back(e);
        skeleton.snapshots.push_back(std::move(snap));
    }
    skeleton.check();
    return skeleton;
}

}  // namespace

TvgInstance gen_3partition_spider(const std::vector<Time>& numbers, Time delta,
                                  std::optional<Time> longArmLen) {
    if (numbers.size() < 3 || numbers.size() % 3 != 0)
        throw PreconditionError("need 3m positive integers");
    for (Time s : numbers)
        if (s < 1) throw PreconditionError("integers must be positive");
    if (delta < 2) throw PreconditionError("delta must be at least 2");
    const Time m = static_cast<Time>(numbers.size()) / 3;
    Time M = 0;
    for (Time s : numbers) M += s;
    if (M % m != 0) throw PreconditionError("sum not divisible by the group count");
    const Time B = M / m;
    const Time k = longArmLen.value_or(2 * M + 2 * m + 1);
    if (k < 1) throw PreconditionError("long arm length must be positive");

    TvgInstance inst;
    inst.start = 0;  // center
    inst.n = static_cast<int>(1 + M + m + k);

    // arms in order: the 3m number arms, m checkpoints, the long arm
    std::vector<ModeArm> arms;
    Vertex nextVertex = 1;
    auto addArm = [&](Time len) {
        ModeArm arm;
        Vertex prev = 0;
        for (Time i = 0; i < len; ++i) {
            arm.edges.push_back(static_cast<EdgeId>(inst.edges.size()));
            inst.edges.push_back(mk_edge(prev, nextVertex));
            prev = nextVertex++;
        }
        arms.push_back(std::move(arm));
    };
    for (Time s : numbers) addArm(s);
    for (Time i = 0; i < m; ++i) addArm(1);
    addArm(k);

    // segments: m x (take, check), then finish
    std::vector<Time> durations;
    const std::size_t segments = static_cast<std::size_t>(2 * m + 1);
    for (Time i = 0; i < m; ++i) {
        durations.push_back(2 * B);
        durations.push_back(2);
    }
    durations.push_back(k);

    const std::size_t numberArms = numbers.size();
    const std::size_t checkArms = static_cast<std::size_t>(m);
    for (std::size_t a = 0; a < arms.size(); ++a) {
        auto& modes = arms[a].modePerSegment;
        modes.assign(segments, ArmMode::Flashing);
        for (std::size_t seg = 0; seg + 1 < segments; ++seg) {
            bool isTake = seg % 2 == 0;
            if (a < numberArms && isTake) modes[seg] = ArmMode::Steady;
            if (a >= numberArms && a < numberArms + checkArms && !isTake)
                modes[seg] = ArmMode::Steady;
        }
        if (a == numberArms + checkArms) modes[segments - 1] = ArmMode::Carrying;
    }

    inst.hint = ClassHint{TvgClassKind::B, delta, std::nullopt};
    return emit_mode_instance(std::move(inst), durations, arms, delta);
}

TvgInstance gen_3partition_comb(const std::vector<Time>& numbers, Time delta,
                                std::optional<Time> longArmLen) {
    if (numbers.size() < 3 || numbers.size() % 3 != 0)
        throw PreconditionError("need 3m positive integers");
    for (Time s : numbers)
        if (s < 1) throw PreconditionError("integers must be positive");
    if (delta < 2) throw PreconditionError("delta must be at least 2");
    const Time m = static_cast<Time>(numbers.size()) / 3;
    if (m % 2 != 0) throw PreconditionError("group count m must be even");
    Time M = 0;
    for (Time s : numbers) M += s;
    if (M % m != 0) throw PreconditionError("sum not divisible by the group count");
    const Time B = M / m;
    const Time l = 7 * m * m / 2 - 3 * m / 2 + 4;
    const Time k = longArmLen.value_or(2 * l * B * m + 7 * m * m / 2 - m + 4);
    if (k < 1) throw PreconditionError("long arm length must be positive");

    TvgInstance inst;
    const Time backboneCount = 4 * m + 1;  // b_1 .. b_{4m+1}
    auto bb = [&](Time i) { return static_cast<Vertex>(i - 1); };
    inst.start = bb(7 * m / 2);

    Vertex nextVertex = static_cast<Vertex>(backboneCount);
    std::vector<ModeArm> arms;

    // the backbone participates in the schedule like an arm (flashes in finish)
    ModeArm backboneArm;
    for (Time i = 1; i < backboneCount; ++i) {
        backboneArm.edges.push_back(static_cast<EdgeId>(inst.edges.size()));
        inst.edges.push_back(mk_edge(bb(i), bb(i + 1)));
    }

    auto addArm = [&](Vertex attach, Time len) {
        ModeArm arm;
        Vertex prev = attach;
        for (Time i = 0; i < len; ++i) {
            arm.edges.push_back(static_cast<EdgeId>(inst.edges.size()));
            inst.edges.push_back(mk_edge(prev, nextVertex));
            prev = nextVertex++;
        }
        arms.push_back(std::move(arm));
    };
    for (std::size_t i = 1; i <= numbers.size(); ++i)
        addArm(bb(m / 2 + static_cast<Time>(i)), l * numbers[i - 1]);
    for (Time i = 1; i <= m; ++i) {
        Time pos = (i % 2 == 1) ? (m / 2 - (i - 1) / 2) : (7 * m / 2 + i / 2);
        addArm(bb(pos), 1);
    }
    addArm(bb(4 * m + 1), k);

    // segments: m takes interleaved with check(1..m-1), then finalcheck, finish
    std::vector<Time> durations;
    for (Time j = 1; j < m; ++j) {
        durations.push_back(2 * l * B + 3 * m);
        durations.push_back(j + (j % 2) + 2);
    }
    durations.push_back(2 * l * B + 3 * m);
    durations.push_back(m / 2 + 2);
    durations.push_back(k);
    const std::size_t segments = durations.size();

    const std::size_t numberArms = numbers.size();
    const std::size_t checkArms = static_cast<std::size_t>(m);
    for (std::size_t a = 0; a < arms.size(); ++a) {
        auto& modes = arms[a].modePerSegment;
        modes.assign(segments, ArmMode::Flashing);
        for (std::size_t seg = 0; seg + 1 < segments; ++seg) {
            bool isTake = (seg % 2 == 0) && seg < segments - 2;
            if (a < numberArms && isTake) modes[seg] = ArmMode::Steady;
            if (a >= numberArms && a < numberArms + checkArms) {
                // check(j) occupies segment 2j-1; finalcheck is segment count-2
                std::size_t checkIdx = a - numberArms;  // c_{checkIdx+1}
                bool isFinalCheck = seg == segments - 2 && checkIdx + 1 == static_cast<std::size_t>(m);
                bool isCheckJ = seg % 2 == 1 && seg == 2 * checkIdx + 1;
                if (isFinalCheck || isCheckJ) modes[seg] = ArmMode::Steady;
            }
        }
        if (a == numberArms + checkArms) modes[segments - 1] = ArmMode::Carrying;
    }
    backboneArm.modePerSegment.assign(segments, ArmMode::Steady);
    backboneArm.modePerSegment[segments - 1] = ArmMode::Flashing;

    std::vector<ModeArm> all = std::move(arms);
    all.push_back(std::move(backboneArm));
    inst.n = static_cast<int>(nextVertex);
    inst.hint = ClassHint{TvgClassKind::B, delta, std::nullopt};
    return emit_mode_instance(std::move(inst), durations, all, delta);
}

TvgInstance gen_hamiltonian_p2(int n, const std::vector<Edge>& graph, Vertex v0,
                               std::optional<Time> horizon) {
    if (n < 4 || n % 2 != 0) throw PreconditionError("need an even vertex count of at least 4");
    if (v0 < 0 || v0 >= n) throw PreconditionError("v0 out of range");
    for (const Edge& e : graph)
        if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n || e.u == e.v)
            throw PreconditionError("graph edge out of range");

    TvgInstance inst;
    inst.n = 2 * n;
    inst.start = v0;
    auto ringVertex = [&](int i) { return static_cast<Vertex>(n + ((i % n + n) % n)); };

    std::vector<EdgeId> evenActive, oddActive;
    auto add = [&](Edge e, bool evenOnly, bool oddOnly) {
        EdgeId id = static_cast<EdgeId>(inst.edges.size());
        inst.edges.push_back(mk_edge(e.u, e.v));
        if (!oddOnly) evenActive.push_back(id);
        if (!evenOnly) oddActive.push_back(id);
    };
    for (const Edge& e : graph) add(e, false, false);  // type 11
    for (int i = 0; i < n; ++i) {
        bool evenIdx = i % 2 == 0;
        // (v_i, c_i): odd times when i even, even times when i odd
        add(Edge{static_cast<Vertex>(i), ringVertex(i)}, !evenIdx, evenIdx);
        // (v_i, c_{i+1}) and (c_i, c_{i+1}): even times when i even
        add(Edge{static_cast<Vertex>(i), ringVertex(i + 1)}, evenIdx, !evenIdx);
        add(Edge{ringVertex(i), ringVertex(i + 1)}, evenIdx, !evenIdx);
    }

    Time steps = horizon.value_or(4 * static_cast<Time>(inst.n));
    if (steps % 2 != 0) ++steps;
    for (Time t = 0; t < steps; t += 2) {
        inst.snapshots.push_back(Snapshot{1, sorted(evenActive)});
        inst.snapshots.push_back(Snapshot{1, sorted(oddActive)});
    }
    inst.hint = ClassHint{TvgClassKind::P, std::nullopt, 2};
    inst.check();
    return inst;
}

namespace {

std::vector<Edge> random_shape_edges(const RandomTvgParams& p, Rng& rng, int& n) {
    std::vector<Edge> edges;
    switch (p.shape) {
        case GraphShape::Path:
            for (int i = 0; i + 1 < n; ++i) edges.push_back(mk_edge(i, i + 1));
            break;
        case GraphShape::Cycle:
            if (n < 3) throw PreconditionError("cycle needs at least 3 vertices");
            for (int i = 0; i < n; ++i) edges.push_back(mk_edge(i, (i + 1) % n));
            break;
        case GraphShape::Star:
            for (int i = 1; i < n; ++i) edges.push_back(mk_edge(0, i));
            break;
        case GraphShape::Tree:
            for (int i = 1; i < n; ++i)
                edges.push_back(mk_edge(static_cast<Vertex>(rng.range(0, i - 1)), i));
            break;
        case GraphShape::Spider: {
            if (n == 1) break;
            int maxArms = std::min(n - 1, 5);
            int armCount = static_cast<int>(rng.range(1, maxArms));
            std::vector<int> armLen(static_cast<std::size_t>(armCount), 1);
            for (int extra = n - 1 - armCount; extra > 0; --extra)
                ++armLen[static_cast<std::size_t>(rng.range(0, armCount - 1))];
            Vertex next = 1;
            for (int a = 0; a < armCount; ++a) {
                Vertex prev = 0;
                for (int i = 0; i < armLen[static_cast<std::size_t>(a)]; ++i) {
                    edges.push_back(mk_edge(prev, next));
                    prev = next++;
                }
            }
            break;
        }
        case GraphShape::Comb: {
            if (n < 2) break;
            int teeth = static_cast<int>(rng.range(0, std::max(0, n / 3)));
            int backboneLen = n - teeth;
            if (backboneLen < 2) {
                teeth = n - 2;
                backboneLen = 2;
            }
            for (int i = 0; i + 1 < backboneLen; ++i) edges.push_back(mk_edge(i, i + 1));
            std::set<int> used;
            Vertex next = static_cast<Vertex>(backboneLen);
            for (int t = 0; t < teeth; ++t) {
                int pos;
                do {
                    pos = static_cast<int>(rng.range(0, backboneLen - 1));
                } while (used.count(pos) != 0);
                used.insert(pos);
                edges.push_back(mk_edge(pos, next++));
            }
            break;
        }
        case GraphShape::AlmostTree: {
            for (int i = 1; i < n; ++i)
                edges.push_back(mk_edge(static_cast<Vertex>(rng.range(0, i - 1)), i));
            std::set<std::pair<Vertex, Vertex>> have;
            for (const Edge& e : edges) have.emplace(e.u, e.v);
            int added = 0;
            int guard = 0;
            while (added < p.extraEdges && guard++ < 1000) {
                Vertex a = static_cast<Vertex>(rng.range(0, n - 1));
                Vertex b = static_cast<Vertex>(rng.range(0, n - 1));
                if (a == b) continue;
                Edge e = mk_edge(a, b);
                if (have.emplace(e.u, e.v).second) {
                    edges.push_back(e);
                    ++added;
                }
            }
            if (added < p.extraEdges)
                throw PreconditionError("could not place the requested extra edges");
            break;
        }
        case GraphShape::UniformSpider: {
            if (p.armCount < 1 || p.armLen < 1)
                throw PreconditionError("uniform spider needs positive arm count and length");
            n = p.armCount * p.armLen + 1;
            Vertex next = 1;
            for (int a = 0; a < p.armCount; ++a) {
                Vertex prev = 0;
                for (int i = 0; i < p.armLen; ++i) {
                    edges.push_back(mk_edge(prev, next));
                    prev = next++;
                }
            }
            break;
        }
        case GraphShape::General: {
            for (int i = 1; i < n; ++i)
                edges.push_back(mk_edge(static_cast<Vertex>(rng.range(0, i - 1)), i));
            std::set<std::pair<Vertex, Vertex>> have;
            for (const Edge& e : edges) have.emplace(e.u, e.v);
            for (Vertex a = 0; a < n; ++a)
                for (Vertex b = a + 1; b < n; ++b)
                    if (have.count({a, b}) == 0 && rng.percent(p.densityPct / 2))
                        edges.push_back(mk_edge(a, b));
            break;
        }
    }
    return edges;
}

}  // namespace

TvgInstance gen_random_tvg(const RandomTvgParams& params, std::uint64_t seed) {
    if (params.n < 1) throw PreconditionError("n must be positive");
    if (params.snapshots < 1) throw PreconditionError("snapshot count must be positive");
    if (params.densityPct < 0 || params.densityPct > 100)
        throw PreconditionError("density must be a percentage");
    if (params.cls == TvgClassKind::B && (!params.delta || *params.delta < 1))
        throw PreconditionError("class B needs delta >= 1");
    if (params.cls == TvgClassKind::P && (!params.period || *params.period < 1))
        throw PreconditionError("class P needs period >= 1");

    Rng rng(seed);
    int n = params.n;
    TvgInstance inst;
    inst.edges = random_shape_edges(params, rng, n);
    inst.n = n;
    const int m = static_cast<int>(inst.edges.size());

    switch (params.cls) {
        case TvgClassKind::R: {
            std::vector<char> ever(static_cast<std::size_t>(m), 0);
            for (int s = 0; s < params.snapshots; ++s) {
                Snapshot snap;
                snap.duration = rng.range(1, std::max<Time>(1, params.maxDuration));
                for (EdgeId e = 0; e < m; ++e)
                    if (rng.percent(params.densityPct)) {
                        snap.active.push_back(e);
                        ever[static_cast<std::size_t>(e)] = 1;
                    }
                inst.snapshots.push_back(std::move(snap));
            }
            for (EdgeId e = 0; e < m; ++e) {
                if (ever[static_cast<std::size_t>(e)]) continue;
                auto& snap = inst.snapshots[static_cast<std::size_t>(
                    rng.range(0, params.snapshots - 1))];
                snap.active.push_back(e);
            }
            for (auto& snap : inst.snapshots) {
                std::sort(snap.active.begin(), snap.active.end());
                snap.active.erase(std::unique(snap.active.begin(), snap.active.end()),
                                  snap.active.end());
            }
            inst.hint = ClassHint{TvgClassKind::R, std::nullopt, std::nullopt};
            break;
        }
        case TvgClassKind::B: {
            const Time delta = *params.delta;
            std::vector<std::vector<char>> active(
                static_cast<std::size_t>(params.snapshots),
                std::vector<char>(static_cast<std::size_t>(m), 0));
            for (EdgeId e = 0; e < m; ++e) {
                Time lastSeen = -1;
                for (Time t = 0; t < params.snapshots; ++t) {
                    bool on = rng.percent(params.densityPct);
                    if (!on && t - lastSeen == delta) on = true;  // keep the window promise
                    if (on) {
                        active[static_cast<std::size_t>(t)][static_cast<std::size_t>(e)] = 1;
                        lastSeen = t;
                    }
                }
            }
            for (Time t = 0; t < params.snapshots; ++t) {
                Snapshot snap;
                snap.duration = 1;
                for (EdgeId e = 0; e < m; ++e)
                    if (active[static_cast<std::size_t>(t)][static_cast<std::size_t>(e)])
                        snap.active.push_back(e);
                inst.snapshots.push_back(std::move(snap));
            }
            inst.hint = ClassHint{TvgClassKind::B, delta, std::nullopt};
            break;
        }
        case TvgClassKind::P: {
            const Time p = *params.period;
            Time steps = std::max<Time>(params.snapshots, 2 * p * n);
            if (steps % p != 0) steps += p - steps % p;
            std::vector<std::vector<char>> pattern(
                static_cast<std::size_t>(p), std::vector<char>(static_cast<std::size_t>(m), 0));
            for (EdgeId e = 0; e < m; ++e) {
                bool any = false;
                for (Time r = 0; r < p; ++r)
                    if (rng.percent(params.densityPct)) {
                        pattern[static_cast<std::size_t>(r)][static_cast<std::size_t>(e)] = 1;
                        any = true;
                    }
                if (!any)
                    pattern[static_cast<std::size_t>(rng.range(0, p - 1))]
                           [static_cast<std::size_t>(e)] = 1;
            }
            for (Time t = 0; t < steps; ++t) {
                Snapshot snap;
                snap.duration = 1;
                for (EdgeId e = 0; e < m; ++e)
                    if (pattern[static_cast<std::size_t>(t % p)][static_cast<std::size_t>(e)])
                        snap.active.push_back(e);
                inst.snapshots.push_back(std::move(snap));
            }
            inst.hint = ClassHint{TvgClassKind::P, std::nullopt, p};
            break;
        }
    }

    inst.start = static_cast<Vertex>(rng.range(0, n - 1));
    inst.check();
    return inst;
}

}  // namespace dmvp
