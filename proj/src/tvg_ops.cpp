#include "dmvp/tvg_ops.hpp"

#include <algorithm>

namespace dmvp {

namespace {

NormalizedTvg build_steps(const TvgInstance& instance, Time cap, Time maxSteps) {
    instance.check();
    NormalizedTvg out;
    out.base = instance;

    Time total = 0;
    std::vector<Time> skippedBefore(instance.snapshots.size() + 1, 0);
    for (std::size_t i = 0; i < instance.snapshots.size(); ++i) {
        Time dur = instance.snapshots[i].duration;
        Time capped = std::min(dur, cap);
        out.base.snapshots[i].duration = capped;
        skippedBefore[i + 1] = skippedBefore[i] + (dur - capped);
        total += capped;
        if (total > maxSteps)
            throw PreconditionError("instance horizon exceeds " + std::to_string(maxSteps) +
                                    " steps");
    }
    out.totalSteps = total;

    out.stepToSnapshot.reserve(static_cast<std::size_t>(total));
    for (std::size_t i = 0; i < out.base.snapshots.size(); ++i)
        for (Time t = 0; t < out.base.snapshots[i].duration; ++t)
            out.stepToSnapshot.push_back(static_cast<int>(i));

    // skip[tau] = time removed before the original instant that normalized
    // instant tau corresponds to (instant tau is the start of step tau).
    out.skip.resize(static_cast<std::size_t>(total) + 1, 0);
    for (Time tau = 0; tau < total; ++tau)
        out.skip[static_cast<std::size_t>(tau)] =
            skippedBefore[static_cast<std::size_t>(out.stepToSnapshot[static_cast<std::size_t>(tau)])];
    out.skip[static_cast<std::size_t>(total)] = skippedBefore.back();

    out.presence.assign(out.base.snapshots.size(),
                        std::vector<char>(instance.edges.size(), 0));
    for (std::size_t s = 0; s < out.base.snapshots.size(); ++s)
        for (EdgeId e : out.base.snapshots[s].active)
            out.presence[s][static_cast<std::size_t>(e)] = 1;

    out.adj = build_adjacency(instance.n, instance.edges);
    return out;
}

}  // namespace

NormalizedTvg normalize(const TvgInstance& instance) {
    Time cap = std::max<Time>(1, 2 * static_cast<Time>(instance.n) - 3);
    return build_steps(instance, cap, kUnreachable);
}

NormalizedTvg expand_uncapped(const TvgInstance& instance, Time maxSteps) {
    return build_steps(instance, kUnreachable, maxSteps);
}

bool rho(const NormalizedTvg& tvg, EdgeId edge, Time t) {
    if (t < 0 || t >= tvg.totalSteps)
        throw PreconditionError("time " + std::to_string(t) + " outside [0, " +
                                std::to_string(tvg.totalSteps) + ")");
    if (edge < 0 || edge >= tvg.edge_count())
        throw PreconditionError("edge index out of range");
    return tvg.edge_present(edge, t);
}

namespace {

Time shift_time(const NormalizedTvg& tvg, Time t) {
    if (t < 0) return t;
    if (t > tvg.totalSteps) return t + tvg.skip[static_cast<std::size_t>(tvg.totalSteps)];
    return t + tvg.skip[static_cast<std::size_t>(t)];
}

}  // namespace

Journey denormalize_journey(const NormalizedTvg& tvg, const Journey& journey) {
    Journey out;
    out.startVertex = journey.startVertex;
    out.startTime = shift_time(tvg, journey.startTime);
    out.moves.reserve(journey.moves.size());
    for (const Move& m : journey.moves)
        out.moves.push_back(Move{m.edge, shift_time(tvg, m.t)});
    return out;
}

Time denormalize_cost(const NormalizedTvg& tvg, Time normalizedCost) {
    if (!is_reachable(normalizedCost)) return kUnreachable;
    if (normalizedCost == 0) return 0;
    // An arrival at instant c was produced by a departure during step c-1, so
    // only time removed before that step has elapsed.
    return normalizedCost + tvg.skip[static_cast<std::size_t>(normalizedCost) - 1];
}

ClassReport classify(const TvgInstance& instance, Time maxSteps) {
    NormalizedTvg full = expand_uncapped(instance, maxSteps);
    const Time horizon = full.totalSteps;
    const int m = full.edge_count();

    ClassReport report;
    report.isR = true;

    // Presence times per edge drive both the window bound and period checks.
    std::vector<std::vector<Time>> presentAt(static_cast<std::size_t>(m));
    for (Time t = 0; t < horizon; ++t)
        for (EdgeId e = 0; e < m; ++e)
            if (full.edge_present(e, t)) presentAt[static_cast<std::size_t>(e)].push_back(t);

    Time minDelta = 1;
    bool deltaDefined = true;
    for (EdgeId e = 0; e < m; ++e) {
        const auto& times = presentAt[static_cast<std::size_t>(e)];
        if (times.empty()) {
            report.isR = false;
            deltaDefined = false;
            continue;
        }
        // Longest stretch of consecutive absent steps; the smallest window that
        // cannot miss the edge is one longer.
        Time worst = times.front();  // leading absence
        for (std::size_t i = 0; i + 1 < times.size(); ++i)
            worst = std::max(worst, times[i + 1] - times[i] - 1);
        worst = std::max(worst, horizon - times.back() - 1);  // trailing absence
        minDelta = std::max(minDelta, worst + 1);
    }
    if (deltaDefined && m > 0) report.minDeltaObserved = minDelta;
    if (m == 0) report.minDeltaObserved = 1;  // vacuously every window works

    for (Time p = 1; p <= horizon; ++p) {
        bool ok = true;
        for (EdgeId e = 0; e < m && ok; ++e)
            for (Time t = 0; t + p < horizon; ++t)
                if (full.edge_present(e, t) != full.edge_present(e, t + p)) {
                    ok = false;
                    break;
                }
        if (ok) report.periods.push_back(p);
    }
    return report;
}

CoverageReport validate_journey(const TvgInstance& instance, const Journey& journey) {
    instance.check();
    if (journey.startVertex < 0 || journey.startVertex >= instance.n)
        throw PreconditionError("journey start vertex out of range");

    CoverageReport report;
    report.visitedVertices.assign(static_cast<std::size_t>(instance.n), 0);
    report.visitedVertices[static_cast<std::size_t>(journey.startVertex)] = 1;
    report.temporalLength = journey.temporal_length();

    // Snapshot boundaries on the original (uncapped) timeline.
    std::vector<Time> ends;
    ends.reserve(instance.snapshots.size());
    Time total = 0;
    for (const Snapshot& s : instance.snapshots) {
        total += s.duration;
        ends.push_back(total);
    }
    auto present = [&](EdgeId e, Time t) {
        auto it = std::upper_bound(ends.begin(), ends.end(), t);
        std::size_t snap = static_cast<std::size_t>(it - ends.begin());
        const auto& active = instance.snapshots[snap].active;
        return std::binary_search(active.begin(), active.end(), e);
    };

    auto coversAll = [&report] {
        return std::all_of(report.visitedVertices.begin(), report.visitedVertices.end(),
                           [](char c) { return c != 0; });
    };

    Vertex cur = journey.startVertex;
    Time prev = journey.startTime - 1;
    for (std::size_t i = 0; i < journey.moves.size(); ++i) {
        const Move& mv = journey.moves[i];
        auto fail = [&](const std::string& why) {
            report.valid = false;
            report.firstViolation = Violation{static_cast<int>(i), why};
            report.coversAll = coversAll();
        };
        if (mv.edge < 0 || mv.edge >= static_cast<EdgeId>(instance.edges.size())) {
            fail("edge index out of range");
            return report;
        }
        const Edge& e = instance.edges[static_cast<std::size_t>(mv.edge)];
        if (mv.t < prev + 1) {
            fail("departure time does not advance");
            return report;
        }
        if (mv.t < 0 || mv.t >= total) {
            fail("departure outside the instance horizon");
            return report;
        }
        if (!e.touches(cur)) {
            fail("edge not incident to current vertex");
            return report;
        }
        if (!present(mv.edge, mv.t)) {
            fail("edge absent at departure time");
            return report;
        }
        cur = e.other(cur);
        report.visitedVertices[static_cast<std::size_t>(cur)] = 1;
        prev = mv.t;
    }
    report.valid = true;
    report.coversAll = coversAll();
    return report;
}

}  // namespace dmvp
