#include <doctest.h>

#include <queue>

#include "dmvp/foremost.hpp"
#include "dmvp/generators.hpp"
#include "dmvp/tvg_ops.hpp"
#include "test_support.hpp"

using namespace dmvp;
using namespace dmvp::testing;

namespace {

std::vector<Time> bfs_distances(const NormalizedTvg& tvg, Vertex from) {
    std::vector<Time> dist(static_cast<std::size_t>(tvg.vertex_count()), kUnreachable);
    dist[static_cast<std::size_t>(from)] = 0;
    std::queue<Vertex> q;
    q.push(from);
    while (!q.empty()) {
        Vertex v = q.front();
        q.pop();
        for (auto [e, w] : tvg.adj[static_cast<std::size_t>(v)]) {
            (void)e;
            if (dist[static_cast<std::size_t>(w)] == kUnreachable) {
                dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(v)] + 1;
                q.push(w);
            }
        }
    }
    return dist;
}

}  // namespace

TEST_CASE("foremost: static graph reduces to hop distance") {
    auto inst = make_instance(5, {{0, 1}, {1, 2}, {1, 3}, {3, 4}}, {{12, {0, 1, 2, 3}}});
    auto ntvg = normalize(inst);
    auto table = build_foremost_table(ntvg);
    for (Vertex u = 0; u < 5; ++u) {
        auto dist = bfs_distances(ntvg, u);
        for (Vertex v = 0; v < 5; ++v)
            CHECK(table.d(0, u, v) == dist[static_cast<std::size_t>(v)]);
    }
}

TEST_CASE("foremost: horizon end is unreachable for distinct pairs") {
    auto inst = make_instance(3, {{0, 1}, {1, 2}}, {{4, {0, 1}}});
    auto ntvg = normalize(inst);
    auto table = build_foremost_table(ntvg);
    const Time T = ntvg.totalSteps;
    for (Vertex u = 0; u < 3; ++u)
        for (Vertex v = 0; v < 3; ++v) {
            if (u == v)
                CHECK(table.d(T, u, v) == 0);
            else
                CHECK(!is_reachable(table.d(T, u, v)));
        }
}

TEST_CASE("foremost: waiting for a late edge") {
    // (v0,v1) active only during step 2; (v1,v2) always active
    auto inst = make_instance(3, {{0, 1}, {1, 2}},
                              {{2, {1}}, {1, {0, 1}}, {3, {1}}});
    auto ntvg = normalize(inst);
    auto table = build_foremost_table(ntvg);
    CHECK(earliest_arrival_oracle(ntvg, 0, 2, 0) == 4);
    CHECK(table.d(0, 0, 2) == 4);
    auto j = foremost_journey(table, ntvg, 0, 2, 0);
    CHECK(j.arrival_time() == 4);
    CHECK(validate_journey(inst, j).valid);
}

TEST_CASE("foremost: matches the earliest-arrival oracle on random instances") {
    RandomTvgParams params;
    params.cls = TvgClassKind::R;
    params.n = 6;
    params.snapshots = 5;
    params.maxDuration = 3;
    params.densityPct = 45;
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        auto inst = gen_random_tvg(params, seed);
        auto ntvg = normalize(inst);
        auto table = build_foremost_table(ntvg);
        for (Time t = 0; t < ntvg.totalSteps; t += 3)
            for (Vertex u = 0; u < inst.n; ++u)
                for (Vertex v = 0; v < inst.n; ++v) {
                    Time arrival = earliest_arrival_oracle(ntvg, u, v, t);
                    Time expected = is_reachable(arrival) ? arrival - t : kUnreachable;
                    CHECK(table.d(t, u, v) == expected);
                }
    }
}

TEST_CASE("foremost: wait dominance across the whole table") {
    RandomTvgParams params;
    params.cls = TvgClassKind::R;
    params.n = 5;
    params.snapshots = 6;
    params.densityPct = 40;
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        auto inst = gen_random_tvg(params, seed);
        auto ntvg = normalize(inst);
        auto table = build_foremost_table(ntvg);
        for (Time t = 0; t < ntvg.totalSteps; ++t)
            for (Vertex u = 0; u < inst.n; ++u)
                for (Vertex v = 0; v < inst.n; ++v)
                    CHECK(table.d(t, u, v) <= sat_add(table.d(t + 1, u, v), 1));
    }
}

TEST_CASE("foremost: reconstruction is sound") {
    RandomTvgParams params;
    params.cls = TvgClassKind::R;
    params.n = 6;
    params.snapshots = 6;
    params.densityPct = 50;
    for (std::uint64_t seed = 0; seed < 15; ++seed) {
        auto inst = gen_random_tvg(params, seed);
        auto ntvg = normalize(inst);
        auto table = build_foremost_table(ntvg);
        for (Vertex u = 0; u < inst.n; ++u)
            for (Vertex v = 0; v < inst.n; ++v) {
                if (!is_reachable(table.d(0, u, v))) continue;
                auto j = foremost_journey(table, ntvg, u, v, 0);
                CHECK(j.temporal_length() == table.d(0, u, v));
                auto report = validate_journey(inst, j);
                CHECK(report.valid);
            }
    }
}

TEST_CASE("foremost: trivial reconstructions") {
    auto inst = make_instance(4, {{0, 1}, {1, 2}, {2, 3}}, {{8, {0, 1, 2}}});
    auto ntvg = normalize(inst);
    auto table = build_foremost_table(ntvg);
    auto self = foremost_journey(table, ntvg, 2, 2, 3);
    CHECK(self.moves.empty());
    CHECK(self.temporal_length() == 0);
    auto span = foremost_journey(table, ntvg, 0, 3, 0);
    CHECK(span.topological_length() == 3);
    CHECK_THROWS_AS(foremost_journey(table, ntvg, 0, 3, ntvg.totalSteps), PreconditionError);
}
