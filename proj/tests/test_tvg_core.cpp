#include <doctest.h>

#include "dmvp/driver.hpp"
#include "dmvp/generators.hpp"
#include "dmvp/io.hpp"
#include "dmvp/rng.hpp"
#include "dmvp/solver_exact.hpp"
#include "dmvp/tvg_ops.hpp"
#include "test_support.hpp"

using namespace dmvp;
using namespace dmvp::testing;

TEST_CASE("parse: smallest connected instance") {
    auto inst = parse_instance(R"({"n":2,"edges":[[0,1]],
        "snapshots":[{"duration":3,"active":[0]}],"start":0})");
    CHECK(inst.n == 2);
    CHECK(inst.total_duration() == 3);
    CHECK(inst.edges.size() == 1);
}

TEST_CASE("parse: isolated vertex is rejected as disconnected") {
    CHECK_THROWS_WITH_AS(
        parse_instance(R"({"n":3,"edges":[[0,1]],
            "snapshots":[{"duration":1,"active":[0]}],"start":0})"),
        "underlying graph disconnected", ValidationError);
}

TEST_CASE("parse: error cases carry locations") {
    CHECK_THROWS_AS(parse_instance("{"), ParseError);
    CHECK_THROWS_AS(parse_instance(R"({"n":2,"edges":[[0,1]],"snapshots":[],"start":0})"),
                    ValidationError);
    // zero duration
    CHECK_THROWS_AS(parse_instance(R"({"n":2,"edges":[[0,1]],
        "snapshots":[{"duration":0,"active":[0]}],"start":0})"),
                    ValidationError);
    // out-of-range edge index in a snapshot
    CHECK_THROWS_AS(parse_instance(R"({"n":2,"edges":[[0,1]],
        "snapshots":[{"duration":1,"active":[7]}],"start":0})"),
                    ValidationError);
    // self loop
    CHECK_THROWS_AS(parse_instance(R"({"n":2,"edges":[[1,1]],
        "snapshots":[{"duration":1,"active":[0]}],"start":0})"),
                    ValidationError);
    // start out of range
    CHECK_THROWS_AS(parse_instance(R"({"n":2,"edges":[[0,1]],
        "snapshots":[{"duration":1,"active":[0]}],"start":5})"),
                    ValidationError);
}

TEST_CASE("serialize/parse round trip on a gadget instance") {
    auto inst = gen_setcover_star(5, {{1, 2, 4}, {2, 4}, {3, 4}, {3, 5}}, 2);
    auto again = parse_instance(serialize_instance(inst));
    CHECK(again.n == inst.n);
    CHECK(again.edges == inst.edges);
    CHECK(again.snapshots.size() == inst.snapshots.size());
    for (std::size_t i = 0; i < inst.snapshots.size(); ++i) {
        CHECK(again.snapshots[i].duration == inst.snapshots[i].duration);
        CHECK(again.snapshots[i].active == inst.snapshots[i].active);
    }
    CHECK(again.start == inst.start);
    CHECK(serialize_instance(again) == serialize_instance(inst));
}

TEST_CASE("normalize: duration capped at 2n-3") {
    auto inst = make_instance(4, {{0, 1}, {1, 2}, {2, 3}}, {{100, {0, 1, 2}}});
    auto ntvg = normalize(inst);
    CHECK(ntvg.base.snapshots[0].duration == 5);
    CHECK(ntvg.totalSteps == 5);
    CHECK(ntvg.skip[5] == 95);
    // ...but an arrival at instant 5 came from a departure during step 4,
    // before anything was skipped
    CHECK(denormalize_cost(ntvg, 5) == 5);
    // a completion after the capped snapshot pays the skipped 95 steps
    auto inst2 = make_instance(4, {{0, 1}, {1, 2}, {2, 3}},
                               {{100, {0}}, {1, {0, 1, 2}}});
    auto ntvg2 = normalize(inst2);
    CHECK(ntvg2.totalSteps == 6);
    CHECK(ntvg2.skip[6] == 95);
    CHECK(denormalize_cost(ntvg2, 6) == 101);
}

TEST_CASE("normalize: identity when durations are small") {
    auto inst = make_instance(4, {{0, 1}, {1, 2}, {2, 3}}, {{2, {0, 1}}, {3, {2}}});
    auto ntvg = normalize(inst);
    CHECK(ntvg.totalSteps == 5);
    for (Time tau = 0; tau <= 5; ++tau) CHECK(ntvg.skip[static_cast<std::size_t>(tau)] == 0);
    CHECK(ntvg.base.snapshots[0].duration == 2);
    CHECK(ntvg.base.snapshots[1].duration == 3);
}

TEST_CASE("normalize: presence tiling") {
    RandomTvgParams params;
    params.cls = TvgClassKind::R;
    params.n = 6;
    params.snapshots = 5;
    params.maxDuration = 24;  // 4n
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        auto inst = gen_random_tvg(params, seed);
        auto ntvg = normalize(inst);
        Time sum = 0;
        for (const auto& s : ntvg.base.snapshots) sum += s.duration;
        CHECK(sum == ntvg.totalSteps);
        CHECK(static_cast<Time>(ntvg.stepToSnapshot.size()) == ntvg.totalSteps);
        for (Time t = 0; t + 1 < ntvg.totalSteps; ++t)
            CHECK(ntvg.stepToSnapshot[static_cast<std::size_t>(t)] <=
                  ntvg.stepToSnapshot[static_cast<std::size_t>(t) + 1]);
        for (Time t = 0; t < ntvg.totalSteps; ++t)
            CHECK(ntvg.skip[static_cast<std::size_t>(t)] <=
                  ntvg.skip[static_cast<std::size_t>(t) + 1]);
        CHECK(ntvg.skip[0] == 0);
    }
}

TEST_CASE("normalize: optimum carries over with the skip adjustment") {
    RandomTvgParams params;
    params.cls = TvgClassKind::R;
    params.n = 6;
    params.snapshots = 5;
    params.maxDuration = 24;
    params.densityPct = 60;
    int solved = 0;
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        auto inst = gen_random_tvg(params, seed);
        Time original = coverage_oracle(expand_uncapped(inst));
        auto ntvg = normalize(inst);
        Time normalized = coverage_oracle(ntvg);
        if (is_reachable(original)) {
            ++solved;
            REQUIRE(is_reachable(normalized));
            CHECK(original == denormalize_cost(ntvg, normalized));
        } else {
            CHECK(!is_reachable(normalized));
        }
    }
    CHECK(solved > 10);
}

TEST_CASE("rho: boundaries are left-closed") {
    auto inst = make_instance(3, {{0, 1}, {1, 2}},
                              {{3, {1}}, {2, {1}}, {2, {0, 1}}});
    auto ntvg = normalize(inst);
    CHECK(rho(ntvg, 0, 5));
    CHECK(!rho(ntvg, 0, 4));
    CHECK(rho(ntvg, 1, 0));
    CHECK_THROWS_AS(rho(ntvg, 0, 7), PreconditionError);
    CHECK_THROWS_AS(rho(ntvg, 0, -1), PreconditionError);
}

TEST_CASE("rho: parity edge of the hamiltonian gadget") {
    // a "10" edge is present at even steps, absent at odd ones
    std::vector<Edge> cycle6;
    for (int i = 0; i < 6; ++i)
        cycle6.push_back(i < (i + 1) % 6 ? Edge{i, (i + 1) % 6} : Edge{(i + 1) % 6, i});
    auto inst = gen_hamiltonian_p2(6, cycle6, 0);
    auto ntvg = normalize(inst);
    // edge (v_0, c_1) has type 10 (i = 0 even)
    EdgeId e10 = -1;
    for (EdgeId e = 0; e < ntvg.edge_count(); ++e) {
        const Edge& ed = inst.edges[static_cast<std::size_t>(e)];
        if (ed.u == 0 && ed.v == 7) e10 = e;
    }
    REQUIRE(e10 >= 0);
    CHECK(rho(ntvg, e10, 0));
    CHECK(!rho(ntvg, e10, 1));
    CHECK(rho(ntvg, e10, 2));
    CHECK(!rho(ntvg, e10, 3));
}

TEST_CASE("classify: static instance") {
    auto inst = make_instance(3, {{0, 1}, {1, 2}}, {{4, {0, 1}}});
    auto report = classify(inst);
    CHECK(report.isR);
    REQUIRE(report.minDeltaObserved.has_value());
    CHECK(*report.minDeltaObserved == 1);
    REQUIRE(!report.periods.empty());
    CHECK(report.periods.front() == 1);
}

TEST_CASE("classify: period-2 alternation") {
    auto inst = make_instance(3, {{0, 1}, {1, 2}},
                              {{1, {0}}, {1, {1}}, {1, {0}}, {1, {1}}});
    auto report = classify(inst);
    REQUIRE(report.minDeltaObserved.has_value());
    CHECK(*report.minDeltaObserved == 2);
    CHECK(std::find(report.periods.begin(), report.periods.end(), 2) != report.periods.end());
    CHECK(std::find(report.periods.begin(), report.periods.end(), 1) == report.periods.end());
}

TEST_CASE("classify: agrees with the window scan on random instances") {
    RandomTvgParams params;
    params.cls = TvgClassKind::R;
    params.n = 5;
    params.snapshots = 6;
    params.maxDuration = 4;
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        auto inst = gen_random_tvg(params, seed);
        auto report = classify(inst);
        auto scanned = window_scan_min_delta(inst);
        CHECK(report.minDeltaObserved == scanned);
        CHECK(report.isR == scanned.has_value());
    }
}

TEST_CASE("classify: never-present edge leaves the window undefined") {
    auto inst = make_instance(3, {{0, 1}, {1, 2}}, {{3, {0}}});
    auto report = classify(inst);
    CHECK(!report.isR);
    CHECK(!report.minDeltaObserved.has_value());
}

TEST_CASE("validate_journey: empty journey on a single vertex") {
    auto inst = make_instance(1, {}, {{1, {}}});
    auto report = validate_journey(inst, Journey{0, 0, {}});
    CHECK(report.valid);
    CHECK(report.coversAll);
    CHECK(report.temporalLength == 0);
}

TEST_CASE("validate_journey: absent edge is flagged with its move index") {
    auto inst = make_instance(3, {{0, 1}, {1, 2}}, {{2, {0}}, {2, {1}}});
    Journey j{0, 0, {Move{0, 0}, Move{1, 1}}};  // edge 1 absent at t=1
    auto report = validate_journey(inst, j);
    CHECK(!report.valid);
    REQUIRE(report.firstViolation.has_value());
    CHECK(report.firstViolation->moveIndex == 1);
    CHECK(report.firstViolation->reason == "edge absent at departure time");

    Journey ok{0, 0, {Move{0, 0}, Move{1, 2}}};
    auto good = validate_journey(inst, ok);
    CHECK(good.valid);
    CHECK(good.coversAll);
    CHECK(good.temporalLength == 3);
}

TEST_CASE("validate_journey: non-advancing times and bad adjacency") {
    auto inst = make_instance(3, {{0, 1}, {1, 2}}, {{4, {0, 1}}});
    auto nonAdvancing = validate_journey(inst, Journey{0, 0, {Move{0, 0}, Move{1, 0}}});
    CHECK(!nonAdvancing.valid);
    CHECK(nonAdvancing.firstViolation->reason == "departure time does not advance");

    auto detached = validate_journey(inst, Journey{0, 0, {Move{1, 0}}});
    CHECK(!detached.valid);
    CHECK(detached.firstViolation->reason == "edge not incident to current vertex");

    auto beyond = validate_journey(inst, Journey{0, 0, {Move{0, 9}}});
    CHECK(!beyond.valid);
    CHECK(beyond.firstViolation->reason == "departure outside the instance horizon");
}

TEST_CASE("journey serialization round trip preserves the coverage report") {
    RandomTvgParams params;
    params.cls = TvgClassKind::R;
    params.n = 6;
    params.snapshots = 8;
    params.densityPct = 70;
    Rng rng(99);
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        auto inst = gen_random_tvg(params, seed);
        auto ntvg = normalize(inst);
        // random journeys, valid or not
        Journey j;
        j.startVertex = static_cast<Vertex>(rng.range(0, inst.n - 1));
        Time t = 0;
        Vertex cur = j.startVertex;
        for (int step = 0; step < 6; ++step) {
            const auto& inc = ntvg.adj[static_cast<std::size_t>(cur)];
            if (inc.empty()) break;
            auto [e, w] = inc[static_cast<std::size_t>(rng.range(
                0, static_cast<std::int64_t>(inc.size()) - 1))];
            j.moves.push_back(Move{e, t});
            cur = w;
            t += rng.range(1, 2);
        }
        Journey parsed = parse_journey(serialize_journey(j));
        CHECK(parsed == j);
        auto a = validate_journey(inst, j);
        auto b = validate_journey(inst, parsed);
        CHECK(a.valid == b.valid);
        CHECK(a.coversAll == b.coversAll);
        CHECK(a.temporalLength == b.temporalLength);
        CHECK(a.visitedVertices == b.visitedVertices);
    }
}

TEST_CASE("driver: journeys come back on the original timeline") {
    RandomTvgParams params;
    params.cls = TvgClassKind::R;
    params.n = 6;
    params.snapshots = 5;
    params.maxDuration = 40;  // far past the cap, so skipping is exercised
    params.densityPct = 60;
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        auto inst = gen_random_tvg(params, seed);
        SolveRequest req;
        req.algo = "exact";
        auto outcome = dispatch_solve(inst, req);
        if (!outcome.solution.reachable()) continue;
        auto report = validate_journey(inst, outcome.solution.journey);
        CHECK(report.valid);
        CHECK(report.coversAll);
        CHECK(report.temporalLength == outcome.solution.cost);
    }
}

TEST_CASE("solver witnesses validate and cover") {
    RandomTvgParams params;
    params.cls = TvgClassKind::R;
    params.n = 6;
    params.snapshots = 8;
    params.densityPct = 70;
    for (std::uint64_t seed = 0; seed < 15; ++seed) {
        auto inst = gen_random_tvg(params, seed);
        auto ntvg = normalize(inst);
        auto sol = solve_brute_force(ntvg);
        if (!sol.reachable()) continue;
        auto report = validate_journey(ntvg.base, sol.journey);
        CHECK(report.valid);
        CHECK(report.coversAll);
        CHECK(report.temporalLength == sol.cost);
    }
}
