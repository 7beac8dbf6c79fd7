#include <doctest.h>

#include "dmvp/generators.hpp"
#include "dmvp/solver_exact.hpp"
#include "dmvp/solver_topology.hpp"
#include "dmvp/tvg_ops.hpp"
#include "dmvp/walks.hpp"
#include "test_support.hpp"

using namespace dmvp;
using namespace dmvp::testing;

TEST_CASE("detect: stars, cycles, paths") {
    TopologyInfo star = detect_topology(4, {{0, 1}, {0, 2}, {0, 3}});
    CHECK(star.shape == Shape::Star);
    CHECK(star.isSpider);
    CHECK(star.isTree);
    CHECK(star.leaves.size() == 3);

    TopologyInfo cyc = detect_topology(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}});
    CHECK(cyc.shape == Shape::Cycle);
    CHECK(cyc.c == 1);

    TopologyInfo path = detect_topology(4, {{0, 1}, {1, 2}, {2, 3}});
    CHECK(path.shape == Shape::Path);
    CHECK(path.pathOrder.size() == 4);

    TopologyInfo single = detect_topology(1, {});
    CHECK(single.shape == Shape::Path);
}

TEST_CASE("detect: the 3-partition spider is a spider with the right arms") {
    auto inst = gen_3partition_spider({2, 3, 4, 4, 5, 8}, 2);
    TopologyInfo info = detect_topology(inst);
    CHECK(info.shape == Shape::Spider);
    CHECK(info.center == 0);
    // 6 number arms + 2 checkpoints + 1 long arm
    CHECK(info.leaves.size() == 9);
}

TEST_CASE("detect: almost-trees and chains") {
    // two triangles joined by a bridge path: c = 2, two closed chains
    TopologyInfo barbell = detect_topology(
        7, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {4, 6}});
    CHECK(barbell.shape == Shape::AlmostTree);
    CHECK(barbell.c == 2);
    CHECK(barbell.degree2Paths.size() == 2);
    for (const auto& chain : barbell.degree2Paths)
        CHECK(chain.front() == chain.back());  // closed
}

TEST_CASE("solve_path: static costs from endpoint and interior") {
    auto fromEnd = make_instance(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}}, {{20, {0, 1, 2, 3}}}, 0);
    CHECK(solve_path(normalize(fromEnd)).cost == 4);

    // interior start v_k: min(2k + (n-1-k), 2(n-1-k) + k)
    for (Vertex k = 1; k <= 3; ++k) {
        auto inst = make_instance(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}}, {{20, {0, 1, 2, 3}}}, k);
        Time left = 2 * k + (4 - k);
        Time right = 2 * (4 - k) + k;
        CHECK(solve_path(normalize(inst)).cost == std::min(left, right));
    }
}

TEST_CASE("solve_path: exactly two candidates, oracle agreement, conformance") {
    RandomTvgParams params;
    params.cls = TvgClassKind::R;
    params.shape = GraphShape::Path;
    params.n = 8;
    params.snapshots = 30;
    params.maxDuration = 1;
    params.densityPct = 55;
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        auto inst = gen_random_tvg(params, seed);
        auto ntvg = normalize(inst);
        auto sol = solve_path(ntvg);
        CHECK(sol.stats.candidatesExamined == 2);
        CHECK(sol.cost == coverage_oracle(ntvg));
        if (sol.reachable()) {
            CHECK(journey_covers(inst, sol.journey));
            CHECK(no_immediate_turnaround(inst, sol.journey));
        }
    }
}

TEST_CASE("solve_cycle: candidate count and static cost") {
    auto inst = make_instance(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}}, {{20, {0, 1, 2, 3, 4}}});
    auto sol = solve_cycle(normalize(inst));
    CHECK(sol.stats.candidatesExamined == 8);  // 2(n-1)
    CHECK(sol.cost == 4);                      // walk around
}

TEST_CASE("solve_cycle: oracle agreement and conformance") {
    RandomTvgParams params;
    params.cls = TvgClassKind::R;
    params.shape = GraphShape::Cycle;
    params.n = 7;
    params.snapshots = 30;
    params.maxDuration = 1;
    params.densityPct = 55;
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        auto inst = gen_random_tvg(params, seed);
        auto ntvg = normalize(inst);
        auto sol = solve_cycle(ntvg);
        CHECK(sol.stats.candidatesExamined == 2 * (inst.n - 1));
        CHECK(sol.cost == coverage_oracle(ntvg));
        if (sol.reachable()) {
            CHECK(journey_covers(inst, sol.journey));
            CHECK(no_immediate_turnaround(inst, sol.journey));
        }
    }
}

TEST_CASE("solve_cycle rejects non-cycles; solve_path rejects non-paths") {
    auto tree = make_instance(4, {{0, 1}, {0, 2}, {0, 3}}, {{8, {0, 1, 2}}});
    CHECK_THROWS_AS(solve_cycle(normalize(tree)), PreconditionError);
    CHECK_THROWS_AS(solve_path(normalize(tree)), PreconditionError);
}

TEST_CASE("greedy timing of a fixed walk is optimal") {
    RandomTvgParams params;
    params.cls = TvgClassKind::R;
    params.shape = GraphShape::Path;
    params.n = 6;
    params.snapshots = 25;
    params.maxDuration = 1;
    params.densityPct = 50;
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        auto inst = gen_random_tvg(params, seed);
        auto ntvg = normalize(inst);
        TopologyInfo info = detect_topology(inst);
        // walk the path end to end
        auto timed = time_walk(ntvg, info.pathOrder, 0);
        Time viaOracle = fixed_walk_oracle(ntvg, info.pathOrder, 0);
        if (timed)
            CHECK(timed->arrival_time() == viaOracle);
        else
            CHECK(!is_reachable(viaOracle));
    }
}

TEST_CASE("solve_tree_leaf_dp: consistency on paths and oracle agreement on trees") {
    RandomTvgParams pathParams;
    pathParams.cls = TvgClassKind::R;
    pathParams.shape = GraphShape::Path;
    pathParams.n = 7;
    pathParams.snapshots = 25;
    pathParams.maxDuration = 1;
    pathParams.densityPct = 60;
    for (std::uint64_t seed = 0; seed < 15; ++seed) {
        auto inst = gen_random_tvg(pathParams, seed);
        auto ntvg = normalize(inst);
        auto info = detect_topology(inst);
        CHECK(solve_tree_leaf_dp(ntvg, info).cost == solve_path(ntvg).cost);
    }

    RandomTvgParams treeParams;
    treeParams.cls = TvgClassKind::R;
    treeParams.shape = GraphShape::Tree;
    treeParams.n = 9;
    treeParams.snapshots = 30;
    treeParams.maxDuration = 1;
    treeParams.densityPct = 55;
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        auto inst = gen_random_tvg(treeParams, seed);
        auto ntvg = normalize(inst);
        auto info = detect_topology(inst);
        auto sol = solve_tree_leaf_dp(ntvg, info);
        CHECK(sol.cost == coverage_oracle(ntvg));
        if (sol.reachable()) CHECK(journey_covers(inst, sol.journey));
    }
}

TEST_CASE("static tree cost is 2(n-1) - ecc(s)") {
    RandomTvgParams params;
    params.cls = TvgClassKind::R;
    params.shape = GraphShape::Tree;
    params.n = 8;
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        auto inst = make_static(gen_random_tvg(params, seed));
        auto ntvg = normalize(inst);
        auto info = detect_topology(inst);
        Time expected = static_cover_oracle(inst.n, inst.edges, inst.start);
        CHECK(solve_tree_leaf_dp(ntvg, info).cost == expected);
    }
}

TEST_CASE("solve_almost_tree: degenerates to the tree DP on trees") {
    RandomTvgParams params;
    params.cls = TvgClassKind::R;
    params.shape = GraphShape::Tree;
    params.n = 8;
    params.snapshots = 25;
    params.maxDuration = 1;
    params.densityPct = 60;
    for (std::uint64_t seed = 0; seed < 15; ++seed) {
        auto inst = gen_random_tvg(params, seed);
        auto ntvg = normalize(inst);
        auto info = detect_topology(inst);
        CHECK(solve_almost_tree(ntvg, info).cost == solve_tree_leaf_dp(ntvg, info).cost);
    }
}

TEST_CASE("solve_almost_tree: agrees with solve_cycle on cycles") {
    RandomTvgParams params;
    params.cls = TvgClassKind::R;
    params.shape = GraphShape::Cycle;
    params.n = 7;
    params.snapshots = 30;
    params.maxDuration = 1;
    params.densityPct = 55;
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        auto inst = gen_random_tvg(params, seed);
        auto ntvg = normalize(inst);
        auto info = detect_topology(inst);
        CHECK(solve_almost_tree(ntvg, info).cost == solve_cycle(ntvg).cost);
    }
}

TEST_CASE("solve_almost_tree: oracle agreement on 1- and 2-almost-trees") {
    for (int extra : {1, 2}) {
        RandomTvgParams params;
        params.cls = TvgClassKind::R;
        params.shape = GraphShape::AlmostTree;
        params.extraEdges = extra;
        params.n = 8;
        params.snapshots = 28;
        params.maxDuration = 1;
        params.densityPct = 55;
        for (std::uint64_t seed = 0; seed < 30; ++seed) {
            auto inst = gen_random_tvg(params, seed);
            auto ntvg = normalize(inst);
            auto info = detect_topology(inst);
            REQUIRE(info.c == extra);
            auto sol = solve_almost_tree(ntvg, info);
            CHECK(sol.cost == coverage_oracle(ntvg));
            if (sol.reachable()) CHECK(journey_covers(inst, sol.journey));
        }
    }
}

TEST_CASE("solve_almost_tree: c = 3 within the default bound") {
    RandomTvgParams params;
    params.cls = TvgClassKind::R;
    params.shape = GraphShape::AlmostTree;
    params.extraEdges = 3;
    params.n = 7;
    params.snapshots = 25;
    params.maxDuration = 1;
    params.densityPct = 60;
    for (std::uint64_t seed = 0; seed < 12; ++seed) {
        auto inst = gen_random_tvg(params, seed);
        auto ntvg = normalize(inst);
        auto info = detect_topology(inst);
        REQUIRE(info.c == 3);
        CHECK(solve_almost_tree(ntvg, info).cost == coverage_oracle(ntvg));
    }
    // c above the bound is refused
    params.extraEdges = 4;
    params.n = 9;
    auto inst = gen_random_tvg(params, 0);
    CHECK_THROWS_AS(solve_almost_tree(normalize(inst), detect_topology(inst)),
                    PreconditionError);
}

TEST_CASE("cross-solver agreement on instances where several apply") {
    RandomTvgParams params;
    params.cls = TvgClassKind::R;
    params.shape = GraphShape::Path;
    params.n = 6;
    params.snapshots = 25;
    params.maxDuration = 1;
    params.densityPct = 60;
    for (std::uint64_t seed = 0; seed < 15; ++seed) {
        auto inst = gen_random_tvg(params, seed);
        auto ntvg = normalize(inst);
        auto info = detect_topology(inst);
        Time reference = solve_brute_force(ntvg).cost;
        CHECK(solve_path(ntvg).cost == reference);
        CHECK(solve_tree_leaf_dp(ntvg, info).cost == reference);
        CHECK(solve_almost_tree(ntvg, info).cost == reference);
        CHECK(solve_exact_subset_dp(ntvg).cost == reference);
    }
}
