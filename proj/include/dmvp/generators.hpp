#pragma once

#include <cstdint>

#include "dmvp/types.hpp"

namespace dmvp {

// Set-cover star gadget: center, one point per universe element, one per set,
// one check point. Schedule pass/take/pass per set, then check, then finish;
// a cover of size <= k exists iff the coverage optimum is <= the total
// duration 2n + 2*sum|s_i| + 2k + 1.
TvgInstance gen_setcover_star(int universeSize, const std::vector<std::vector<int>>& sets, int k);

// Set-cover comb gadget: backbone with element teeth, set teeth and two check
// teeth; back/pass/take/check/finish schedule.
TvgInstance gen_setcover_comb(int universeSize, const std::vector<std::vector<int>>& sets, int k);

// 3-partition spider gadget: an arm per integer, unit checkpoint arms, one
// long arm; arms are steady, flashing (one presence every delta steps) or
// carrying (a moving wait-free front). longArmLen defaults to the smallest
// forcing length 2M + 2m + 1; smaller values keep instances oracle-checkable.
TvgInstance gen_3partition_spider(const std::vector<Time>& numbers, Time delta,
                                  std::optional<Time> longArmLen = std::nullopt);

// 3-partition comb gadget with scaled arms (requires an even number of
// groups); take/check(j)/finalcheck/finish schedule.
TvgInstance gen_3partition_comb(const std::vector<Time>& numbers, Time delta,
                                std::optional<Time> longArmLen = std::nullopt);

// Hamiltonian-path gadget with period 2: doubles the graph with a ring of new
// vertices; original edges always present, new edges alternate by parity. A
// Hamiltonian path from v0 exists iff the optimum is exactly 2|V(G)| - 1.
TvgInstance gen_hamiltonian_p2(int n, const std::vector<Edge>& graph, Vertex v0,
                               std::optional<Time> horizon = std::nullopt);

enum class GraphShape {
    General,
    Path,
    Cycle,
    Tree,
    Star,
    Spider,
    Comb,
    AlmostTree,     // tree plus extraEdges cycle edges
    UniformSpider,  // armCount arms of armLen each
};

struct RandomTvgParams {
    TvgClassKind cls = TvgClassKind::R;
    GraphShape shape = GraphShape::General;
    int n = 6;
    int snapshots = 8;       // R: snapshot count; B/P: horizon in unit steps
    std::optional<Time> delta;   // required for B
    std::optional<Time> period;  // required for P
    int densityPct = 50;
    Time maxDuration = 3;  // R only; B/P use unit snapshots
    int extraEdges = 1;    // AlmostTree
    int armCount = 3;      // UniformSpider
    int armLen = 2;        // UniformSpider
};

// Deterministic given (params, seed). Output satisfies the requested class on
// its horizon: R repairs never-present edges, B forces a presence into every
// delta-window, P repeats a per-residue pattern (horizon at least 2pn).
TvgInstance gen_random_tvg(const RandomTvgParams& params, std::uint64_t seed);

}  // namespace dmvp
