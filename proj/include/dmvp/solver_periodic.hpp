#pragma once

#include "dmvp/topology.hpp"
#include "dmvp/types.hpp"

namespace dmvp {

// --- period 2 over trees ---------------------------------------------------

// Edge availability under period 2: odd steps only, even steps only, or both.
enum class P2EdgeType { OnlyOdd, OnlyEven, Always };

// Per-edge types when the presence function is consistent with period 2 on
// the horizon and every edge is present at some parity; nullopt otherwise.
std::optional<std::vector<P2EdgeType>> infer_p2_types(const NormalizedTvg& tvg);

enum class FwClass { FW11, FW10, FW01 };

// Coverage costs of a maximal subtree: fastest with/without return (mw, m),
// foremost costs per start parity (cw, c), and the parity class of fastest
// coverage with return.
struct SubtreeProfile {
    FwClass type = FwClass::FW11;
    Time mw = 0;
    Time m = 0;
    std::array<Time, 2> cw{0, 0};
    std::array<Time, 2> c{0, 0};
};

// Profiles for every vertex of the tree rooted at the instance start.
std::vector<SubtreeProfile> p2_profiles(const NormalizedTvg& tvg);

// Linear-time exact coverage for trees with period-2 presence.
Solution solve_tree_p2(const NormalizedTvg& tvg);

// --- fixed period over spiders ----------------------------------------------

// Arms with identical extra-time and return-residue signatures are
// interchangeable in any solution.
struct ArmClass {
    std::vector<Time> e;  // extra time over the fastest round trip, per residue
    std::vector<Time> r;  // return residue, per residue
    int memberCount = 0;
    int representative = 0;  // arm id
};

struct ArmClassification {
    Vertex center = 0;
    std::vector<std::vector<Vertex>> armRoutes;  // center..leaf per arm
    std::vector<ArmClass> classes;
    std::vector<int> armClassOf;          // arm -> class index
    std::vector<Time> armFastRound;       // m(l) per arm
    std::vector<std::vector<Time>> armOneWay;  // arm x residue -> one-way cost
};

ArmClassification classify_arms(const NormalizedTvg& tvg, Time p);

// Exact optimum via DP over (per-class remaining counts, residue); the final
// arm is taken without return. Off-center starts try both first moves.
Solution solve_spider_fixed_p(const NormalizedTvg& tvg, Time p, const SolverOptions& opts = {});

// --- combs -------------------------------------------------------------------

// Online policy from a backbone end: take each arm when its junction is
// reached, otherwise advance along the backbone. Optimal on periodic combs
// whose arm separations meet the spacing premise.
Solution solve_comb_online(const NormalizedTvg& tvg);

// --- uniform spiders ---------------------------------------------------------

struct NoWaitDecision {
    bool feasible = false;
    Time budget = 0;  // 2n - l - d with n counting non-center vertices
    std::optional<Journey> witness;
};

// Decides whether a wait-free covering walk of exactly the zero-slack budget
// exists, via perfect bipartite matching between arms and time blocks.
NoWaitDecision decide_uniform_spider_no_wait(const NormalizedTvg& tvg);

}  // namespace dmvp
