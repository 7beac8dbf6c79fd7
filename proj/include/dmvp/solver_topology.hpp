#pragma once

#include "dmvp/topology.hpp"
#include "dmvp/types.hpp"

namespace dmvp {

// Simulates the two turn-free walks (left-first, right-first) in lockstep,
// advancing each greedily; O(T').
Solution solve_path(const NormalizedTvg& tvg);

// Enumerates the 2(n-1) turn-free candidate walks (per final vertex: one for
// each unused incident edge) and times each greedily; O(T'n).
Solution solve_cycle(const NormalizedTvg& tvg);

// Held-Karp over orderings of the leaves with foremost-journey legs.
Solution solve_tree_leaf_dp(const NormalizedTvg& tvg, const TopologyInfo& info,
                            const SolverOptions& opts = {});

// m-leaf c-almost-tree solver: enumerates spanning subgraphs obtained by
// dropping at most one edge from up to c cycle chains, then orders leaves plus
// directed chain traversals on each candidate with legs restricted to it.
Solution solve_almost_tree(const NormalizedTvg& tvg, const TopologyInfo& info,
                           const SolverOptions& opts = {});

}  // namespace dmvp
