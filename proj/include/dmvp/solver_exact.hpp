#pragma once

#include "dmvp/foremost.hpp"
#include "dmvp/types.hpp"

namespace dmvp {

// Exact coverage optimum via subset DP over vertices with foremost-journey
// legs; O(T'n^3 + n^2 2^n).
Solution solve_exact_subset_dp(const NormalizedTvg& tvg, const SolverOptions& opts = {});

// Exact optimum by breadth-first search over (vertex, visited set, time)
// states; the testing oracle. Refuses instances above the state bound.
Solution solve_brute_force(const NormalizedTvg& tvg, const SolverOptions& opts = {});

}  // namespace dmvp
