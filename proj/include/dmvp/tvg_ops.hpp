#pragma once

#include "dmvp/types.hpp"

namespace dmvp {

// Caps every snapshot duration at 2n-3 and records the removed time in the
// skip map; optimum(original) == optimum(normalized) + skip at the normalized
// completion time.
NormalizedTvg normalize(const TvgInstance& instance);

// Step expansion without the 2n-3 cap (skip map all zero). Used where the true
// timeline must be scanned step by step; guarded against huge horizons.
NormalizedTvg expand_uncapped(const TvgInstance& instance, Time maxSteps = 1'000'000);

// O(1) presence lookup on a normalized instance; t must be in [0, totalSteps).
bool rho(const NormalizedTvg& tvg, EdgeId edge, Time t);

// Maps a journey computed on the normalized timeline back onto the original
// instance's timeline.
Journey denormalize_journey(const NormalizedTvg& tvg, const Journey& journey);
Time denormalize_cost(const NormalizedTvg& tvg, Time normalizedCost);

// Observed-horizon class report: R membership proxy, exact minimum recurrence
// window, and every consistent period. Scans the uncapped timeline.
ClassReport classify(const TvgInstance& instance, Time maxSteps = 50'000);

// Checks walk adjacency, presence at each departure, and strictly advancing
// times. Violations are reported in the result, never thrown.
CoverageReport validate_journey(const TvgInstance& instance, const Journey& journey);

}  // namespace dmvp
