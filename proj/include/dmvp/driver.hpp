#pragma once

#include <string>

#include "dmvp/types.hpp"

namespace dmvp {

struct SolveRequest {
    std::string algo = "auto";
    std::optional<Time> delta;   // overrides hint / observed value
    std::optional<Time> period;  // overrides hint / observed value
    SolverOptions options;
};

struct SolveOutcome {
    Solution solution;  // cost and journey on the original timeline
    Time tprime = 0;
};

// Parses nothing; takes a checked instance, normalizes it, dispatches to the
// requested solver (or picks one for "auto"), and maps the result back to the
// original timeline. Throws PreconditionError when the requested algorithm
// does not apply.
SolveOutcome dispatch_solve(const TvgInstance& instance, const SolveRequest& request);

// Names accepted for SolveRequest::algo.
const std::vector<std::string>& algorithm_names();

}  // namespace dmvp
