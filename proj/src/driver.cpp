#include "dmvp/driver.hpp"

#include <algorithm>

#include "dmvp/solver_approx.hpp"
#include "dmvp/solver_exact.hpp"
#include "dmvp/solver_periodic.hpp"
#include "dmvp/solver_topology.hpp"
#include "dmvp/tvg_ops.hpp"

namespace dmvp {

const std::vector<std::string>& algorithm_names() {
    static const std::vector<std::string> names{
        "auto",        "exact",       "brute",           "path",
        "cycle",       "tree",        "almost-tree",     "tree-b-approx",
        "spanning-approx", "p2-tree", "spider-p",        "comb-online",
        "uniform-nowait"};
    return names;
}

namespace {

Time resolve_delta(const TvgInstance& instance, const SolveRequest& req) {
    if (req.delta) return *req.delta;
    if (instance.hint && instance.hint->delta) return *instance.hint->delta;
    ClassReport report = classify(instance);
    if (!report.minDeltaObserved)
        throw PreconditionError("no delta available: pass one or provide a hint");
    return *report.minDeltaObserved;
}

Time resolve_period(const TvgInstance& instance, const SolveRequest& req, Time maxPeriod) {
    if (req.period) return *req.period;
    if (instance.hint && instance.hint->period) return *instance.hint->period;
    ClassReport report = classify(instance);
    for (Time p : report.periods)
        if (p <= maxPeriod) return p;
    throw PreconditionError("no usable period: pass one or provide a hint");
}

Solution pick_auto(const TvgInstance& instance, const NormalizedTvg& ntvg,
                   const SolveRequest& req) {
    TopologyInfo info = detect_topology(instance);
    const SolverOptions& opts = req.options;

    if (info.isPath) return solve_path(ntvg);
    if (info.isCycle) return solve_cycle(ntvg);
    if (info.isTree) {
        int elements = 0;
        for (Vertex l : info.leaves)
            if (l != instance.start) ++elements;
        if (elements <= opts.maxLeafElements) return solve_tree_leaf_dp(ntvg, info, opts);
        if (infer_p2_types(ntvg)) return solve_tree_p2(ntvg);
        if (info.isSpider) {
            ClassReport report = classify(instance);
            for (Time p : report.periods)
                if (p <= opts.maxPeriod) return solve_spider_fixed_p(ntvg, p, opts);
        }
    }
    if (!info.isTree && info.c <= opts.maxAlmostTreeC) {
        int worst = static_cast<int>(info.leaves.size() + info.degree2Paths.size()) +
                    std::min(info.c, static_cast<int>(info.degree2Paths.size()));
        if (worst <= opts.maxLeafElements) return solve_almost_tree(ntvg, info, opts);
    }
    return solve_exact_subset_dp(ntvg, opts);
}

}  // namespace

SolveOutcome dispatch_solve(const TvgInstance& instance, const SolveRequest& req) {
    instance.check();
    NormalizedTvg ntvg = normalize(instance);

    Solution sol;
    const std::string& algo = req.algo;
    if (algo == "auto") {
        sol = pick_auto(instance, ntvg, req);
    } else if (algo == "exact") {
        sol = solve_exact_subset_dp(ntvg, req.options);
    } else if (algo == "brute") {
        sol = solve_brute_force(ntvg, req.options);
    } else if (algo == "path") {
        sol = solve_path(ntvg);
    } else if (algo == "cycle") {
        sol = solve_cycle(ntvg);
    } else if (algo == "tree") {
        sol = solve_tree_leaf_dp(ntvg, detect_topology(instance), req.options);
    } else if (algo == "almost-tree") {
        sol = solve_almost_tree(ntvg, detect_topology(instance), req.options);
    } else if (algo == "tree-b-approx") {
        sol = approx_delta_tree(ntvg, resolve_delta(instance, req));
    } else if (algo == "spanning-approx") {
        sol = approx_spanning_traversal(ntvg, resolve_delta(instance, req));
    } else if (algo == "p2-tree") {
        sol = solve_tree_p2(ntvg);
    } else if (algo == "spider-p") {
        sol = solve_spider_fixed_p(ntvg, resolve_period(instance, req, req.options.maxPeriod),
                                   req.options);
    } else if (algo == "comb-online") {
        sol = solve_comb_online(ntvg);
    } else if (algo == "uniform-nowait") {
        NoWaitDecision decision = decide_uniform_spider_no_wait(ntvg);
        sol.algorithm = "uniform-nowait";
        if (decision.feasible) {
            sol.cost = decision.budget;
            sol.journey = *decision.witness;
        } else {
            sol.cost = kUnreachable;
            sol.note = "no wait-free covering walk at the zero-slack budget";
        }
    } else {
        throw PreconditionError("unknown algorithm \"" + algo + "\"");
    }

    SolveOutcome outcome;
    outcome.tprime = ntvg.totalSteps;
    if (sol.reachable()) {
        sol.journey = denormalize_journey(ntvg, sol.journey);
        sol.cost = denormalize_cost(ntvg, sol.cost);
    }
    outcome.solution = std::move(sol);
    return outcome;
}

}  // namespace dmvp
