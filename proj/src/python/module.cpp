#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "dmvp/driver.hpp"
#include "dmvp/generators.hpp"
#include "dmvp/io.hpp"
#include "dmvp/solver_exact.hpp"
#include "dmvp/topology.hpp"
#include "dmvp/tvg_ops.hpp"

namespace py = pybind11;
using namespace dmvp;

namespace {

py::dict journey_to_dict(const Journey& j) {
    py::list moves;
    for (const Move& m : j.moves) {
        py::dict mv;
        mv["edge"] = m.edge;
        mv["t"] = m.t;
        moves.append(mv);
    }
    py::dict out;
    out["start"] = j.startVertex;
    out["startTime"] = j.startTime;
    out["moves"] = moves;
    return out;
}

py::dict solution_to_dict(const Solution& sol, Time tprime) {
    py::dict out;
    out["algorithm"] = sol.algorithm;
    out["status"] = sol.reachable() ? "ok" : "unreachable";
    if (sol.reachable()) {
        out["cost"] = sol.cost;
        out["journey"] = journey_to_dict(sol.journey);
    }
    if (!sol.note.empty()) out["note"] = sol.note;
    py::dict stats;
    stats["states_expanded"] = sol.stats.statesExpanded;
    stats["candidates_examined"] = sol.stats.candidatesExamined;
    out["stats"] = stats;
    out["tprime"] = tprime;
    return out;
}

SolveRequest make_request(const std::string& algo, py::object delta, py::object period) {
    SolveRequest req;
    req.algo = algo;
    if (!delta.is_none()) req.delta = delta.cast<Time>();
    if (!period.is_none()) req.period = period.cast<Time>();
    return req;
}

}  // namespace

PYBIND11_MODULE(dmvp, m) {
    m.doc() = "Foremost waypoint coverage of time-varying graphs";

    py::register_exception<ParseError>(m, "ParseError");
    py::register_exception<ValidationError>(m, "ValidationError");
    py::register_exception<PreconditionError>(m, "PreconditionError");

    py::class_<TvgInstance>(m, "TvgInstance")
        .def_property_readonly("n", [](const TvgInstance& i) { return i.n; })
        .def_property_readonly("start", [](const TvgInstance& i) { return i.start; })
        .def_property_readonly("edge_count",
                               [](const TvgInstance& i) { return i.edges.size(); })
        .def_property_readonly("snapshot_count",
                               [](const TvgInstance& i) { return i.snapshots.size(); })
        .def_property_readonly("total_duration",
                               [](const TvgInstance& i) { return i.total_duration(); })
        .def("to_json", [](const TvgInstance& i) { return serialize_instance(i); })
        .def("__repr__", [](const TvgInstance& i) {
            return "<TvgInstance n=" + std::to_string(i.n) + " edges=" +
                   std::to_string(i.edges.size()) + " T=" + std::to_string(i.total_duration()) +
                   ">";
        });

    m.def("parse_instance", &parse_instance, py::arg("text"));
    m.def("serialize_instance", &serialize_instance, py::arg("instance"));

    m.def(
        "solve",
        [](const TvgInstance& instance, const std::string& algo, py::object delta,
           py::object period) {
            SolveOutcome outcome = dispatch_solve(instance, make_request(algo, delta, period));
            return solution_to_dict(outcome.solution, outcome.tprime);
        },
        py::arg("instance"), py::arg("algo") = "auto", py::arg("delta") = py::none(),
        py::arg("period") = py::none());

    m.def(
        "oracle",
        [](const TvgInstance& instance) {
            SolveRequest req;
            req.algo = "brute";
            SolveOutcome outcome = dispatch_solve(instance, req);
            return solution_to_dict(outcome.solution, outcome.tprime);
        },
        py::arg("instance"));

    m.def(
        "classify",
        [](const TvgInstance& instance) {
            ClassReport report = classify(instance);
            py::dict out;
            out["is_r"] = report.isR;
            if (report.minDeltaObserved)
                out["min_delta_observed"] = *report.minDeltaObserved;
            else
                out["min_delta_observed"] = py::none();
            out["periods"] = report.periods;
            return out;
        },
        py::arg("instance"));

    m.def(
        "validate",
        [](const TvgInstance& instance, const std::string& journeyJson) {
            CoverageReport report = validate_journey(instance, parse_journey(journeyJson));
            py::dict out;
            out["valid"] = report.valid;
            out["covers_all"] = report.coversAll;
            out["temporal_length"] = report.temporalLength;
            if (report.firstViolation) {
                py::dict violation;
                violation["move"] = report.firstViolation->moveIndex;
                violation["reason"] = report.firstViolation->reason;
                out["violation"] = violation;
            }
            return out;
        },
        py::arg("instance"), py::arg("journey_json"));

    m.def("detect_shape",
          [](const TvgInstance& instance) {
              return std::string(shape_name(detect_topology(instance).shape));
          },
          py::arg("instance"));

    m.def(
        "gen_setcover_star",
        [](int universe, const std::vector<std::vector<int>>& sets, int k) {
            return gen_setcover_star(universe, sets, k);
        },
        py::arg("universe"), py::arg("sets"), py::arg("k"));

    m.def(
        "gen_hamiltonian_p2",
        [](int n, const std::vector<std::pair<int, int>>& edges, Vertex v0) {
            std::vector<Edge> g;
            for (auto [u, v] : edges) g.push_back(Edge{std::min(u, v), std::max(u, v)});
            return gen_hamiltonian_p2(n, g, v0);
        },
        py::arg("n"), py::arg("edges"), py::arg("v0"));

    m.def(
        "gen_random",
        [](const std::string& cls, const std::string& shape, int n, int snapshots,
           py::object delta, py::object period, int density, std::uint64_t seed) {
            RandomTvgParams params;
            if (cls == "R")
                params.cls = TvgClassKind::R;
            else if (cls == "B")
                params.cls = TvgClassKind::B;
            else if (cls == "P")
                params.cls = TvgClassKind::P;
            else
                throw PreconditionError("class must be R, B or P");
            if (shape == "general")
                params.shape = GraphShape::General;
            else if (shape == "path")
                params.shape = GraphShape::Path;
            else if (shape == "cycle")
                params.shape = GraphShape::Cycle;
            else if (shape == "tree")
                params.shape = GraphShape::Tree;
            else if (shape == "star")
                params.shape = GraphShape::Star;
            else if (shape == "spider")
                params.shape = GraphShape::Spider;
            else if (shape == "comb")
                params.shape = GraphShape::Comb;
            else
                throw PreconditionError("unknown shape \"" + shape + "\"");
            params.n = n;
            params.snapshots = snapshots;
            if (!delta.is_none()) params.delta = delta.cast<Time>();
            if (!period.is_none()) params.period = period.cast<Time>();
            params.densityPct = density;
            return gen_random_tvg(params, seed);
        },
        py::arg("cls"), py::arg("shape") = "general", py::arg("n") = 6,
        py::arg("snapshots") = 8, py::arg("delta") = py::none(), py::arg("period") = py::none(),
        py::arg("density") = 50, py::arg("seed") = 0);
}
