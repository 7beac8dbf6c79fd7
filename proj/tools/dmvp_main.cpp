#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "dmvp/driver.hpp"
#include "dmvp/foremost.hpp"
#include "dmvp/generators.hpp"
#include "dmvp/io.hpp"
#include "dmvp/solver_exact.hpp"
#include "dmvp/topology.hpp"
#include "dmvp/tvg_ops.hpp"

using namespace dmvp;

namespace {

// exit codes: 0 solved, 1 I/O or parse error, 2 unreachable, 3 precondition
constexpr int kOk = 0;
constexpr int kIoError = 1;
constexpr int kUnreachableExit = 2;
constexpr int kPreconditionExit = 3;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError("cannot open " + path + " for writing");
    out << content;
}

SolverOptions options_from_env() {
    SolverOptions opts;
    if (const char* bound = std::getenv("DMVP_STATE_BOUND")) {
        opts.maxBruteVertices = std::atoi(bound);
    }
    return opts;
}

nlohmann::json journey_json(const Journey& j) {
    nlohmann::json out;
    out["start"] = j.startVertex;
    out["startTime"] = j.startTime;
    nlohmann::json moves = nlohmann::json::array();
    for (const Move& m : j.moves) {
        nlohmann::json mv;
        mv["t"] = m.t;
        mv["edge"] = m.edge;
        moves.push_back(std::move(mv));
    }
    out["moves"] = std::move(moves);
    return out;
}

int emit_solution(const SolveOutcome& outcome, bool json, const std::string& outPath) {
    const Solution& sol = outcome.solution;
    if (json) {
        nlohmann::json j;
        j["algorithm"] = sol.algorithm;
        j["status"] = sol.reachable() ? "ok" : "unreachable";
        if (sol.reachable()) {
            j["cost"] = sol.cost;
            j["journey"] = journey_json(sol.journey);
        }
        if (!sol.note.empty()) j["note"] = sol.note;
        j["stats"] = {{"candidates_examined", sol.stats.candidatesExamined},
                      {"states_expanded", sol.stats.statesExpanded}};
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "status " << (sol.reachable() ? "ok" : "unreachable") << "\n";
        std::cout << "algorithm " << sol.algorithm << "\n";
        if (sol.reachable()) {
            std::cout << "cost " << sol.cost << "\n";
            std::cout << "moves " << sol.journey.moves.size() << "\n";
        }
        std::cout << "states_expanded " << sol.stats.statesExpanded << "\n";
        std::cout << "candidates_examined " << sol.stats.candidatesExamined << "\n";
        if (!sol.note.empty()) std::cerr << "note: " << sol.note << "\n";
    }
    if (!outPath.empty() && sol.reachable())
        write_file(outPath, serialize_journey(sol.journey));
    return sol.reachable() ? kOk : kUnreachableExit;
}

struct GenerateArgs {
    std::string kind;
    std::string out;
    // set cover
    int universe = 0;
    std::string sets;  // "1,2,4;2,4;3,4;3,5"
    int k = 1;
    // 3-partition
    std::string numbers;  // "2,3,4,4,5,8"
    Time delta = 2;
    Time longArm = -1;
    // hamiltonian
    std::string graphEdges;  // "0-1,1-2,..."
    int graphN = 0;
    Vertex v0 = 0;
    // random
    std::string cls = "R";
    std::string shape = "general";
    int n = 6;
    int snapshots = 8;
    Time period = 2;
    bool periodSet = false;
    bool deltaSet = false;
    int density = 50;
    Time maxDuration = 3;
    int extraEdges = 1;
    int armCount = 3;
    int armLen = 2;
    std::uint64_t seed = 0;
};

std::vector<std::vector<int>> parse_sets(const std::string& text) {
    std::vector<std::vector<int>> sets;
    std::stringstream outer(text);
    std::string group;
    while (std::getline(outer, group, ';')) {
        std::vector<int> set;
        std::stringstream inner(group);
        std::string item;
        while (std::getline(inner, item, ',')) set.push_back(std::stoi(item));
        sets.push_back(std::move(set));
    }
    return sets;
}

std::vector<Time> parse_numbers(const std::string& text) {
    std::vector<Time> numbers;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) numbers.push_back(std::stoll(item));
    return numbers;
}

std::vector<Edge> parse_edge_list(const std::string& text) {
    std::vector<Edge> edges;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        auto dash = item.find('-');
        if (dash == std::string::npos) throw ParseError("edge list entries look like u-v");
        Vertex u = std::stoi(item.substr(0, dash));
        Vertex v = std::stoi(item.substr(dash + 1));
        edges.push_back(u < v ? Edge{u, v} : Edge{v, u});
    }
    return edges;
}

GraphShape shape_from_name(const std::string& name) {
    if (name == "general") return GraphShape::General;
    if (name == "path") return GraphShape::Path;
    if (name == "cycle") return GraphShape::Cycle;
    if (name == "tree") return GraphShape::Tree;
    if (name == "star") return GraphShape::Star;
    if (name == "spider") return GraphShape::Spider;
    if (name == "comb") return GraphShape::Comb;
    if (name == "almost-tree") return GraphShape::AlmostTree;
    if (name == "uniform-spider") return GraphShape::UniformSpider;
    throw PreconditionError("unknown shape \"" + name + "\"");
}

int run_generate(const GenerateArgs& args) {
    TvgInstance inst;
    std::optional<Time> longArm;
    if (args.longArm >= 0) longArm = args.longArm;
    if (args.kind == "setcover-star") {
        inst = gen_setcover_star(args.universe, parse_sets(args.sets), args.k);
    } else if (args.kind == "setcover-comb") {
        inst = gen_setcover_comb(args.universe, parse_sets(args.sets), args.k);
    } else if (args.kind == "3partition-spider") {
        inst = gen_3partition_spider(parse_numbers(args.numbers), args.delta, longArm);
    } else if (args.kind == "3partition-comb") {
        inst = gen_3partition_comb(parse_numbers(args.numbers), args.delta, longArm);
    } else if (args.kind == "hamiltonian-p2") {
        inst = gen_hamiltonian_p2(args.graphN, parse_edge_list(args.graphEdges), args.v0);
    } else if (args.kind == "random") {
        RandomTvgParams params;
        if (args.cls == "R")
            params.cls = TvgClassKind::R;
        else if (args.cls == "B")
            params.cls = TvgClassKind::B;
        else if (args.cls == "P")
            params.cls = TvgClassKind::P;
        else
            throw PreconditionError("class must be R, B or P");
        params.shape = shape_from_name(args.shape);
        params.n = args.n;
        params.snapshots = args.snapshots;
        if (args.deltaSet) params.delta = args.delta;
        if (args.periodSet) params.period = args.period;
        params.densityPct = args.density;
        params.maxDuration = args.maxDuration;
        params.extraEdges = args.extraEdges;
        params.armCount = args.armCount;
        params.armLen = args.armLen;
        inst = gen_random_tvg(params, args.seed);
    } else {
        throw PreconditionError("unknown generator kind \"" + args.kind + "\"");
    }
    std::string text = serialize_instance(inst);
    if (args.out.empty())
        std::cout << text;
    else
        write_file(args.out, text);
    return kOk;
}

struct BenchArgs {
    std::string family;  // key=value comma list
    std::string algos;
    std::uint64_t seedFrom = 0;
    std::uint64_t seedTo = 9;
    bool timings = false;
    std::string out;
};

int run_bench(const BenchArgs& args) {
    RandomTvgParams params;
    std::stringstream in(args.family);
    std::string item;
    while (std::getline(in, item, ',')) {
        auto eq = item.find('=');
        if (eq == std::string::npos) throw ParseError("family entries look like key=value");
        std::string key = item.substr(0, eq);
        std::string value = item.substr(eq + 1);
        if (key == "class") {
            if (value == "R") params.cls = TvgClassKind::R;
            else if (value == "B") params.cls = TvgClassKind::B;
            else if (value == "P") params.cls = TvgClassKind::P;
            else throw PreconditionError("class must be R, B or P");
        } else if (key == "shape") {
            params.shape = shape_from_name(value);
        } else if (key == "n") {
            params.n = std::stoi(value);
        } else if (key == "snapshots") {
            params.snapshots = std::stoi(value);
        } else if (key == "delta") {
            params.delta = std::stoll(value);
        } else if (key == "period") {
            params.period = std::stoll(value);
        } else if (key == "density") {
            params.densityPct = std::stoi(value);
        } else if (key == "max-duration") {
            params.maxDuration = std::stoll(value);
        } else if (key == "extra-edges") {
            params.extraEdges = std::stoi(value);
        } else {
            throw PreconditionError("unknown family key \"" + key + "\"");
        }
    }
    std::vector<std::string> algos;
    std::stringstream algoIn(args.algos);
    while (std::getline(algoIn, item, ',')) algos.push_back(item);
    if (algos.empty()) throw PreconditionError("no algorithms given");

    std::ostringstream csv;
    csv << "family,seed,algo,n,tprime,cost,exact_cost,ratio_x100";
    if (args.timings) csv << ",wall_ms";
    csv << "\n";

    // keep the family cell free of the CSV separator
    std::string familyCell = args.family;
    std::replace(familyCell.begin(), familyCell.end(), ',', ';');

    SolverOptions opts = options_from_env();
    for (std::uint64_t seed = args.seedFrom; seed <= args.seedTo; ++seed) {
        TvgInstance inst = gen_random_tvg(params, seed);
        Time exactCost = kUnreachable;
        {
            SolveRequest req;
            req.algo = "exact";
            req.options = opts;
            if (inst.n <= opts.maxSubsetDpVertices)
                exactCost = dispatch_solve(inst, req).solution.cost;
        }
        for (const std::string& algo : algos) {
            SolveRequest req;
            req.algo = algo;
            req.options = opts;
            auto before = std::chrono::steady_clock::now();
            SolveOutcome outcome = dispatch_solve(inst, req);
            auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                               std::chrono::steady_clock::now() - before)
                               .count();
            csv << familyCell << "," << seed << "," << algo << "," << inst.n << ","
                << outcome.tprime << ",";
            if (outcome.solution.reachable())
                csv << outcome.solution.cost;
            else
                csv << "unreachable";
            csv << ",";
            if (is_reachable(exactCost))
                csv << exactCost;
            else
                csv << "unreachable";
            csv << ",";
            if (outcome.solution.reachable() && is_reachable(exactCost) && exactCost > 0)
                csv << outcome.solution.cost * 100 / exactCost;
            else
                csv << "";
            if (args.timings) csv << "," << elapsed;
            csv << "\n";
        }
    }
    if (args.out.empty())
        std::cout << csv.str();
    else
        write_file(args.out, csv.str());
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Foremost waypoint coverage of time-varying graphs"};
    app.require_subcommand(1);

    // solve
    auto* solve = app.add_subcommand("solve", "Solve an instance");
    std::string solveInput, solveAlgo = "auto", solveOut;
    bool solveJson = false;
    Time solveDelta = -1, solvePeriod = -1;
    solve->add_option("--input", solveInput, "instance file")->required();
    solve->add_option("--algo", solveAlgo, "algorithm")->check(CLI::IsMember(algorithm_names()));
    solve->add_option("--delta", solveDelta, "recurrence bound for approximations");
    solve->add_option("--period", solvePeriod, "period for periodic solvers");
    solve->add_option("--out", solveOut, "write the witness journey here");
    solve->add_flag("--json", solveJson, "emit the full structure as JSON");

    // oracle
    auto* oracle = app.add_subcommand("oracle", "Brute-force optimum (testing oracle)");
    std::string oracleInput, oracleOut;
    bool oracleJson = false;
    oracle->add_option("--input", oracleInput, "instance file")->required();
    oracle->add_option("--out", oracleOut, "write the witness journey here");
    oracle->add_flag("--json", oracleJson, "emit the full structure as JSON");

    // classify
    auto* classifyCmd = app.add_subcommand("classify", "Report observed class parameters");
    std::string classifyInput;
    bool classifyJson = false;
    classifyCmd->add_option("--input", classifyInput, "instance file")->required();
    classifyCmd->add_flag("--json", classifyJson, "emit JSON");

    // validate
    auto* validate = app.add_subcommand("validate", "Validate a journey against an instance");
    std::string validateInput, validateJourney;
    bool validateJson = false;
    validate->add_option("--input", validateInput, "instance file")->required();
    validate->add_option("--journey", validateJourney, "journey file")->required();
    validate->add_flag("--json", validateJson, "emit JSON");

    // generate
    auto* generate = app.add_subcommand("generate", "Emit an instance");
    GenerateArgs gen;
    generate->add_option("kind", gen.kind,
        "setcover-star|setcover-comb|3partition-spider|3partition-comb|hamiltonian-p2|random")
        ->required();
    generate->add_option("--out", gen.out, "output file (stdout otherwise)");
    generate->add_option("--universe", gen.universe, "set cover universe size");
    generate->add_option("--sets", gen.sets, "set family, e.g. 1,2,4;2,4;3,5");
    generate->add_option("--k", gen.k, "cover size bound");
    generate->add_option("--numbers", gen.numbers, "3-partition multiset, e.g. 2,3,4,4,5,8");
    auto* deltaOpt = generate->add_option("--delta", gen.delta, "recurrence bound");
    generate->add_option("--long-arm", gen.longArm, "override the long arm length");
    generate->add_option("--graph", gen.graphEdges, "edge list u-v,u-v for hamiltonian-p2");
    generate->add_option("--graph-n", gen.graphN, "vertex count for hamiltonian-p2");
    generate->add_option("--v0", gen.v0, "start vertex for hamiltonian-p2");
    generate->add_option("--class", gen.cls, "R|B|P for random");
    generate->add_option("--shape", gen.shape, "underlying graph shape for random");
    generate->add_option("--n", gen.n, "vertex count for random");
    generate->add_option("--snapshots", gen.snapshots, "snapshot count / horizon for random");
    auto* periodOpt = generate->add_option("--period", gen.period, "period for random P");
    generate->add_option("--density", gen.density, "presence density percent");
    generate->add_option("--max-duration", gen.maxDuration, "max snapshot duration (R)");
    generate->add_option("--extra-edges", gen.extraEdges, "cycle edges for almost-tree");
    generate->add_option("--arm-count", gen.armCount, "arms for uniform-spider");
    generate->add_option("--arm-len", gen.armLen, "arm length for uniform-spider");
    generate->add_option("--seed", gen.seed, "random seed");

    // bench
    auto* bench = app.add_subcommand("bench", "CSV comparison across seeds and algorithms");
    BenchArgs benchArgs;
    bench->add_option("--family", benchArgs.family, "key=value list for gen random")->required();
    bench->add_option("--algos", benchArgs.algos, "comma-separated algorithms")->required();
    bench->add_option("--seed-from", benchArgs.seedFrom, "first seed");
    bench->add_option("--seed-to", benchArgs.seedTo, "last seed");
    bench->add_flag("--timings", benchArgs.timings, "include wall-clock times");
    bench->add_option("--out", benchArgs.out, "output file (stdout otherwise)");

    // foremost (debugging dump)
    auto* fm = app.add_subcommand("foremost", "Dump the t=0 foremost-length matrix");
    std::string fmInput;
    fm->add_option("--input", fmInput, "instance file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        SolverOptions opts = options_from_env();
        if (solve->parsed()) {
            TvgInstance inst = parse_instance(read_file(solveInput));
            SolveRequest req;
            req.algo = solveAlgo;
            req.options = opts;
            if (solveDelta >= 0) req.delta = solveDelta;
            if (solvePeriod >= 0) req.period = solvePeriod;
            return emit_solution(dispatch_solve(inst, req), solveJson, solveOut);
        }
        if (oracle->parsed()) {
            TvgInstance inst = parse_instance(read_file(oracleInput));
            SolveRequest req;
            req.algo = "brute";
            req.options = opts;
            return emit_solution(dispatch_solve(inst, req), oracleJson, oracleOut);
        }
        if (classifyCmd->parsed()) {
            TvgInstance inst = parse_instance(read_file(classifyInput));
            ClassReport report = classify(inst);
            if (classifyJson) {
                nlohmann::json j;
                j["is_r"] = report.isR;
                if (report.minDeltaObserved)
                    j["min_delta_observed"] = *report.minDeltaObserved;
                else
                    j["min_delta_observed"] = nullptr;
                j["periods"] = report.periods;
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << "is_r " << (report.isR ? "true" : "false") << "\n";
                std::cout << "min_delta_observed ";
                if (report.minDeltaObserved)
                    std::cout << *report.minDeltaObserved << "\n";
                else
                    std::cout << "none\n";
                std::cout << "periods";
                for (Time p : report.periods) std::cout << " " << p;
                std::cout << "\n";
            }
            return kOk;
        }
        if (validate->parsed()) {
            TvgInstance inst = parse_instance(read_file(validateInput));
            Journey journey = parse_journey(read_file(validateJourney));
            CoverageReport report = validate_journey(inst, journey);
            if (validateJson) {
                nlohmann::json j;
                j["valid"] = report.valid;
                j["covers_all"] = report.coversAll;
                j["temporal_length"] = report.temporalLength;
                if (report.firstViolation)
                    j["violation"] = {{"move", report.firstViolation->moveIndex},
                                      {"reason", report.firstViolation->reason}};
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << "valid " << (report.valid ? "true" : "false") << "\n";
                std::cout << "covers_all " << (report.coversAll ? "true" : "false") << "\n";
                std::cout << "temporal_length " << report.temporalLength << "\n";
                if (report.firstViolation) {
                    std::cout << "violation_move " << report.firstViolation->moveIndex << "\n";
                    std::cout << "violation_reason " << report.firstViolation->reason << "\n";
                }
            }
            return (report.valid && report.coversAll) ? kOk : kUnreachableExit;
        }
        if (generate->parsed()) {
            gen.deltaSet = deltaOpt->count() > 0;
            gen.periodSet = periodOpt->count() > 0;
            return run_generate(gen);
        }
        if (bench->parsed()) return run_bench(benchArgs);
        if (fm->parsed()) {
            TvgInstance inst = parse_instance(read_file(fmInput));
            NormalizedTvg ntvg = normalize(inst);
            ForemostTable table = build_foremost_table(ntvg);
            for (Vertex u = 0; u < inst.n; ++u) {
                for (Vertex v = 0; v < inst.n; ++v) {
                    if (v) std::cout << " ";
                    Time d = table.d(0, u, v);
                    if (is_reachable(d))
                        std::cout << d;
                    else
                        std::cout << "U";
                }
                std::cout << "\n";
            }
            return kOk;
        }
    } catch (const PreconditionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kPreconditionExit;
    } catch (const DmvpError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kIoError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kIoError;
    }
    return kIoError;
}
