#pragma once

#include <array>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace dmvp {

using Time = std::int64_t;
using Vertex = int;
using EdgeId = int;

// Sentinel for "no journey exists within the horizon". Strictly larger than
// any feasible temporal length; arithmetic on it saturates.
inline constexpr Time kUnreachable = std::numeric_limits<Time>::max() / 4;

constexpr bool is_reachable(Time t) { return t < kUnreachable; }

constexpr Time sat_add(Time a, Time b) {
    return (a >= kUnreachable || b >= kUnreachable) ? kUnreachable : a + b;
}

struct DmvpError : std::runtime_error {
    explicit DmvpError(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed input text (bad JSON, wrong field types).
struct ParseError : DmvpError {
    using DmvpError::DmvpError;
};

// Structurally invalid instance (disconnected graph, zero duration, ...).
struct ValidationError : DmvpError {
    using DmvpError::DmvpError;
};

// Operation not applicable to this input, or a configured bound exceeded.
struct PreconditionError : DmvpError {
    using DmvpError::DmvpError;
};

// Undirected edge, stored canonically with u < v.
struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    Vertex other(Vertex w) const { return w == u ? v : u; }
    bool touches(Vertex w) const { return w == u || w == v; }
    friend bool operator==(const Edge&, const Edge&) = default;
};

struct Snapshot {
    Time duration = 0;
    std::vector<EdgeId> active;  // sorted, no duplicates
};

enum class TvgClassKind { R, B, P };

struct ClassHint {
    TvgClassKind kind = TvgClassKind::R;
    std::optional<Time> delta;
    std::optional<Time> period;
};

// A time-varying graph given as a static underlying graph plus an ordered
// sequence of (active edge set, duration) snapshots, starting at time 0.
struct TvgInstance {
    int n = 0;
    std::vector<Edge> edges;
    std::vector<Snapshot> snapshots;
    Vertex start = 0;
    std::optional<ClassHint> hint;

    Time total_duration() const;

    // Verifies every structural invariant; throws ValidationError naming the
    // offending field.
    void check() const;
};

// Per-vertex incidence lists, sorted by edge id.
std::vector<std::vector<std::pair<EdgeId, Vertex>>>
build_adjacency(int n, const std::vector<Edge>& edges);

bool underlying_connected(int n, const std::vector<Edge>& edges);

struct Move {
    EdgeId edge = 0;
    Time t = 0;  // departure time
    friend bool operator==(const Move&, const Move&) = default;
};

// Timed walk. Waiting is implicit in gaps between consecutive move times.
struct Journey {
    Vertex startVertex = 0;
    Time startTime = 0;
    std::vector<Move> moves;

    Time arrival_time() const { return moves.empty() ? startTime : moves.back().t + 1; }
    Time temporal_length() const { return arrival_time() - startTime; }
    Time topological_length() const { return static_cast<Time>(moves.size()); }
    friend bool operator==(const Journey&, const Journey&) = default;
};

// Instance with snapshot durations capped (each static snapshot need only be
// considered for 2n-3 steps) plus the skip map needed to translate costs and
// times back to the original timeline.
struct NormalizedTvg {
    TvgInstance base;                  // capped durations
    std::vector<int> stepToSnapshot;   // size totalSteps
    std::vector<Time> skip;            // size totalSteps+1; skip[tau] = time removed before tau
    Time totalSteps = 0;               // T'

    // presence[snapshot][edge]
    std::vector<std::vector<char>> presence;
    std::vector<std::vector<std::pair<EdgeId, Vertex>>> adj;

    int vertex_count() const { return base.n; }
    int edge_count() const { return static_cast<int>(base.edges.size()); }

    bool edge_present(EdgeId e, Time t) const {
        return presence[static_cast<std::size_t>(stepToSnapshot[static_cast<std::size_t>(t)])]
                       [static_cast<std::size_t>(e)] != 0;
    }
};

struct ClassReport {
    bool isR = false;
    // Smallest window size such that every edge appears in every window of the
    // horizon; empty when some edge never appears.
    std::optional<Time> minDeltaObserved;
    // Every period consistent with the observed presence function, ascending.
    std::vector<Time> periods;
};

struct Violation {
    int moveIndex = -1;
    std::string reason;
};

struct CoverageReport {
    bool valid = false;
    std::optional<Violation> firstViolation;
    std::vector<char> visitedVertices;  // size n; marks up to the first violation
    bool coversAll = false;
    Time temporalLength = 0;
};

struct SolveStats {
    std::int64_t statesExpanded = 0;
    std::int64_t candidatesExamined = 0;
};

struct Solution {
    Time cost = kUnreachable;  // temporal length on the solver's timeline
    Journey journey;           // witness; empty when unreachable
    std::string algorithm;
    SolveStats stats;
    std::string note;          // optional diagnostic, e.g. recurrence violation

    bool reachable() const { return is_reachable(cost); }
};

struct SolverOptions {
    int maxBruteVertices = 16;     // brute-force oracle guard
    int maxSubsetDpVertices = 18;  // subset DP memory guard
    int maxLeafElements = 12;      // Held-Karp element bound for tree/almost-tree
    int maxAlmostTreeC = 3;
    Time maxPeriod = 4;            // spider periodic solver bound
    std::int64_t maxSpiderStates = 4'000'000;
};

}  // namespace dmvp
