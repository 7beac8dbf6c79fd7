#include "dmvp/walks.hpp"

namespace dmvp {

EdgeId find_edge(const NormalizedTvg& tvg, Vertex a, Vertex b) {
    for (auto [e, w] : tvg.adj[static_cast<std::size_t>(a)])
        if (w == b) return e;
    return -1;
}

std::optional<Journey> time_walk(const NormalizedTvg& tvg, const std::vector<Vertex>& walk,
                                 Time startTime, const std::vector<char>* edgeMask) {
    Journey journey;
    if (walk.empty()) return journey;
    journey.startVertex = walk.front();
    journey.startTime = startTime;
    Time now = startTime;
    for (std::size_t i = 0; i + 1 < walk.size(); ++i) {
        EdgeId e = find_edge(tvg, walk[i], walk[i + 1]);
        if (e < 0) throw PreconditionError("walk uses a non-edge");
        if (edgeMask != nullptr && (*edgeMask)[static_cast<std::size_t>(e)] == 0)
            return std::nullopt;
        while (now < tvg.totalSteps && !tvg.edge_present(e, now)) ++now;
        if (now >= tvg.totalSteps) return std::nullopt;
        journey.moves.push_back(Move{e, now});
        ++now;
    }
    return journey;
}

}  // namespace dmvp
