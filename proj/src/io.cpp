#include "dmvp/io.hpp"

#include <algorithm>

#include <json.hpp>

namespace dmvp {

namespace {

using nlohmann::json;

json parse_json(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& err) {
        throw ParseError(std::string("invalid JSON: ") + err.what());
    }
}

Time require_int(const json& j, const std::string& where) {
    if (!j.is_number_integer())
        throw ParseError(where + " must be an integer");
    return j.get<Time>();
}

const json& require_field(const json& obj, const char* key, const std::string& where) {
    auto it = obj.find(key);
    if (it == obj.end()) throw ParseError(where + " is missing field \"" + key + "\"");
    return *it;
}

}  // namespace

TvgInstance parse_instance(const std::string& text) {
    json j = parse_json(text);
    if (!j.is_object()) throw ParseError("instance must be a JSON object");

    TvgInstance inst;
    inst.n = static_cast<int>(require_int(require_field(j, "n", "instance"), "\"n\""));

    const json& edges = require_field(j, "edges", "instance");
    if (!edges.is_array()) throw ParseError("\"edges\" must be an array");
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const json& e = edges[i];
        const std::string where = "edge " + std::to_string(i);
        if (!e.is_array() || e.size() != 2) throw ParseError(where + " must be a pair [u,v]");
        Vertex u = static_cast<Vertex>(require_int(e[0], where));
        Vertex v = static_cast<Vertex>(require_int(e[1], where));
        if (u > v) std::swap(u, v);
        inst.edges.push_back(Edge{u, v});
    }

    const json& snaps = require_field(j, "snapshots", "instance");
    if (!snaps.is_array()) throw ParseError("\"snapshots\" must be an array");
    for (std::size_t s = 0; s < snaps.size(); ++s) {
        const std::string where = "snapshot " + std::to_string(s);
        const json& snap = snaps[s];
        if (!snap.is_object()) throw ParseError(where + " must be an object");
        Snapshot out;
        out.duration = require_int(require_field(snap, "duration", where), where + " duration");
        const json& active = require_field(snap, "active", where);
        if (!active.is_array()) throw ParseError(where + " \"active\" must be an array");
        for (const json& e : active)
            out.active.push_back(static_cast<EdgeId>(require_int(e, where + " active entry")));
        std::sort(out.active.begin(), out.active.end());
        inst.snapshots.push_back(std::move(out));
    }

    inst.start = static_cast<Vertex>(require_int(require_field(j, "start", "instance"), "\"start\""));

    if (auto it = j.find("hint"); it != j.end() && !it->is_null()) {
        const json& h = *it;
        if (!h.is_object()) throw ParseError("\"hint\" must be an object");
        ClassHint hint;
        std::string kind = require_field(h, "kind", "hint").get<std::string>();
        if (kind == "R")
            hint.kind = TvgClassKind::R;
        else if (kind == "B")
            hint.kind = TvgClassKind::B;
        else if (kind == "P")
            hint.kind = TvgClassKind::P;
        else
            throw ParseError("hint kind must be one of R, B, P");
        if (auto d = h.find("delta"); d != h.end() && !d->is_null())
            hint.delta = require_int(*d, "hint delta");
        if (auto p = h.find("period"); p != h.end() && !p->is_null())
            hint.period = require_int(*p, "hint period");
        inst.hint = hint;
    }

    inst.check();
    return inst;
}

std::string serialize_instance(const TvgInstance& inst) {
    json j;
    j["n"] = inst.n;
    json edges = json::array();
    for (const Edge& e : inst.edges) edges.push_back(json::array({e.u, e.v}));
    j["edges"] = std::move(edges);
    json snaps = json::array();
    for (const Snapshot& s : inst.snapshots) {
        json snap;
        snap["duration"] = s.duration;
        snap["active"] = s.active;
        snaps.push_back(std::move(snap));
    }
    j["snapshots"] = std::move(snaps);
    j["start"] = inst.start;
    if (inst.hint) {
        json h;
        switch (inst.hint->kind) {
            case TvgClassKind::R: h["kind"] = "R"; break;
            case TvgClassKind::B: h["kind"] = "B"; break;
            case TvgClassKind::P: h["kind"] = "P"; break;
        }
        if (inst.hint->delta) h["delta"] = *inst.hint->delta;
        if (inst.hint->period) h["period"] = *inst.hint->period;
        j["hint"] = std::move(h);
    }
    return j.dump(2) + "\n";
}

Journey parse_journey(const std::string& text) {
    json j = parse_json(text);
    if (!j.is_object()) throw ParseError("journey must be a JSON object");
    Journey out;
    out.startVertex = static_cast<Vertex>(require_int(require_field(j, "start", "journey"), "\"start\""));
    out.startTime = require_int(require_field(j, "startTime", "journey"), "\"startTime\"");
    const json& moves = require_field(j, "moves", "journey");
    if (!moves.is_array()) throw ParseError("\"moves\" must be an array");
    for (std::size_t i = 0; i < moves.size(); ++i) {
        const std::string where = "move " + std::to_string(i);
        const json& m = moves[i];
        if (!m.is_object()) throw ParseError(where + " must be an object");
        Move move;
        move.t = require_int(require_field(m, "t", where), where + " t");
        move.edge = static_cast<EdgeId>(require_int(require_field(m, "edge", where), where + " edge"));
        out.moves.push_back(move);
    }
    return out;
}

std::string serialize_journey(const Journey& journey) {
    json j;
    j["start"] = journey.startVertex;
    j["startTime"] = journey.startTime;
    json moves = json::array();
    for (const Move& m : journey.moves) {
        json move;
        move["t"] = m.t;
        move["edge"] = m.edge;
        moves.push_back(std::move(move));
    }
    j["moves"] = std::move(moves);
    return j.dump(2) + "\n";
}

}  // namespace dmvp
