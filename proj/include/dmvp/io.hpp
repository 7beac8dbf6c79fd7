#pragma once

#include <string>

#include "dmvp/types.hpp"

namespace dmvp {

// Instance file schema (UTF-8 JSON, integers only):
//   {"n": int, "edges": [[u,v],...],
//    "snapshots": [{"duration": int, "active": [edgeIdx,...]},...],
//    "start": int,
//    "hint": {"kind": "R"|"B"|"P", "delta": int?, "period": int?}?}
TvgInstance parse_instance(const std::string& text);
std::string serialize_instance(const TvgInstance& instance);

// Journey file schema:
//   {"start": int, "startTime": int, "moves": [{"t": int, "edge": int},...]}
Journey parse_journey(const std::string& text);
std::string serialize_journey(const Journey& journey);

}  // namespace dmvp
