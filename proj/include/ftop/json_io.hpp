#pragma once

#include <json.hpp>

#include "ftop/lifting.hpp"
#include "ftop/space.hpp"

namespace ftop {

// Space: {"points": [names...], "rel": [[x, y], ...]} with the full
//        reflexive-transitive relation by point name.
// CMap:  {"src": Space, "dst": Space, "assign": {x: y, ...}}
//
// Decoding accepts any arrow list and closes it; malformed input throws
// std::invalid_argument.

nlohmann::json to_json(const Space& s);
nlohmann::json to_json(const CMap& f);
nlohmann::json to_json(const Square& sq);
/// {"holds", "squares", "counterexample": Square|null, "fillers": {...}}
nlohmann::json to_json(const LiftCertificate& cert);

Space space_from_json(const nlohmann::json& j);
CMap map_from_json(const nlohmann::json& j);

}  // namespace ftop
