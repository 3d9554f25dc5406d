#pragma once

#include <string_view>

#include "ccperm/codec.hpp"
#include "ccperm/coloring.hpp"
#include "ccperm/involution.hpp"
#include "ccperm/stirling.hpp"
#include "ccperm/verify.hpp"
#include "json.hpp"

// JSON forms used on the command line. Keys keep insertion order so output is
// byte-stable.
namespace ccperm::json_io {

using Json = nlohmann::ordered_json;

// {"n": 11, "cycles": [{"elements": [1,11,3], "color": "r"}, ...]}
// Cycles come out canonical; on input any rotation and order is accepted.
Json to_json(const CycleColoredPermutation& c);
CycleColoredPermutation colored_from_json(const Json& j);
CycleColoredPermutation parse_colored(std::string_view text);

// [[1,5],[2,3],...]
Json to_json(const RelationSet& relations);

// {"paths": [{"letter": "g", "vertices": [1,5,10]}, ...], "cycles": [[4],[9,11]]}
Json to_json(const GraphDecomposition& d);

// {"identity": "eq1", "n": 3, "x": 2, "left": "24", "right": "24",
//  "pass": true, ...}; integers as decimal strings.
Json to_json(const VerificationReport& r);

// {"n_max": N, "rows": [[1], [0,1], ...]} with entries as decimal strings.
Json to_json(const StirlingTable& t);

}  // namespace ccperm::json_io
