#pragma once

#include <json.hpp>

#include "stree/envelope.hpp"
#include "stree/family.hpp"
#include "stree/pigeonhole.hpp"

namespace stree {

using nlohmann::json;

json to_json(const Node& n);
json to_json(const StrongSubtree& x);
json to_json(const Universe& u);
json to_json(const NodeLevelSet& nls);
json to_json(const FamilySnapshot& snap);
json to_json(const Coloring& c);
json to_json(const AxiomsReport& rep);

// Stable serialization: object keys sorted, no whitespace variance. All CLI
// output funnels through this so identical inputs give identical bytes.
std::string stable_dump(const json& j);

// FNV-1a digest of the stable serialization, hex-encoded.
std::string digest(const json& j);

}  // namespace stree
