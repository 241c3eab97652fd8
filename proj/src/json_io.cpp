#include "stree/json_io.hpp"

#include <cstdint>

namespace stree {

json to_json(const Node& n) { return to_string(n); }

json to_json(const StrongSubtree& x) {
    json nodes = json::array();
    for (const Node& t : x.nodes()) nodes.push_back(to_string(t));
    return json{{"b", x.b()}, {"nodes", nodes}, {"levels", x.levels()}};
}

json to_json(const Universe& u) { return json{{"b", u.b()}, {"m", u.height()}}; }

json to_json(const NodeLevelSet& nls) {
    json nodes = json::array();
    for (const Node& t : nls.N) nodes.push_back(to_string(t));
    return json{{"coords", nls.coords == Coords::Absolute ? "absolute" : "position"},
                {"N", nodes},
                {"L", nls.L}};
}

json to_json(const FamilySnapshot& snap) {
    json members = json::array();
    for (const auto& x : snap.members) members.push_back(to_json(x));
    return json{{"b", snap.b}, {"n", snap.n}, {"count", snap.members.size()},
                {"members", members}};
}

json to_json(const Coloring& c) {
    json entries = json::array();
    for (const auto& [key, color] : c.table()) {
        json member = json::array();
        for (const Node& t : key) member.push_back(to_string(t));
        entries.push_back(json{{"member", member}, {"color", color}});
    }
    return json{{"entries", entries}};
}

json to_json(const AxiomsReport& rep) {
    json clauses = json::array();
    for (const auto& c : rep.clauses)
        clauses.push_back(
            json{{"clause", c.clause}, {"instances", c.instances}, {"violations", c.violations}});
    return json{{"seed", rep.seed},
                {"trials", rep.trials},
                {"depth", rep.depth},
                {"mutated", rep.mutated},
                {"clauses", clauses},
                {"total_instances", rep.total_instances()},
                {"total_violations", rep.total_violations()}};
}

std::string stable_dump(const json& j) {
    // nlohmann keeps object keys sorted; fixed indent gives stable bytes
    return j.dump(2);
}

std::string digest(const json& j) {
    std::string s = stable_dump(j);
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char ch : s) {
        h ^= ch;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return std::string(buf);
}

}  // namespace stree
