#include "stree/coloring.hpp"

#include <algorithm>

namespace stree {

namespace {

std::string levels_label(const StrongSubtree& x) {
    std::string out = "L";
    for (int l : x.levels()) out += ":" + std::to_string(l);
    return out;
}

}  // namespace

Coloring builtin_coloring(const std::string& name, const Universe& universe,
                          const std::vector<StrongSubtree>& members, std::uint64_t seed,
                          int num_colors) {
    (void)universe;
    Coloring c;
    if (name == "constant") {
        for (const auto& x : members) c.set(x, "c0");
    } else if (name == "injective") {
        std::size_t i = 0;
        for (const auto& x : members) c.set(x, "k" + std::to_string(i++));
    } else if (name == "by-level-set") {
        for (const auto& x : members) c.set(x, levels_label(x));
    } else if (name == "by-min-level") {
        for (const auto& x : members)
            c.set(x, x.is_empty() ? "empty" : "m" + std::to_string(x.levels().front()));
    } else if (name == "by-root") {
        for (const auto& x : members)
            c.set(x, x.is_empty() ? "empty" : "r" + to_string(x.root()));
    } else if (name == "seeded-random") {
        std::mt19937_64 gen(seed);
        std::uniform_int_distribution<int> dist(0, std::max(1, num_colors) - 1);
        for (const auto& x : members) c.set(x, "s" + std::to_string(dist(gen)));
    } else {
        throw TreeError(ErrorCode::ConstraintViolation, "unknown coloring generator: " + name);
    }
    return c;
}

}  // namespace stree
