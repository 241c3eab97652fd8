#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <string>

#include "stree/enumerate.hpp"

namespace stree {

// A total map from strong subtrees to opaque color labels; colors are only
// ever compared for equality. Keys are the flattened node lists.
class Coloring {
  public:
    static std::vector<Node> key(const StrongSubtree& x) { return x.nodes(); }

    void set(const StrongSubtree& x, std::string color) { table_[key(x)] = std::move(color); }
    const std::string& at(const StrongSubtree& x) const {
        auto it = table_.find(key(x));
        if (it == table_.end())
            throw TreeError(ErrorCode::ConstraintViolation, "coloring is not total");
        return it->second;
    }
    bool defined_on(const StrongSubtree& x) const { return table_.count(key(x)) != 0; }
    bool total_on(const std::vector<StrongSubtree>& xs) const {
        for (const auto& x : xs)
            if (!defined_on(x)) return false;
        return true;
    }
    const std::map<std::vector<Node>, std::string>& table() const { return table_; }

  private:
    std::map<std::vector<Node>, std::string> table_;
};

// Built-in coloring generators over a family snapshot. `seeded-random`
// draws from an explicit engine so identical seeds give identical colorings.
// Throws ConstraintViolation for an unknown generator name.
Coloring builtin_coloring(const std::string& name, const Universe& universe,
                          const std::vector<StrongSubtree>& members, std::uint64_t seed,
                          int num_colors = 3);

inline const char* const kBuiltinColoringNames[] = {
    "constant", "injective", "by-level-set", "by-min-level", "by-root", "seeded-random",
};

}  // namespace stree
