#pragma once

#include <string>

#include "stree/universe.hpp"

namespace stree {

// DOT rendering of a universe with an optional highlighted node set:
// universe nodes grey, highlighted nodes filled, one rank per level.
std::string to_dot(const Universe& universe, const std::vector<Node>& highlighted);

// d-sequence rendering: one cluster subgraph per coordinate.
std::string to_dot(const std::vector<Universe>& universes,
                   const std::vector<std::vector<Node>>& highlighted);

}  // namespace stree
