#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace stree {

// A position in a b-branching tree, identified with the sequence of branch
// digits taken from the root. The root is the empty sequence and is spelled
// "e" in text form. The branching degree b is carried by the surrounding
// universe, not by the node itself.
struct Node {
    std::vector<std::uint8_t> digits;

    Node() = default;
    explicit Node(std::vector<std::uint8_t> d) : digits(std::move(d)) {}

    // level = number of proper predecessors; the root sits on level 0.
    int level() const { return static_cast<int>(digits.size()); }
    // height = level + 1, so the nodes of height n+1 form level n.
    int height() const { return level() + 1; }
    bool is_root() const { return digits.empty(); }

    Node child(int direction) const;
    Node parent() const;

    bool operator==(const Node&) const = default;
    // vector's lexicographic order coincides with the tree's lex order:
    // a proper prefix precedes its extensions, and otherwise the first
    // differing digit (the digit at the meet) decides.
    auto operator<=>(const Node&) const = default;
};

// Longest common prefix: the deepest common predecessor of s and t.
Node meet(const Node& s, const Node& t);

// Strict lexicographic order on nodes (digit order at the meet; a node
// precedes its proper extensions).
bool lex_less(const Node& s, const Node& t);

// True iff s is a (non-strict) predecessor of t, i.e. a prefix.
bool is_ancestor(const Node& s, const Node& t);

// Text form: "e" for the root, otherwise the digit string ("01", "110", ...).
std::string to_string(const Node& n);
// Inverse of to_string; throws std::invalid_argument on malformed input.
Node parse_node(const std::string& text);

}  // namespace stree
