#pragma once

#include <vector>

#include "stree/universe.hpp"

namespace stree {

// A validated strong subtree of a universe: the inclusion map preserves lex
// order, meets and relative levels. Stored as level slices (lex sorted) plus
// the universe levels those slices occupy. The default-constructed value is
// the empty tree of height 0, which only arises as the distinguished rank-0
// family member and as the bottom of the ⊆_fin order; validation never
// produces it.
class StrongSubtree {
  public:
    StrongSubtree() = default;
    static StrongSubtree empty_tree(int b) {
        StrongSubtree t;
        t.b_ = b;
        return t;
    }

    int b() const { return b_; }
    int height() const { return static_cast<int>(slices_.size()); }
    bool is_empty() const { return slices_.empty(); }
    const std::vector<Node>& slice(int k) const { return slices_.at(k); }
    const std::vector<std::vector<Node>>& slices() const { return slices_; }
    // Universe levels occupied by the slices, strictly increasing.
    const std::vector<int>& levels() const { return levels_; }
    const Node& root() const { return slices_.front().front(); }
    std::vector<Node> nodes() const;  // level by level, lex within level
    std::size_t node_count() const;
    bool contains(const Node& n) const;
    std::optional<int> relative_level_of(const Node& n) const;

    // The unique strong isomorphism from the pattern tree b^{<height}:
    // iso maps a position (a digit sequence of length < height) to the
    // member reached by following branch directions inside the subtree.
    Node iso(const Node& position) const;
    // Inverse of iso; throws NodeOutsideUniverse when n is not a member.
    Node iso_inv(const Node& n) const;

    // Reinterpret this subtree as an ambient space of its own.
    Universe as_universe() const { return Universe::from_slices(b_, slices_); }

    bool operator==(const StrongSubtree& other) const {
        return b_ == other.b_ && slices_ == other.slices_;
    }

    // Canonical order used for all family snapshots: root lex, then level
    // set, then lex on the flattened node list.
    static bool canonical_less(const StrongSubtree& a, const StrongSubtree& b);

    // Assembles a subtree from already-checked slices and ambient levels.
    // Library-internal shortcut for operations (approximation, translation)
    // that transform a validated tree slice by slice.
    static StrongSubtree from_checked_parts(int b, std::vector<std::vector<Node>> slices,
                                            std::vector<int> levels);

    friend StrongSubtree validate_strong_subtree(const Universe&, std::vector<Node>);

  private:
    int b_ = 0;
    std::vector<std::vector<Node>> slices_;
    std::vector<int> levels_;
};

// Checks that `nodes` forms a strong subtree of `universe` and returns it
// with computed levels. Throws TreeError with code EmptySet, NotRooted,
// LevelMismatch, BranchingViolation or NodeOutsideUniverse.
StrongSubtree validate_strong_subtree(const Universe& universe, std::vector<Node> nodes);

// Y⌢(T_i): extends a height-k subtree by b^k parts with equal level sets,
// part j*b+i routed through branch direction i below the j-th terminal node
// of Y in lex order. Throws LevelSetMismatch, RootCollision or
// RoutingViolation.
StrongSubtree graft(const Universe& universe, const StrongSubtree& Y,
                    const std::vector<StrongSubtree>& parts);

// The cone U[t]: every universe node extending t, as a universe of its own.
Universe relative(const Universe& universe, const Node& t);

// U[X]: the largest strong subtree of U that has X's non-terminal part as an
// initial segment — X's lower slices plus the full cones above X's terminal
// nodes.
Universe relative_tree(const Universe& universe, const StrongSubtree& X);

// Inverse of grafting: the unique sequence (Z_i) with Y⌢(Z_i) = W, ordered
// terminal-by-terminal (lex) and direction-by-direction. Y must be an
// initial segment of W (throws NotInitialSegment). Y equal to W yields the
// empty sequence.
std::vector<StrongSubtree> decompose(const Universe& W, const StrongSubtree& Y);

}  // namespace stree
