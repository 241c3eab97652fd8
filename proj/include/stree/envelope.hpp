#pragma once

#include <functional>
#include <optional>

#include "stree/enumerate.hpp"

namespace stree {

// Coordinate system for node-level sets. Absolute coordinates name nodes and
// levels of a concrete universe; position coordinates name positions inside
// the pattern tree b^{<n} and pattern levels. The two are distinct on
// purpose — conversion goes through a concrete subtree's isomorphism.
enum class Coords { Absolute, Position };

// A pair (N, L) of a node set and a level set with every node level
// strictly below min L. Construction normalizes the boundary case
// min L = max L_N + 1 by absorbing the forced successor nodes into N, and
// rejects inputs violating L_N < L.
struct NodeLevelSet {
    Coords coords = Coords::Absolute;
    std::vector<Node> N;  // sorted lex
    std::vector<int> L;   // sorted ascending

    bool operator==(const NodeLevelSet&) const = default;
};

// A ∧-closure: A together with all pairwise meets; a rooted tree.
// Throws EmptyInput for an empty set.
std::vector<Node> wedge_closure(const std::vector<Node>& A);

// Absolute-coordinate constructor; checks membership in the universe and
// the L_N < L invariant (ConstraintViolation / OutsideUniverse).
NodeLevelSet make_absolute_nls(const Universe& universe, std::vector<Node> N, std::vector<int> L);

// Position-coordinate constructor over the pattern tree b^{<pattern_height}.
NodeLevelSet make_position_nls(int b, int pattern_height, std::vector<Node> N, std::vector<int> L);

struct Envelope {
    NodeLevelSet nls;
    std::vector<StrongSubtree> members;  // canonical order
};

// The strong subtree envelope of an absolute node-level set:
//   L = ∅ : all members of S_{||N||} containing N^∧;
//   N = ∅ : all members with level set exactly L;
//   both  : height ||N||+|L|, containing N^∧, trailing levels pinned to L.
Envelope envelope(const Universe& universe, const NodeLevelSet& nls);

// Same, restricted to members avoiding every node rejected by `allowed`.
// Used to re-enumerate after deleting a cone from the universe.
Envelope envelope_filtered(const Universe& universe, const NodeLevelSet& nls,
                           const std::function<bool(const Node&)>& allowed);

// Nodes lying in every member of the envelope (empty envelope yields an
// empty set). Deleting any of these from the universe empties the envelope.
std::vector<Node> forced_nodes(const Envelope& e);

// Horizontal translation: moves X to a sibling root on the same level,
// keeping the level set and all digit suffixes. Throws SameRoot, NoSibling
// (level mismatch) or OutsideUniverse.
StrongSubtree translate(const Universe& universe, const StrongSubtree& X, const Node& new_root);

// All node sets obtained by translating N (as a set rooted at its ∧-root)
// inside the universe, including N itself.
std::vector<std::vector<Node>> node_set_translates(const Universe& universe,
                                                   const std::vector<Node>& N);

// Agreement of X and Y on an absolute node-level set: some translate of N
// sits inside X and some inside Y at identical positions (via the canonical
// isomorphisms), and every level of L is occupied by both X and Y.
bool agrees(const Universe& universe, const StrongSubtree& X, const StrongSubtree& Y,
            const NodeLevelSet& nls);

// The inner part X^in of an envelope member. L = ∅: X itself. N,L both
// nonempty: minimal initial segment of X covering N^∧. N = ∅: the maximal
// initial segment of X whose level set is an initial segment of the
// universe's levels, or nullopt ("not defined") when there is none.
std::optional<StrongSubtree> inner_part(const Universe& universe, const StrongSubtree& X,
                                        const NodeLevelSet& nls);

// Product envelope of a d-sequence: every coordinate shares the common
// level set ∪_i (L_{N_i^∧} ∪ L_i) and coordinate i contains N_i^∧.
std::vector<ProductSubtree> product_envelope(const std::vector<Universe>& universes,
                                             const std::vector<NodeLevelSet>& nls_list);

}  // namespace stree
