#pragma once

#include <functional>
#include <optional>

#include "stree/subtree.hpp"

namespace stree {

// A fully enumerated family S_n(U) (or a constrained slice of it) in the
// canonical order: root lex, then level set, then lex on the node list.
struct FamilySnapshot {
    int b = 0;
    int n = 0;
    std::vector<StrongSubtree> members;
};

// A d-sequence of strong subtrees sharing one level set.
using ProductSubtree = std::vector<StrongSubtree>;

// Optional constraints threaded through the level-by-level generator.
struct EnumConstraints {
    // Exact level set the results must occupy (implies n = |levels|).
    std::optional<std::vector<int>> levels;
    // Node filter; nodes failing it may not appear (used to re-enumerate
    // inside a universe with a cone deleted).
    std::function<bool(const Node&)> allowed;
    // Results must have this tree as an initial segment.
    std::optional<StrongSubtree> prefix;
};

// All strong subtrees of height n, generated by recursive level-by-level
// extension (choose a root, then one extension per successor direction per
// chosen level). n = 0 yields the single empty tree.
FamilySnapshot enum_strong_subtrees(const Universe& universe, int n);

// Generator with constraints; members come out in canonical order.
std::vector<StrongSubtree> enum_constrained(const Universe& universe, int n,
                                            const EnumConstraints& constraints);

// The members of S_|L| whose level set is exactly L.
std::vector<StrongSubtree> enum_with_levels(const Universe& universe,
                                            const std::vector<int>& L);

// X ⊑ Y: X ⊆ Y and the level slices agree below X's height.
bool is_initial_segment(const StrongSubtree& X, const StrongSubtree& Y);

// X ⊆_fin Y: X ⊆ Y and X's terminal slice is contained in Y's terminal
// slice; two empty trees are related.
bool fin_leq(const StrongSubtree& X, const StrongSubtree& Y);

// r_n: the first n level slices of T.
StrongSubtree approx(const StrongSubtree& T, int n);

// All height-(|X|+1) strong subtrees of the universe with X as initial
// segment — the one-step basic open set around X.
std::vector<StrongSubtree> enum_extensions(const StrongSubtree& X, const Universe& universe);

// All d-tuples of strong subtrees of height n with one common level set.
// Order: level set, then coordinatewise canonical order.
std::vector<ProductSubtree> enum_product(const std::vector<Universe>& universes, int n);

}  // namespace stree
