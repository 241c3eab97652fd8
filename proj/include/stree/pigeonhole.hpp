#pragma once

#include <cstdint>
#include <functional>
#include <optional>

#include "stree/coloring.hpp"

namespace stree {

// ---------------------------------------------------------------------------
// Coordinatewise liftings of the single-tree finite-approximation calculus
// to d-sequences sharing a common level set.
// ---------------------------------------------------------------------------

// r_n applied to every coordinate.
ProductSubtree product_approx(const ProductSubtree& T, int n);
// Plain node inclusion in every coordinate.
bool product_subset(const ProductSubtree& X, const ProductSubtree& Y);
// X_i ⊑ Y_i for every coordinate.
bool product_initial_segment(const ProductSubtree& X, const ProductSubtree& Y);
// X_i ⊆_fin Y_i for every coordinate.
bool product_fin_leq(const ProductSubtree& X, const ProductSubtree& Y);

// ---------------------------------------------------------------------------
// Pigeonhole witness searches.
// ---------------------------------------------------------------------------

struct PigeonholeWitness {
    StrongSubtree T;
    std::string color;
    std::size_t candidates_examined = 0;
};

// First T in S_k(universe) (canonical order) such that S_n(T) is
// monochromatic under c; nullopt when no candidate qualifies at this scale.
// Requires n ≤ k ≤ height(universe).
std::optional<PigeonholeWitness> milliken_witness(const Universe& universe, const Coloring& c,
                                                  int n, int k);

// A coloring of level products: `parts` are p universes of equal height and
// branching, and `color` maps a tuple holding one node per part, all drawn
// from a common level, to a label.
struct LevelProductColoring {
    std::vector<Universe> parts;
    std::function<std::string(const std::vector<Node>&)> color;
};

struct LevelProductWitness {
    std::vector<StrongSubtree> trees;  // one per part, common level set
    std::string color;
    std::size_t candidates_examined = 0;
};

// First tuple (F_j) of height-k strong subtrees of the parts, one per part
// with a single common level set (enum_product order), such that every
// tuple in ∏_j F_j(l) over every level l gets the same color; nullopt when
// none exists at this scale.
std::optional<LevelProductWitness> hl_witness(const LevelProductColoring& c, int k);

enum class DichotomySide { Inside, Outside };

struct A4Result {
    StrongSubtree T;  // extends X; every one-level extension of X inside T
                      // falls on one side of the predicate
    DichotomySide side = DichotomySide::Inside;
    int part_height = 0;  // height of the grafted upper parts
};

// One pigeonhole step: given a predicate O on the height-(l+1) extensions
// of X, finds a tree T with X as initial segment such that the extensions
// of X inside T lie entirely inside O or entirely outside. Searches the
// upper-part height from the maximal one that fits downward, trying common
// level sets in enumeration order; built from a level-product witness over
// the successor cones of X's terminal slice. An empty X reduces to a
// node-level dichotomy over S_k(universe). Throws NoRoom when X cannot be
// extended at all; returns nullopt when every searched height fails.
std::optional<A4Result> a4_step(const Universe& universe,
                                const std::function<bool(const StrongSubtree&)>& O,
                                const StrongSubtree& X);

// ---------------------------------------------------------------------------
// Randomized harness for the finite-approximation axioms.
// ---------------------------------------------------------------------------

struct ClauseReport {
    std::string clause;
    int instances = 0;
    int violations = 0;
};

struct AxiomsReport {
    std::uint64_t seed = 0;
    int trials = 0;
    int depth = 0;
    bool mutated = false;
    std::vector<ClauseReport> clauses;

    int total_instances() const;
    int total_violations() const;
};

// Evaluates randomized instances of the eight structural clauses (three
// about restrictions, three about ⊆_fin, two about basic open sets) on
// d-sequences (d ≤ 2) over full universes of height ≤ depth, b ∈ {1, 2}.
// Every trial exercises every clause once. With `mutate` set, the ⊆_fin
// relation is deliberately corrupted (terminal slices must be equal instead
// of included) — a correct harness must then flag violations.
AxiomsReport axioms_check(std::uint64_t seed, int trials, int depth, bool mutate = false);

}  // namespace stree
