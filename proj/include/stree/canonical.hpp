#pragma once

#include <functional>
#include <optional>

#include "stree/envelope.hpp"
#include "stree/family.hpp"

namespace stree {

// ---------------------------------------------------------------------------
// Canonical forms for colorings of n-element subsets of an interval [m]
// (the linear special case, b = 1 in tree terms).
// ---------------------------------------------------------------------------

// Color function on sorted n-element integer sets; opaque labels, equality
// only.
using SetColoring = std::function<std::string(const std::vector<int>&)>;

// All n-element subsets of X (X sorted ascending, no duplicates), each
// sorted ascending, in lexicographic order.
std::vector<std::vector<int>> n_subsets(const std::vector<int>& X, int n);

// A:I — the subset {a_i : i in I} of A = {a_0 < ... < a_{n-1}}.
std::vector<int> index_restrict(const std::vector<int>& A, const std::vector<int>& I);

// True iff for all A, B in [X]^n: c(A) = c(B) exactly when A:I = B:I.
bool er_verify(const SetColoring& c, const std::vector<int>& X, int n,
               const std::vector<int>& I);

struct ErWitness {
    std::vector<int> X;
    std::vector<int> I;
    std::size_t candidates_examined = 0;
};

// Searches index sets I ⊆ n smallest-first (by size, then lex) and, per I,
// subsets X ⊆ {0..m-1} of size ≥ min_witness largest-first (by size
// descending, then lex) for a pair passing er_verify. Returns the first hit
// or nullopt when no witness exists at this scale.
std::optional<ErWitness> er_classify(const SetColoring& c, int m, int n, int min_witness);

// ---------------------------------------------------------------------------
// Canonical forms for colorings of S_n(U).
// ---------------------------------------------------------------------------

// Agreement of two height-n subtrees on a position-coordinate pair (N, L):
// every position in N maps to the same universe node under the two
// canonical isomorphisms, and for every l in L the l-th levels of the two
// trees coincide. This is the strict (translation-free) notion used by the
// subtree analogue of the canonical Ramsey theorem.
bool position_agree(const StrongSubtree& X, const StrongSubtree& Y,
                    const std::vector<Node>& N, const std::vector<int>& L);

// True iff c is total on S_n(T) and for all X, Y in S_n(T):
// c(X) = c(Y) exactly when X and Y agree on (N, L). N holds positions in
// the pattern tree b^{<n}, L ⊆ {0..n-1}; requires the node levels of N to
// lie strictly below min L (ConstraintViolation otherwise).
bool milliken_verify(const Coloring& c, const StrongSubtree& T, int n,
                     const std::vector<Node>& N, const std::vector<int>& L);

struct CanonicalWitness {
    StrongSubtree T;
    NodeLevelSet nls;  // position coordinates
    std::size_t candidates_examined = 0;
};

// Searches position pairs (N, L) by (|N|+|L|, then |N|, then lex) and, per
// pair, T in S_h(universe) in canonical order; returns the first (T, N, L)
// passing milliken_verify, or nullopt when none exists at this scale.
std::optional<CanonicalWitness> milliken_classify(const Universe& universe, const Coloring& c,
                                                  int n, int witness_height);

// Converts a position witness to the absolute node-level set it pins inside
// a concrete member X: nodes through X's isomorphism, levels through X's
// level list.
NodeLevelSet lift_witness(const StrongSubtree& X, const NodeLevelSet& position_nls);

// ---------------------------------------------------------------------------
// Canonical colorings of arbitrary explicit families via node-level-set
// mappings, and the envelope-union family constructor.
// ---------------------------------------------------------------------------

// Equality of two absolute node-level sets up to horizontal translation of
// the node set, witnessed inside the members they were assigned to: the
// level sets are identical, the node sets occupy the same positions in
// their respective trees, and one node set is a translate of the other
// (or they are equal).
bool nls_equal_up_to_translation(const Universe& universe, const StrongSubtree& X,
                                 const NodeLevelSet& fx, const StrongSubtree& Y,
                                 const NodeLevelSet& fy);

// Verifies that (c, f) exhibits a canonical coloring of G:
//   (1) for every member X, f(X) = (N, L) has N ⊆ X, L ⊆ L_X and every
//       node of N strictly below every level of L;
//   (2) for all members X, Y: c(X) = c(Y) exactly when f(X) equals f(Y)
//       up to translation of the node set.
// Returns false as soon as either condition fails.
bool canonical_family_verify(const Family& G, const Coloring& c,
                             const std::function<NodeLevelSet(const StrongSubtree&)>& f);

// The union of the envelopes of the given absolute node-level sets,
// deduplicated, as an explicit family; an empty list yields the rank-0
// family {empty tree}.
Family envelope_union(const Universe& universe, const std::vector<NodeLevelSet>& tset);

}  // namespace stree
