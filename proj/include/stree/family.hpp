#pragma once

#include <optional>
#include <string>

#include "stree/coloring.hpp"
#include "stree/enumerate.hpp"

namespace stree {

// A family of finite strong subtrees over a fixed universe: either an
// explicit member list or one of the built-in membership predicates. The
// one shipped predicate, "omega_root_height", holds for trees whose height
// equals the height of their root — the standard example of a family whose
// rank is not a natural number.
class Family {
  public:
    static Family explicit_family(Universe universe, std::vector<StrongSubtree> members);
    static Family predicate_family(Universe universe, std::string predicate_id);

    bool is_explicit() const { return predicate_id_.empty(); }
    const Universe& universe() const { return universe_; }
    const std::string& predicate_id() const { return predicate_id_; }

    // Explicit members, or the predicate evaluated over all of
    // S_{<∞}(universe) — total by construction on a finite universe.
    const std::vector<StrongSubtree>& members() const;

    bool contains(const StrongSubtree& x) const;

  private:
    Family(Universe universe, std::vector<StrongSubtree> members, std::string predicate_id);

    Universe universe_;
    mutable std::vector<StrongSubtree> members_;
    mutable bool members_ready_ = false;
    std::string predicate_id_;
};

// True iff the tree's height equals its root's height in the universe.
bool omega_family_member(const Universe& universe, const StrongSubtree& X);

// The derived family G(Y): all b^k-tuples (Z_i) of nonempty strong subtrees
// with Y⌢(Z_i) ∈ G, in canonical member order of the grafted trees. For a
// single node t pass Y = {t}.
std::vector<std::vector<StrongSubtree>> derive(const Family& G, const StrongSubtree& Y);

// The i-th projection of a derived family.
std::vector<StrongSubtree> project(const std::vector<std::vector<StrongSubtree>>& tuples, int i);

// No member is a proper initial segment of another.
bool is_nash_williams(const Family& G);

// The finite-rank uniformity verdict: 0 for {empty tree}, n when the family
// equals S_n(universe) — on a fixed universe that is the only n-uniform
// family — and nullopt otherwise.
std::optional<int> uniform_rank(const Family& G);

// Members whose nodes all lie in T, revalidated against T as carrier;
// predicate families are re-scoped to the carrier.
Family restrict(const Family& G, const StrongSubtree& T);

struct RamseyWitness {
    StrongSubtree T;
    // colors of G-members surviving the restriction (at most one)
    std::vector<std::string> colors_present;
    std::size_t candidates_examined = 0;
};

// Searches S_k(universe) in canonical order for a subtree T such that the
// restriction of G to T meets at most one color class of `parts`; returns
// the first verified witness or nullopt at this finite scale.
std::optional<RamseyWitness> ramsey_witness(const Family& G, const Coloring& parts, int k);

}  // namespace stree
