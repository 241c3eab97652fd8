#include "stree/family.hpp"

#include <algorithm>
#include <set>

namespace stree {

Family::Family(Universe universe, std::vector<StrongSubtree> members, std::string predicate_id)
    : universe_(std::move(universe)),
      members_(std::move(members)),
      predicate_id_(std::move(predicate_id)) {}

Family Family::explicit_family(Universe universe, std::vector<StrongSubtree> members) {
    for (auto& x : members)
        if (!x.is_empty()) x = validate_strong_subtree(universe, x.nodes());
    std::sort(members.begin(), members.end(), StrongSubtree::canonical_less);
    members.erase(std::unique(members.begin(), members.end()), members.end());
    Family f(std::move(universe), std::move(members), "");
    f.members_ready_ = true;
    return f;
}

Family Family::predicate_family(Universe universe, std::string predicate_id) {
    if (predicate_id != "omega_root_height")
        throw TreeError(ErrorCode::ConstraintViolation, "unknown predicate: " + predicate_id);
    return Family(std::move(universe), {}, std::move(predicate_id));
}

const std::vector<StrongSubtree>& Family::members() const {
    if (!members_ready_) {
        for (int n = 1; n <= universe_.height(); ++n)
            for (StrongSubtree& x : enum_strong_subtrees(universe_, n).members)
                if (omega_family_member(universe_, x)) members_.push_back(std::move(x));
        std::sort(members_.begin(), members_.end(), StrongSubtree::canonical_less);
        members_ready_ = true;
    }
    return members_;
}

bool Family::contains(const StrongSubtree& x) const {
    if (!is_explicit()) return !x.is_empty() && omega_family_member(universe_, x);
    return std::binary_search(members_.begin(), members_.end(), x,
                              StrongSubtree::canonical_less);
}

bool omega_family_member(const Universe& universe, const StrongSubtree& X) {
    if (X.is_empty()) return false;
    auto root_level = universe.level_of(X.root());
    if (!root_level) throw TreeError(ErrorCode::NodeOutsideUniverse, to_string(X.root()));
    return X.height() == *root_level + 1;
}

std::vector<std::vector<StrongSubtree>> derive(const Family& G, const StrongSubtree& Y) {
    std::vector<std::vector<StrongSubtree>> tuples;
    if (Y.is_empty()) return tuples;
    for (const StrongSubtree& X : G.members()) {
        if (X.is_empty() || X.height() <= Y.height() || !is_initial_segment(Y, X)) continue;
        // Split X above Y inside X's own frame, then lift the parts back to
        // the family's universe.
        std::vector<StrongSubtree> parts;
        for (const StrongSubtree& p : decompose(X.as_universe(), Y))
            parts.push_back(validate_strong_subtree(G.universe(), p.nodes()));
        tuples.push_back(std::move(parts));
    }
    return tuples;
}

std::vector<StrongSubtree> project(const std::vector<std::vector<StrongSubtree>>& tuples,
                                   int i) {
    std::vector<StrongSubtree> out;
    for (const auto& t : tuples) out.push_back(t.at(static_cast<std::size_t>(i)));
    std::sort(out.begin(), out.end(), StrongSubtree::canonical_less);
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool is_nash_williams(const Family& G) {
    const auto& ms = G.members();
    for (const auto& x : ms)
        for (const auto& y : ms)
            if (!(x == y) && !x.is_empty() && is_initial_segment(x, y)) return false;
    return true;
}

std::optional<int> uniform_rank(const Family& G) {
    const auto& ms = G.members();
    if (ms.empty()) return std::nullopt;
    if (ms.size() == 1 && ms.front().is_empty()) return 0;
    int n = ms.front().height();
    for (const auto& x : ms)
        if (x.is_empty() || x.height() != n) return std::nullopt;
    // On a fixed universe the only n-uniform family is S_n itself.
    auto all = enum_strong_subtrees(G.universe(), n).members;
    if (ms == all) return n;
    return std::nullopt;
}

Family restrict(const Family& G, const StrongSubtree& T) {
    Universe carrier = T.as_universe();
    if (!G.is_explicit()) return Family::predicate_family(carrier, G.predicate_id());
    std::vector<StrongSubtree> kept;
    for (const auto& x : G.members()) {
        if (x.is_empty()) {
            kept.push_back(x);
            continue;
        }
        auto ns = x.nodes();
        bool inside = std::all_of(ns.begin(), ns.end(),
                                  [&](const Node& n) { return carrier.contains(n); });
        if (inside) kept.push_back(validate_strong_subtree(carrier, ns));
    }
    return Family::explicit_family(std::move(carrier), std::move(kept));
}

std::optional<RamseyWitness> ramsey_witness(const Family& G, const Coloring& parts, int k) {
    const Universe& u = G.universe();
    if (k < 0 || k > u.height())
        throw TreeError(ErrorCode::ConstraintViolation, "witness height out of range");
    std::size_t examined = 0;
    for (const StrongSubtree& T : enum_strong_subtrees(u, k).members) {
        ++examined;
        std::set<std::string> colors;
        for (const auto& x : G.members()) {
            if (x.is_empty()) continue;
            auto ns = x.nodes();
            bool inside =
                std::all_of(ns.begin(), ns.end(), [&](const Node& n) { return T.contains(n); });
            if (inside) colors.insert(parts.at(x));
        }
        if (colors.size() <= 1) {
            RamseyWitness w;
            w.T = T;
            w.colors_present.assign(colors.begin(), colors.end());
            w.candidates_examined = examined;
            return w;
        }
    }
    return std::nullopt;
}

}  // namespace stree
