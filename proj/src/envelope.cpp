#include "stree/envelope.hpp"

#include <algorithm>
#include <cassert>
#include <set>

namespace stree {

namespace {

void sort_unique(std::vector<Node>& ns) {
    std::sort(ns.begin(), ns.end());
    ns.erase(std::unique(ns.begin(), ns.end()), ns.end());
}

void sort_unique(std::vector<int>& ls) {
    std::sort(ls.begin(), ls.end());
    ls.erase(std::unique(ls.begin(), ls.end()), ls.end());
}

// Shared normalization: if min L sits immediately above the deepest node of
// N, the successor slice of N is forced, so absorb it into the node set and
// drop the level. `children` abstracts over absolute vs position coordinates.
void normalize(NodeLevelSet& nls, int top_level,
               const std::function<std::vector<Node>(const Node&)>& children,
               const std::function<int(const Node&)>& level_of) {
    while (!nls.N.empty() && !nls.L.empty()) {
        std::vector<Node> wedge = wedge_closure(nls.N);
        int max_level = 0;
        for (const Node& n : wedge) max_level = std::max(max_level, level_of(n));
        if (nls.L.front() <= max_level)
            throw TreeError(ErrorCode::ConstraintViolation,
                            "node levels must lie strictly below the level set");
        if (nls.L.front() != max_level + 1) break;
        if (nls.L.front() > top_level)
            throw TreeError(ErrorCode::OutsideUniverse, "level beyond the universe");
        for (const Node& n : wedge)
            if (level_of(n) == max_level)
                for (const Node& c : children(n)) nls.N.push_back(c);
        sort_unique(nls.N);
        nls.L.erase(nls.L.begin());
    }
}

}  // namespace

std::vector<Node> wedge_closure(const std::vector<Node>& A) {
    if (A.empty()) throw TreeError(ErrorCode::EmptyInput, "wedge closure of nothing");
    std::set<Node> out(A.begin(), A.end());
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<Node> current(out.begin(), out.end());
        for (const Node& s : current)
            for (const Node& t : current) grew |= out.insert(meet(s, t)).second;
    }
    return {out.begin(), out.end()};
}

NodeLevelSet make_absolute_nls(const Universe& universe, std::vector<Node> N,
                               std::vector<int> L) {
    NodeLevelSet nls;
    nls.coords = Coords::Absolute;
    nls.N = std::move(N);
    nls.L = std::move(L);
    sort_unique(nls.N);
    sort_unique(nls.L);
    for (const Node& n : nls.N)
        if (!universe.contains(n)) throw TreeError(ErrorCode::OutsideUniverse, to_string(n));
    for (int l : nls.L)
        if (l < 0 || l >= universe.height())
            throw TreeError(ErrorCode::OutsideUniverse, "level " + std::to_string(l));
    normalize(
        nls, universe.height() - 1, [&](const Node& n) { return universe.children(n); },
        [&](const Node& n) { return *universe.level_of(n); });
    return nls;
}

NodeLevelSet make_position_nls(int b, int pattern_height, std::vector<Node> N,
                               std::vector<int> L) {
    NodeLevelSet nls;
    nls.coords = Coords::Position;
    nls.N = std::move(N);
    nls.L = std::move(L);
    sort_unique(nls.N);
    sort_unique(nls.L);
    for (const Node& n : nls.N) {
        if (n.level() >= pattern_height)
            throw TreeError(ErrorCode::OutsideUniverse, "position too deep: " + to_string(n));
        for (auto d : n.digits)
            if (d >= b) throw TreeError(ErrorCode::OutsideUniverse, "digit out of range");
    }
    for (int l : nls.L)
        if (l < 0 || l >= pattern_height)
            throw TreeError(ErrorCode::OutsideUniverse, "pattern level " + std::to_string(l));
    normalize(
        nls, pattern_height - 1,
        [&](const Node& n) {
            std::vector<Node> cs;
            for (int d = 0; d < b; ++d) cs.push_back(n.child(d));
            return cs;
        },
        [](const Node& n) { return n.level(); });
    return nls;
}

Envelope envelope_filtered(const Universe& universe, const NodeLevelSet& nls,
                           const std::function<bool(const Node&)>& allowed) {
    if (nls.coords != Coords::Absolute)
        throw TreeError(ErrorCode::ConstraintViolation, "envelope needs absolute coordinates");
    Envelope e;
    e.nls = nls;

    std::vector<Node> wedge;
    std::vector<int> levels;
    if (!nls.N.empty()) {
        wedge = wedge_closure(nls.N);
        for (const Node& n : wedge) {
            if (allowed && !allowed(n)) return e;  // a required node is gone
            levels.push_back(*universe.level_of(n));
        }
        sort_unique(levels);
    }
    levels.insert(levels.end(), nls.L.begin(), nls.L.end());

    int n = static_cast<int>(levels.size());
    if (n == 0) {
        e.members.push_back(StrongSubtree::empty_tree(universe.b()));
        return e;
    }
    EnumConstraints c;
    c.levels = levels;
    c.allowed = allowed;
    for (StrongSubtree& x : enum_constrained(universe, n, c)) {
        bool covers = std::all_of(wedge.begin(), wedge.end(),
                                  [&](const Node& w) { return x.contains(w); });
        if (covers) e.members.push_back(std::move(x));
    }
    return e;
}

Envelope envelope(const Universe& universe, const NodeLevelSet& nls) {
    return envelope_filtered(universe, nls, nullptr);
}

std::vector<Node> forced_nodes(const Envelope& e) {
    std::vector<Node> out;
    if (e.members.empty()) return out;
    out = e.members.front().nodes();
    std::sort(out.begin(), out.end());
    for (const StrongSubtree& x : e.members) {
        std::vector<Node> xs = x.nodes();
        std::sort(xs.begin(), xs.end());
        std::vector<Node> kept;
        std::set_intersection(out.begin(), out.end(), xs.begin(), xs.end(),
                              std::back_inserter(kept));
        out = std::move(kept);
    }
    return out;
}

StrongSubtree translate(const Universe& universe, const StrongSubtree& X, const Node& new_root) {
    if (X.is_empty()) throw TreeError(ErrorCode::EmptySet, "cannot translate the empty tree");
    if (!universe.contains(new_root)) throw TreeError(ErrorCode::OutsideUniverse, to_string(new_root));
    const Node& r = X.root();
    if (new_root == r) throw TreeError(ErrorCode::SameRoot, to_string(r));
    if (*universe.level_of(new_root) != *universe.level_of(r))
        throw TreeError(ErrorCode::NoSibling, "no sibling on the root's level");

    std::vector<Node> moved;
    for (const Node& t : X.nodes()) {
        Node shifted = new_root;
        shifted.digits.insert(shifted.digits.end(), t.digits.begin() + r.level(),
                              t.digits.end());
        if (!universe.contains(shifted))
            throw TreeError(ErrorCode::OutsideUniverse, to_string(shifted));
        moved.push_back(std::move(shifted));
    }
    StrongSubtree out = validate_strong_subtree(universe, std::move(moved));
    assert(out.levels() == X.levels());
    return out;
}

std::vector<std::vector<Node>> node_set_translates(const Universe& universe,
                                                   const std::vector<Node>& N) {
    std::vector<std::vector<Node>> out;
    if (N.empty()) return out;
    std::vector<Node> wedge = wedge_closure(N);
    const Node& r = *std::min_element(wedge.begin(), wedge.end());  // the ∧-root
    for (const Node& alt : universe.slice(*universe.level_of(r))) {
        std::vector<Node> shifted;
        bool ok = true;
        for (const Node& n : N) {
            Node s = alt;
            s.digits.insert(s.digits.end(), n.digits.begin() + r.level(), n.digits.end());
            if (!universe.contains(s)) {
                ok = false;
                break;
            }
            shifted.push_back(std::move(s));
        }
        if (ok) {
            std::sort(shifted.begin(), shifted.end());
            out.push_back(std::move(shifted));
        }
    }
    return out;
}

namespace {

// Position images of every translate of N that sits inside X.
std::vector<std::vector<Node>> translate_positions(const Universe& universe,
                                                   const StrongSubtree& X,
                                                   const std::vector<Node>& N) {
    std::vector<std::vector<Node>> out;
    for (const auto& candidate : node_set_translates(universe, N)) {
        bool inside = std::all_of(candidate.begin(), candidate.end(),
                                  [&](const Node& n) { return X.contains(n); });
        if (!inside) continue;
        std::vector<Node> positions;
        for (const Node& n : candidate) positions.push_back(X.iso_inv(n));
        std::sort(positions.begin(), positions.end());
        out.push_back(std::move(positions));
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

bool agrees(const Universe& universe, const StrongSubtree& X, const StrongSubtree& Y,
            const NodeLevelSet& nls) {
    if (nls.coords != Coords::Absolute)
        throw TreeError(ErrorCode::ConstraintViolation, "agreement needs absolute coordinates");
    for (int l : nls.L) {
        bool in_x = std::binary_search(X.levels().begin(), X.levels().end(), l);
        bool in_y = std::binary_search(Y.levels().begin(), Y.levels().end(), l);
        if (!in_x || !in_y) return false;
    }
    if (nls.N.empty()) return true;
    auto px = translate_positions(universe, X, nls.N);
    auto py = translate_positions(universe, Y, nls.N);
    std::vector<std::vector<Node>> common;
    std::set_intersection(px.begin(), px.end(), py.begin(), py.end(),
                          std::back_inserter(common));
    return !common.empty();
}

std::optional<StrongSubtree> inner_part(const Universe&, const StrongSubtree& X,
                                        const NodeLevelSet& nls) {
    if (nls.coords != Coords::Absolute)
        throw TreeError(ErrorCode::ConstraintViolation, "inner part needs absolute coordinates");
    if (nls.L.empty()) return X;
    if (!nls.N.empty()) {
        std::vector<Node> wedge = wedge_closure(nls.N);
        for (int h = 1; h <= X.height(); ++h) {
            StrongSubtree prefix = approx(X, h);
            bool covers = std::all_of(wedge.begin(), wedge.end(),
                                      [&](const Node& w) { return prefix.contains(w); });
            if (covers) return prefix;
        }
        throw TreeError(ErrorCode::ConstraintViolation, "tree does not cover the node set");
    }
    // Level-set-only case: the longest prefix occupying an initial segment
    // of the universe's levels.
    int h = 0;
    while (h < X.height() && X.levels()[h] == h) ++h;
    if (h == 0) return std::nullopt;
    return approx(X, h);
}

std::vector<ProductSubtree> product_envelope(const std::vector<Universe>& universes,
                                             const std::vector<NodeLevelSet>& nls_list) {
    if (universes.empty() || universes.size() != nls_list.size())
        throw TreeError(ErrorCode::ConstraintViolation, "need one node-level set per universe");
    for (const auto& u : universes)
        if (u.height() != universes.front().height() || u.b() != universes.front().b())
            throw TreeError(ErrorCode::LevelSetMismatch, "universes must share level sets");

    // Common level set: every node-closure level plus every pinned level.
    std::vector<int> levels;
    for (std::size_t i = 0; i < nls_list.size(); ++i) {
        const NodeLevelSet& nls = nls_list[i];
        if (nls.coords != Coords::Absolute)
            throw TreeError(ErrorCode::ConstraintViolation,
                            "product envelope needs absolute coordinates");
        if (!nls.N.empty())
            for (const Node& n : wedge_closure(nls.N)) {
                auto l = universes[i].level_of(n);
                if (!l) throw TreeError(ErrorCode::OutsideUniverse, to_string(n));
                levels.push_back(*l);
            }
        levels.insert(levels.end(), nls.L.begin(), nls.L.end());
    }
    sort_unique(levels);

    int n = static_cast<int>(levels.size());
    std::vector<ProductSubtree> out;
    if (n == 0) {
        out.emplace_back(universes.size(), StrongSubtree::empty_tree(universes.front().b()));
        return out;
    }

    std::vector<std::vector<StrongSubtree>> per;
    for (std::size_t i = 0; i < universes.size(); ++i) {
        EnumConstraints c;
        c.levels = levels;
        std::vector<StrongSubtree> members;
        std::vector<Node> wedge =
            nls_list[i].N.empty() ? std::vector<Node>{} : wedge_closure(nls_list[i].N);
        for (StrongSubtree& x : enum_constrained(universes[i], n, c)) {
            bool covers = std::all_of(wedge.begin(), wedge.end(),
                                      [&](const Node& w) { return x.contains(w); });
            if (covers) members.push_back(std::move(x));
        }
        if (members.empty()) return {};
        per.push_back(std::move(members));
    }

    ProductSubtree tuple(universes.size());
    auto emit = [&](auto&& self, std::size_t i) -> void {
        if (i == per.size()) {
            out.push_back(tuple);
            return;
        }
        for (const auto& x : per[i]) {
            tuple[i] = x;
            self(self, i + 1);
        }
    };
    emit(emit, 0);
    return out;
}

}  // namespace stree
