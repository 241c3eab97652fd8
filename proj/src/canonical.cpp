#include "stree/canonical.hpp"

#include <algorithm>
#include <map>

namespace stree {

namespace {

// Subsets of `pool` of exactly `k` elements, lexicographic order.
template <typename T>
std::vector<std::vector<T>> k_subsets(const std::vector<T>& pool, int k) {
    std::vector<std::vector<T>> out;
    std::vector<T> cur;
    std::function<void(std::size_t)> rec = [&](std::size_t start) {
        if (static_cast<int>(cur.size()) == k) {
            out.push_back(cur);
            return;
        }
        for (std::size_t i = start; i < pool.size(); ++i) {
            cur.push_back(pool[i]);
            rec(i + 1);
            cur.pop_back();
        }
    };
    rec(0);
    return out;
}

std::vector<int> iota_vec(int m) {
    std::vector<int> v(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) v[static_cast<std::size_t>(i)] = i;
    return v;
}

}  // namespace

std::vector<std::vector<int>> n_subsets(const std::vector<int>& X, int n) {
    return k_subsets(X, n);
}

std::vector<int> index_restrict(const std::vector<int>& A, const std::vector<int>& I) {
    std::vector<int> out;
    for (int i : I) out.push_back(A.at(static_cast<std::size_t>(i)));
    return out;
}

bool er_verify(const SetColoring& c, const std::vector<int>& X, int n,
               const std::vector<int>& I) {
    std::map<std::vector<int>, std::string> key_color;
    std::map<std::string, std::vector<int>> color_key;
    for (const auto& A : n_subsets(X, n)) {
        std::vector<int> key = index_restrict(A, I);
        std::string color = c(A);
        auto [it, fresh] = key_color.emplace(key, color);
        if (!fresh && it->second != color) return false;
        auto [jt, fresh2] = color_key.emplace(color, key);
        if (!fresh2 && jt->second != key) return false;
    }
    return true;
}

std::optional<ErWitness> er_classify(const SetColoring& c, int m, int n, int min_witness) {
    if (n < 0 || min_witness < n || m < min_witness)
        throw TreeError(ErrorCode::ConstraintViolation, "need m >= minWitness >= n");
    std::vector<std::vector<int>> index_sets;
    for (int k = 0; k <= n; ++k)
        for (auto& I : k_subsets(iota_vec(n), k)) index_sets.push_back(std::move(I));
    std::size_t examined = 0;
    for (const auto& I : index_sets)
        for (int size = m; size >= min_witness; --size)
            for (const auto& X : k_subsets(iota_vec(m), size)) {
                ++examined;
                if (er_verify(c, X, n, I)) return ErWitness{X, I, examined};
            }
    return std::nullopt;
}

bool position_agree(const StrongSubtree& X, const StrongSubtree& Y,
                    const std::vector<Node>& N, const std::vector<int>& L) {
    for (const Node& p : N)
        if (X.iso(p) != Y.iso(p)) return false;
    for (int l : L)
        if (X.levels().at(static_cast<std::size_t>(l)) !=
            Y.levels().at(static_cast<std::size_t>(l)))
            return false;
    return true;
}

namespace {

void check_position_pair(int b, int n, const std::vector<Node>& N, const std::vector<int>& L) {
    int max_node_level = -1;
    for (const Node& p : N) {
        if (p.level() >= n)
            throw TreeError(ErrorCode::ConstraintViolation, "position outside the pattern tree");
        for (std::uint8_t d : p.digits)
            if (d >= b) throw TreeError(ErrorCode::ConstraintViolation, "digit out of range");
        max_node_level = std::max(max_node_level, p.level());
    }
    for (int l : L) {
        if (l < 0 || l >= n)
            throw TreeError(ErrorCode::ConstraintViolation, "level outside the pattern tree");
        if (l <= max_node_level)
            throw TreeError(ErrorCode::ConstraintViolation,
                            "node levels must lie strictly below the level set");
    }
}

// Agreement-class key of X under a position pair: the pinned universe nodes
// plus the ambient levels of the pinned slices.
std::pair<std::vector<Node>, std::vector<int>> agreement_key(const StrongSubtree& X,
                                                             const std::vector<Node>& N,
                                                             const std::vector<int>& L) {
    std::pair<std::vector<Node>, std::vector<int>> key;
    for (const Node& p : N) key.first.push_back(X.iso(p));
    for (int l : L) key.second.push_back(X.levels().at(static_cast<std::size_t>(l)));
    return key;
}

}  // namespace

bool milliken_verify(const Coloring& c, const StrongSubtree& T, int n,
                     const std::vector<Node>& N, const std::vector<int>& L) {
    if (T.is_empty() || n < 0 || n > T.height())
        throw TreeError(ErrorCode::ConstraintViolation, "witness tree too small");
    check_position_pair(T.b(), n, N, L);
    std::map<std::pair<std::vector<Node>, std::vector<int>>, std::string> key_color;
    std::map<std::string, std::pair<std::vector<Node>, std::vector<int>>> color_key;
    for (const StrongSubtree& X : enum_strong_subtrees(T.as_universe(), n).members) {
        auto key = agreement_key(X, N, L);
        const std::string& color = c.at(X);
        auto [it, fresh] = key_color.emplace(key, color);
        if (!fresh && it->second != color) return false;
        auto [jt, fresh2] = color_key.emplace(color, key);
        if (!fresh2 && jt->second != key) return false;
    }
    return true;
}

namespace {

std::vector<Node> pattern_positions(int b, int n) {
    std::vector<Node> out;
    std::vector<Node> frontier = {Node{}};
    for (int lvl = 0; lvl < n; ++lvl) {
        std::vector<Node> next;
        for (const Node& p : frontier) {
            out.push_back(p);
            for (int d = 0; d < b; ++d) next.push_back(p.child(d));
        }
        frontier = std::move(next);
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

std::optional<CanonicalWitness> milliken_classify(const Universe& universe, const Coloring& c,
                                                  int n, int witness_height) {
    if (n < 0 || witness_height < n || witness_height > universe.height())
        throw TreeError(ErrorCode::ConstraintViolation, "need n <= h <= height(universe)");
    std::vector<Node> positions = pattern_positions(universe.b(), n);

    struct Pair {
        std::vector<Node> N;
        std::vector<int> L;
    };
    std::vector<Pair> grid;
    for (int nk = 0; nk <= static_cast<int>(positions.size()); ++nk)
        for (const auto& N : k_subsets(positions, nk)) {
            int max_level = -1;
            for (const Node& p : N) max_level = std::max(max_level, p.level());
            std::vector<int> level_pool;
            for (int l = max_level + 1; l < n; ++l) level_pool.push_back(l);
            for (int lk = 0; lk <= static_cast<int>(level_pool.size()); ++lk)
                for (auto& L : k_subsets(level_pool, lk)) grid.push_back({N, std::move(L)});
        }
    std::stable_sort(grid.begin(), grid.end(), [](const Pair& a, const Pair& b) {
        if (a.N.size() + a.L.size() != b.N.size() + b.L.size())
            return a.N.size() + a.L.size() < b.N.size() + b.L.size();
        if (a.N.size() != b.N.size()) return a.N.size() < b.N.size();
        if (a.N != b.N) return a.N < b.N;
        return a.L < b.L;
    });

    auto trees = enum_strong_subtrees(universe, witness_height).members;
    std::size_t examined = 0;
    for (const Pair& p : grid)
        for (const StrongSubtree& T : trees) {
            ++examined;
            if (milliken_verify(c, T, n, p.N, p.L)) {
                CanonicalWitness w;
                w.T = T;
                w.nls = NodeLevelSet{Coords::Position, p.N, p.L};
                w.candidates_examined = examined;
                return w;
            }
        }
    return std::nullopt;
}

NodeLevelSet lift_witness(const StrongSubtree& X, const NodeLevelSet& position_nls) {
    if (position_nls.coords != Coords::Position)
        throw TreeError(ErrorCode::ConstraintViolation, "expected position coordinates");
    NodeLevelSet out;
    out.coords = Coords::Absolute;
    for (const Node& p : position_nls.N) out.N.push_back(X.iso(p));
    for (int l : position_nls.L) out.L.push_back(X.levels().at(static_cast<std::size_t>(l)));
    std::sort(out.N.begin(), out.N.end());
    std::sort(out.L.begin(), out.L.end());
    return out;
}

bool nls_equal_up_to_translation(const Universe& universe, const StrongSubtree& X,
                                 const NodeLevelSet& fx, const StrongSubtree& Y,
                                 const NodeLevelSet& fy) {
    if (fx.L != fy.L) return false;
    if (fx.N.empty() || fy.N.empty()) return fx.N.empty() && fy.N.empty();
    std::vector<Node> px, py;
    for (const Node& t : fx.N) px.push_back(X.iso_inv(t));
    for (const Node& t : fy.N) py.push_back(Y.iso_inv(t));
    std::sort(px.begin(), px.end());
    std::sort(py.begin(), py.end());
    if (px != py) return false;
    if (fx.N == fy.N) return true;
    auto translates = node_set_translates(universe, fx.N);
    return std::find(translates.begin(), translates.end(), fy.N) != translates.end();
}

bool canonical_family_verify(const Family& G, const Coloring& c,
                             const std::function<NodeLevelSet(const StrongSubtree&)>& f) {
    const Universe& u = G.universe();
    const auto& ms = G.members();
    std::vector<NodeLevelSet> fs;
    fs.reserve(ms.size());
    for (const auto& X : ms) {
        NodeLevelSet fx = f(X);
        // condition (1): the assigned pair must be inner to its member
        for (const Node& t : fx.N)
            if (!X.contains(t)) return false;
        for (int l : fx.L)
            if (!std::binary_search(X.levels().begin(), X.levels().end(), l)) return false;
        int max_node_level = -1;
        for (const Node& t : fx.N) {
            auto lvl = u.level_of(t);
            if (!lvl) return false;
            max_node_level = std::max(max_node_level, *lvl);
        }
        if (!fx.L.empty() && max_node_level >= fx.L.front()) return false;
        fs.push_back(std::move(fx));
    }
    // condition (2): the color classes are exactly the translation classes
    // of the assigned pairs
    for (std::size_t i = 0; i < ms.size(); ++i)
        for (std::size_t j = i + 1; j < ms.size(); ++j) {
            bool same_color = c.at(ms[i]) == c.at(ms[j]);
            bool same_pair = nls_equal_up_to_translation(u, ms[i], fs[i], ms[j], fs[j]);
            if (same_color != same_pair) return false;
        }
    return true;
}

Family envelope_union(const Universe& universe, const std::vector<NodeLevelSet>& tset) {
    std::vector<StrongSubtree> members;
    if (tset.empty()) {
        members.push_back(StrongSubtree::empty_tree(universe.b()));
    } else {
        for (const NodeLevelSet& nls : tset) {
            auto env = envelope(universe, nls);
            members.insert(members.end(), env.members.begin(), env.members.end());
        }
    }
    return Family::explicit_family(universe, std::move(members));
}

}  // namespace stree
