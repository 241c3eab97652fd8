#include "stree/pigeonhole.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

namespace stree {

ProductSubtree product_approx(const ProductSubtree& T, int n) {
    ProductSubtree out;
    out.reserve(T.size());
    for (const auto& t : T) out.push_back(approx(t, n));
    return out;
}

bool product_subset(const ProductSubtree& X, const ProductSubtree& Y) {
    if (X.size() != Y.size()) return false;
    for (std::size_t i = 0; i < X.size(); ++i) {
        auto ns = X[i].nodes();
        for (const Node& t : ns)
            if (!Y[i].contains(t)) return false;
    }
    return true;
}

bool product_initial_segment(const ProductSubtree& X, const ProductSubtree& Y) {
    if (X.size() != Y.size()) return false;
    for (std::size_t i = 0; i < X.size(); ++i)
        if (!is_initial_segment(X[i], Y[i])) return false;
    return true;
}

bool product_fin_leq(const ProductSubtree& X, const ProductSubtree& Y) {
    if (X.size() != Y.size()) return false;
    for (std::size_t i = 0; i < X.size(); ++i)
        if (!fin_leq(X[i], Y[i])) return false;
    return true;
}

std::optional<PigeonholeWitness> milliken_witness(const Universe& universe, const Coloring& c,
                                                  int n, int k) {
    if (n < 0 || k < n || k > universe.height())
        throw TreeError(ErrorCode::ConstraintViolation, "need n <= k <= height(universe)");
    std::size_t examined = 0;
    for (const StrongSubtree& T : enum_strong_subtrees(universe, k).members) {
        ++examined;
        std::set<std::string> colors;
        for (const StrongSubtree& X : enum_strong_subtrees(T.as_universe(), n).members)
            colors.insert(c.at(X));
        if (colors.size() <= 1) {
            PigeonholeWitness w;
            w.T = T;
            w.color = colors.empty() ? "" : *colors.begin();
            w.candidates_examined = examined;
            return w;
        }
    }
    return std::nullopt;
}

namespace {

// Checks that every tuple drawn one-node-per-tree from a common slice gets
// the same color across all slices; returns that color.
std::optional<std::string> product_color(const LevelProductColoring& c,
                                         const std::vector<StrongSubtree>& trees) {
    std::optional<std::string> seen;
    int height = trees.front().height();
    for (int l = 0; l < height; ++l) {
        std::vector<std::size_t> idx(trees.size(), 0);
        while (true) {
            std::vector<Node> tuple;
            tuple.reserve(trees.size());
            for (std::size_t j = 0; j < trees.size(); ++j)
                tuple.push_back(trees[j].slice(l)[idx[j]]);
            std::string col = c.color(tuple);
            if (seen && *seen != col) return std::nullopt;
            seen = std::move(col);
            std::size_t j = 0;
            for (; j < trees.size(); ++j) {
                if (++idx[j] < trees[j].slice(l).size()) break;
                idx[j] = 0;
            }
            if (j == trees.size()) break;
        }
    }
    return seen;
}

}  // namespace

std::optional<LevelProductWitness> hl_witness(const LevelProductColoring& c, int k) {
    if (c.parts.empty()) throw TreeError(ErrorCode::EmptyInput, "no universes");
    if (k < 1 || k > c.parts.front().height()) return std::nullopt;
    std::size_t examined = 0;
    for (const ProductSubtree& trees : enum_product(c.parts, k)) {
        ++examined;
        if (auto col = product_color(c, trees)) {
            LevelProductWitness w;
            w.trees = trees;
            w.color = *col;
            w.candidates_examined = examined;
            return w;
        }
    }
    return std::nullopt;
}

std::optional<A4Result> a4_step(const Universe& universe,
                                const std::function<bool(const StrongSubtree&)>& O,
                                const StrongSubtree& X) {
    if (X.is_empty()) {
        if (universe.height() < 1) throw TreeError(ErrorCode::NoRoom, "universe has no nodes");
        // one-level extensions of the empty tree are single nodes; look for
        // the tallest tree whose node set falls on one side
        for (int k = universe.height(); k >= 1; --k) {
            for (const StrongSubtree& T : enum_strong_subtrees(universe, k).members) {
                std::set<bool> sides;
                for (const Node& t : T.nodes())
                    sides.insert(O(validate_strong_subtree(universe, {t})));
                if (sides.size() == 1) {
                    A4Result r;
                    r.T = T;
                    r.side = *sides.begin() ? DichotomySide::Inside : DichotomySide::Outside;
                    r.part_height = k;
                    return r;
                }
            }
        }
        return std::nullopt;
    }

    int l = X.height();
    const std::vector<Node>& terminals = X.slice(l - 1);
    std::vector<Universe> cones;
    for (const Node& t : terminals)
        for (int dir = 0; dir < universe.b(); ++dir) {
            Node u = t.child(dir);
            if (!universe.contains(u))
                throw TreeError(ErrorCode::NoRoom, "terminal slice has no successors");
            cones.push_back(relative(universe, u));
        }
    int room = cones.front().height();
    if (room < 1) throw TreeError(ErrorCode::NoRoom, "no room above the terminal slice");

    std::vector<Node> base = X.nodes();
    LevelProductColoring lpc;
    lpc.parts = cones;
    lpc.color = [&](const std::vector<Node>& tuple) {
        std::vector<Node> nodes = base;
        nodes.insert(nodes.end(), tuple.begin(), tuple.end());
        return O(validate_strong_subtree(universe, std::move(nodes))) ? std::string("in")
                                                                      : std::string("out");
    };

    for (int k = room; k >= 1; --k) {
        if (auto w = hl_witness(lpc, k)) {
            // the witness parts carry cone-relative levels; re-anchor them
            // in the ambient universe before grafting
            std::vector<StrongSubtree> parts;
            for (const auto& f : w->trees)
                parts.push_back(validate_strong_subtree(universe, f.nodes()));
            A4Result r;
            r.T = graft(universe, X, parts);
            r.side = w->color == "in" ? DichotomySide::Inside : DichotomySide::Outside;
            r.part_height = k;
            return r;
        }
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Axioms harness
// ---------------------------------------------------------------------------

int AxiomsReport::total_instances() const {
    int s = 0;
    for (const auto& c : clauses) s += c.instances;
    return s;
}

int AxiomsReport::total_violations() const {
    int s = 0;
    for (const auto& c : clauses) s += c.violations;
    return s;
}

namespace {

struct Harness {
    std::mt19937_64 gen;
    int depth;
    bool mutate;
    std::map<std::tuple<int, int, int, int>, std::vector<ProductSubtree>> cache;

    std::size_t pick(std::size_t n) { return static_cast<std::size_t>(gen() % n); }

    // The relation under test: either the real ⊆_fin or the deliberately
    // corrupted variant demanding equal terminal slices.
    bool fin(const ProductSubtree& X, const ProductSubtree& Y) const {
        if (!mutate) return product_fin_leq(X, Y);
        if (X.size() != Y.size()) return false;
        for (std::size_t i = 0; i < X.size(); ++i) {
            if (X[i].is_empty() != Y[i].is_empty()) return false;
            if (X[i].is_empty()) continue;
            auto xs = X[i].nodes();
            for (const Node& t : xs)
                if (!Y[i].contains(t)) return false;
            if (X[i].slice(X[i].height() - 1) != Y[i].slice(Y[i].height() - 1)) return false;
        }
        return true;
    }

    const std::vector<ProductSubtree>& all_products(const std::vector<Universe>& us, int n) {
        auto key = std::tuple(us.front().b(), us.front().height(),
                              static_cast<int>(us.size()), n);
        auto it = cache.find(key);
        if (it == cache.end()) it = cache.emplace(key, enum_product(us, n)).first;
        return it->second;
    }

    ProductSubtree sample(const std::vector<Universe>& us, int n) {
        const auto& all = all_products(us, n);
        return all[pick(all.size())];
    }

    // A random strong-subtree product of T with a common level set.
    ProductSubtree sample_inside(const ProductSubtree& T, int n) {
        std::vector<Universe> us;
        for (const auto& t : T) us.push_back(t.as_universe());
        auto all = enum_product(us, n);
        return all[pick(all.size())];
    }
};

int max_height(const ProductSubtree& T) {
    int h = 0;
    for (const auto& t : T) h = std::max(h, t.height());
    return h;
}

}  // namespace

AxiomsReport axioms_check(std::uint64_t seed, int trials, int depth, bool mutate) {
    AxiomsReport rep;
    rep.seed = seed;
    rep.trials = trials;
    rep.depth = depth;
    rep.mutated = mutate;
    rep.clauses = {
        {"restriction.common-root", 0, 0}, {"restriction.separating", 0, 0},
        {"restriction.aligned", 0, 0},     {"fin.bounded", 0, 0},
        {"fin.characterizes-subset", 0, 0}, {"fin.amalgamation", 0, 0},
        {"open.hereditary", 0, 0},         {"open.refinement", 0, 0},
    };
    if (trials <= 0 || depth < 2) return rep;

    Harness h{std::mt19937_64(seed), depth, mutate, {}};

    for (int trial = 0; trial < trials; ++trial) {
        int b = 1 + static_cast<int>(h.gen() % 2);
        int d = 1 + static_cast<int>(h.gen() % 2);
        int m = 2 + static_cast<int>(h.gen() % static_cast<unsigned>(depth - 1));
        std::vector<Universe> us(static_cast<std::size_t>(d), Universe::full(b, m));
        int cap = d == 2 ? std::min(m, 3) : m;
        auto rand_n = [&](int lo, int hi) {
            return lo + static_cast<int>(h.gen() % static_cast<unsigned>(hi - lo + 1));
        };

        // restriction.common-root: every pair of finite approximations has
        // the same 0-restriction
        {
            auto& c = rep.clauses[0];
            ProductSubtree X = h.sample(us, rand_n(0, cap));
            ProductSubtree Y = h.sample(us, rand_n(0, cap));
            ++c.instances;
            if (!(product_approx(X, 0) == product_approx(Y, 0))) ++c.violations;
        }
        // restriction.separating: distinct sequences differ in some
        // restriction
        {
            auto& c = rep.clauses[1];
            ProductSubtree X = h.sample(us, rand_n(0, cap));
            ProductSubtree Y = h.sample(us, rand_n(0, cap));
            ++c.instances;
            if (!(X == Y)) {
                bool separated = max_height(X) != max_height(Y);
                for (int n = 0; n <= std::min(max_height(X), max_height(Y)) && !separated; ++n)
                    separated = !(product_approx(X, n) == product_approx(Y, n));
                if (!separated) ++c.violations;
            }
        }
        // restriction.aligned: equal restrictions force equal depth and
        // agreement below it
        {
            auto& c = rep.clauses[2];
            ProductSubtree X = h.sample(us, rand_n(0, cap));
            ProductSubtree Y = (h.gen() % 2 == 0) ? X : h.sample(us, rand_n(0, cap));
            int n = rand_n(0, max_height(X));
            int mm = Y == X ? n : rand_n(0, max_height(Y));
            ++c.instances;
            if (product_approx(X, n) == product_approx(Y, mm)) {
                bool ok = n == mm;
                for (int kk = 0; ok && kk <= n; ++kk)
                    ok = product_approx(X, kk) == product_approx(Y, kk);
                if (!ok) ++c.violations;
            }
        }
        // fin.bounded: anything ⊆_fin-below Y lives inside Y (whence the
        // set of predecessors is finite)
        {
            auto& c = rep.clauses[3];
            ProductSubtree Y = h.sample(us, rand_n(1, cap));
            ProductSubtree X = h.sample(us, rand_n(0, cap));
            ++c.instances;
            if (h.fin(X, Y) && !product_subset(X, Y)) ++c.violations;
        }
        // fin.characterizes-subset: T0 ⊆ T1 iff every restriction of T0 is
        // ⊆_fin some restriction of T1
        {
            auto& c = rep.clauses[4];
            ProductSubtree T1 = h.sample(us, rand_n(1, cap));
            ProductSubtree T0 = (h.gen() % 2 == 0)
                                    ? h.sample_inside(T1, rand_n(0, max_height(T1)))
                                    : h.sample(us, rand_n(0, cap));
            ++c.instances;
            bool lhs = product_subset(T0, T1);
            bool rhs = true;
            for (int n = 0; rhs && n <= max_height(T0); ++n) {
                bool found = false;
                for (int mm = 0; !found && mm <= max_height(T1); ++mm)
                    found = h.fin(product_approx(T0, n), product_approx(T1, mm));
                rhs = found;
            }
            if (lhs != rhs) ++c.violations;
        }
        // fin.amalgamation: X ⊑ Y ⊆_fin Z yields an initial segment W of Z
        // with X ⊆_fin W
        {
            auto& c = rep.clauses[5];
            ProductSubtree Z = h.sample(us, rand_n(1, cap));
            // build a genuine Y ⊆_fin Z, then cut X off Y
            std::vector<ProductSubtree> below;
            for (int k = 1; k <= max_height(Z); ++k) {
                std::vector<Universe> zu;
                for (const auto& z : Z) zu.push_back(z.as_universe());
                for (const auto& cand : enum_product(zu, k))
                    if (product_fin_leq(cand, Z)) below.push_back(cand);
            }
            ProductSubtree Y = below[h.pick(below.size())];
            ProductSubtree X = product_approx(Y, rand_n(0, max_height(Y)));
            ++c.instances;
            bool found = false;
            for (int k = 0; !found && k <= max_height(Z); ++k)
                found = h.fin(X, product_approx(Z, k));
            if (!found) ++c.violations;
        }
        // open.hereditary: a nonempty basic open set stays nonempty around
        // each of its elements
        {
            auto& c = rep.clauses[6];
            ProductSubtree T = h.sample(us, rand_n(1, cap));
            ProductSubtree X = product_approx(T, rand_n(0, max_height(T)));
            std::vector<ProductSubtree> open_set;
            for (int k = std::max(1, max_height(X)); k <= max_height(T); ++k) {
                std::vector<Universe> tu;
                for (const auto& t : T) tu.push_back(t.as_universe());
                for (const auto& cand : enum_product(tu, k))
                    if (product_initial_segment(X, cand)) open_set.push_back(cand);
            }
            ++c.instances;
            if (open_set.empty()) {
                ++c.violations;  // T itself extends X, so this cannot happen
            } else {
                const ProductSubtree& Tp = open_set[h.pick(open_set.size())];
                bool nonempty = false;
                for (int k = std::max(1, max_height(X)); !nonempty && k <= max_height(Tp);
                     ++k) {
                    std::vector<Universe> pu;
                    for (const auto& t : Tp) pu.push_back(t.as_universe());
                    for (const auto& cand : enum_product(pu, k))
                        if (product_initial_segment(X, cand)) {
                            nonempty = true;
                            break;
                        }
                }
                if (!nonempty) ++c.violations;
            }
        }
        // open.refinement: shrinking the ambient tree refines the basic
        // open set without emptying it
        {
            auto& c = rep.clauses[7];
            ProductSubtree T1 = h.sample(us, rand_n(1, cap));
            ProductSubtree T0 = h.sample_inside(T1, rand_n(1, max_height(T1)));
            ProductSubtree X = product_approx(T0, rand_n(0, max_height(T0)));
            ++c.instances;
            // candidates T' inside T1 extending X whose open set refines
            // the one around T0
            auto open_of = [&](const ProductSubtree& amb) {
                std::vector<ProductSubtree> out;
                std::vector<Universe> au;
                for (const auto& t : amb) au.push_back(t.as_universe());
                for (int k = std::max(1, max_height(X)); k <= max_height(amb); ++k)
                    for (const auto& cand : enum_product(au, k))
                        if (product_initial_segment(X, cand)) out.push_back(cand);
                return out;
            };
            auto inside_t0 = open_of(T0);
            bool found = false;
            for (const auto& Tp : open_of(T1)) {
                auto refined = open_of(Tp);
                if (refined.empty()) continue;
                bool subset = true;
                for (const auto& e : refined)
                    if (std::find(inside_t0.begin(), inside_t0.end(), e) == inside_t0.end()) {
                        subset = false;
                        break;
                    }
                if (subset) {
                    found = true;
                    break;
                }
            }
            if (!found) ++c.violations;
        }
    }
    return rep;
}

}  // namespace stree
