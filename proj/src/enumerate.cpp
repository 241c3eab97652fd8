#include "stree/enumerate.hpp"

#include <algorithm>
#include <cassert>

namespace stree {

namespace {

// Level-by-level generator state. Every emitted tree is passed through the
// validator once more; the generator and the validator disagreeing would be
// a bug worth crashing on.
struct Builder {
    const Universe& universe;
    const EnumConstraints& constraints;
    int target_height;
    std::vector<std::vector<Node>> slices;
    std::vector<int> levels;
    std::vector<StrongSubtree>* out;

    bool allowed(const Node& n) const {
        return !constraints.allowed || constraints.allowed(n);
    }

    void emit() {
        StrongSubtree t = validate_strong_subtree(universe, [&] {
            std::vector<Node> all;
            for (const auto& s : slices) all.insert(all.end(), s.begin(), s.end());
            return all;
        }());
        assert(t.levels() == levels);
        out->push_back(std::move(t));
    }

    void extend() {
        int h = static_cast<int>(slices.size());
        if (h == target_height) {
            emit();
            return;
        }
        int lo = levels.back() + 1;
        int hi = universe.height();
        if (constraints.levels) lo = hi = (*constraints.levels)[h];
        for (int next_level = lo; next_level <= hi && next_level < universe.height();
             ++next_level) {
            // One extension per terminal node per successor direction, all on
            // `next_level`; gather the candidate cones first.
            std::vector<std::vector<Node>> candidates;
            bool feasible = true;
            for (const Node& terminal : slices.back()) {
                for (const Node& child : universe.children(terminal)) {
                    std::vector<Node> cs;
                    for (const Node& n : universe.slice(next_level))
                        if (is_ancestor(child, n) && allowed(n)) cs.push_back(n);
                    if (cs.empty()) {
                        feasible = false;
                        break;
                    }
                    candidates.push_back(std::move(cs));
                }
                if (!feasible) break;
            }
            if (!feasible) continue;
            levels.push_back(next_level);
            slices.emplace_back(candidates.size());
            pick(candidates, 0);
            slices.pop_back();
            levels.pop_back();
        }
    }

    void pick(const std::vector<std::vector<Node>>& candidates, std::size_t i) {
        if (i == candidates.size()) {
            extend();
            return;
        }
        for (const Node& n : candidates[i]) {
            slices.back()[i] = n;
            pick(candidates, i + 1);
        }
    }
};

}  // namespace

std::vector<StrongSubtree> enum_constrained(const Universe& universe, int n,
                                            const EnumConstraints& constraints) {
    std::vector<StrongSubtree> out;
    if (n < 0 || n > universe.height()) return out;
    if (constraints.levels && static_cast<int>(constraints.levels->size()) != n)
        throw TreeError(ErrorCode::ConstraintViolation, "level set size must equal height");
    if (n == 0) {
        if (!constraints.prefix || constraints.prefix->is_empty())
            out.push_back(StrongSubtree::empty_tree(universe.b()));
        return out;
    }

    Builder builder{universe, constraints, n, {}, {}, &out};
    if (constraints.prefix && !constraints.prefix->is_empty()) {
        const StrongSubtree& p = *constraints.prefix;
        if (p.height() > n) return out;
        for (const Node& pn : p.nodes())
            if (!universe.contains(pn) || !builder.allowed(pn)) return out;
        if (constraints.levels &&
            !std::equal(p.levels().begin(), p.levels().end(), constraints.levels->begin()))
            return out;
        builder.slices = p.slices();
        builder.levels = p.levels();
        builder.extend();
    } else {
        for (const Node& root : universe.all_nodes()) {
            if (!builder.allowed(root)) continue;
            int root_level = *universe.level_of(root);
            if (constraints.levels && root_level != constraints.levels->front()) continue;
            builder.slices = {{root}};
            builder.levels = {root_level};
            builder.extend();
        }
    }
    std::sort(out.begin(), out.end(), StrongSubtree::canonical_less);
    return out;
}

FamilySnapshot enum_strong_subtrees(const Universe& universe, int n) {
    if (n < 0 || n > universe.height())
        throw TreeError(ErrorCode::ConstraintViolation, "height out of range");
    return FamilySnapshot{universe.b(), n, enum_constrained(universe, n, {})};
}

std::vector<StrongSubtree> enum_with_levels(const Universe& universe, const std::vector<int>& L) {
    std::vector<int> sorted = L;
    std::sort(sorted.begin(), sorted.end());
    for (int l : sorted)
        if (l < 0 || l >= universe.height())
            throw TreeError(ErrorCode::OutsideUniverse, "level " + std::to_string(l));
    EnumConstraints c;
    c.levels = sorted;
    return enum_constrained(universe, static_cast<int>(sorted.size()), c);
}

bool is_initial_segment(const StrongSubtree& X, const StrongSubtree& Y) {
    if (X.is_empty()) return true;
    if (Y.is_empty() || X.height() > Y.height()) return false;
    for (int k = 0; k < X.height(); ++k)
        if (X.slice(k) != Y.slice(k)) return false;
    return true;
}

bool fin_leq(const StrongSubtree& X, const StrongSubtree& Y) {
    if (X.is_empty() || Y.is_empty()) return X.is_empty() && Y.is_empty();
    auto xs = X.nodes();
    auto ys = Y.nodes();
    std::sort(xs.begin(), xs.end());
    std::sort(ys.begin(), ys.end());
    if (!std::includes(ys.begin(), ys.end(), xs.begin(), xs.end())) return false;
    const auto& xmax = X.slice(X.height() - 1);
    const auto& ymax = Y.slice(Y.height() - 1);
    return std::includes(ymax.begin(), ymax.end(), xmax.begin(), xmax.end());
}

StrongSubtree approx(const StrongSubtree& T, int n) {
    if (n < 0 || n > T.height())
        throw TreeError(ErrorCode::ConstraintViolation, "approximation depth out of range");
    if (n == 0) return StrongSubtree::empty_tree(T.b());
    if (n == T.height()) return T;
    std::vector<std::vector<Node>> slices(T.slices().begin(), T.slices().begin() + n);
    std::vector<int> levels(T.levels().begin(), T.levels().begin() + n);
    return StrongSubtree::from_checked_parts(T.b(), std::move(slices), std::move(levels));
}

std::vector<StrongSubtree> enum_extensions(const StrongSubtree& X, const Universe& universe) {
    if (X.is_empty()) return enum_strong_subtrees(universe, 1).members;
    EnumConstraints c;
    c.prefix = X;
    return enum_constrained(universe, X.height() + 1, c);
}

std::vector<ProductSubtree> enum_product(const std::vector<Universe>& universes, int n) {
    if (universes.empty())
        throw TreeError(ErrorCode::EmptyInput, "need at least one universe");
    for (const auto& u : universes)
        if (u.height() != universes.front().height() || u.b() != universes.front().b())
            throw TreeError(ErrorCode::LevelSetMismatch, "universes must share level sets");

    std::vector<ProductSubtree> out;
    std::size_t d = universes.size();
    if (n == 0) {
        out.emplace_back(d, StrongSubtree::empty_tree(universes.front().b()));
        return out;
    }
    if (n < 0 || n > universes.front().height()) return out;

    // Walk the candidate common level sets in increasing order and take the
    // cartesian product of the per-coordinate level-pinned enumerations.
    int h = universes.front().height();
    std::vector<int> levels(n);
    auto expand = [&](auto&& self, int pos, int low) -> void {
        if (pos == n) {
            std::vector<std::vector<StrongSubtree>> per;
            for (const auto& u : universes) {
                per.push_back(enum_with_levels(u, levels));
                if (per.back().empty()) return;
            }
            ProductSubtree tuple(d);
            auto emit = [&](auto&& inner, std::size_t i) -> void {
                if (i == d) {
                    out.push_back(tuple);
                    return;
                }
                for (const auto& x : per[i]) {
                    tuple[i] = x;
                    inner(inner, i + 1);
                }
            };
            emit(emit, 0);
            return;
        }
        for (int l = low; l < h; ++l) {
            levels[pos] = l;
            self(self, pos + 1, l + 1);
        }
    };
    expand(expand, 0, 0);
    return out;
}

}  // namespace stree
