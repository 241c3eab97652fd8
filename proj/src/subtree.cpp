#include "stree/subtree.hpp"

#include <algorithm>
#include <cassert>
#include <map>

namespace stree {

std::vector<Node> StrongSubtree::nodes() const {
    std::vector<Node> out;
    out.reserve(node_count());
    for (const auto& s : slices_) out.insert(out.end(), s.begin(), s.end());
    return out;
}

std::size_t StrongSubtree::node_count() const {
    std::size_t total = 0;
    for (const auto& s : slices_) total += s.size();
    return total;
}

bool StrongSubtree::contains(const Node& n) const {
    for (const auto& s : slices_)
        if (std::binary_search(s.begin(), s.end(), n)) return true;
    return false;
}

std::optional<int> StrongSubtree::relative_level_of(const Node& n) const {
    for (int k = 0; k < height(); ++k)
        if (std::binary_search(slices_[k].begin(), slices_[k].end(), n)) return k;
    return std::nullopt;
}

Node StrongSubtree::iso(const Node& position) const {
    if (position.level() >= height())
        throw TreeError(ErrorCode::NodeOutsideUniverse, "position too deep: " + to_string(position));
    Node current = root();
    for (std::size_t i = 0; i < position.digits.size(); ++i) {
        int want = position.digits[i];
        if (want >= b_)
            throw TreeError(ErrorCode::NodeOutsideUniverse, "position digit out of range");
        // The successors of `current` on the next slice leave through b
        // distinct branch directions; pick the one matching this digit.
        const auto& next = slices_[i + 1];
        const Node* found = nullptr;
        for (const Node& c : next) {
            if (is_ancestor(current, c) && c.digits[current.digits.size()] == want) {
                found = &c;
                break;
            }
        }
        assert(found != nullptr);
        current = *found;
    }
    return current;
}

Node StrongSubtree::iso_inv(const Node& n) const {
    auto lvl = relative_level_of(n);
    if (!lvl) throw TreeError(ErrorCode::NodeOutsideUniverse, to_string(n));
    // Walk down from the root recording branch directions.
    Node position;
    Node current = root();
    for (int k = 0; k < *lvl; ++k) {
        for (const Node& c : slices_[k + 1]) {
            if (is_ancestor(current, c) && is_ancestor(c, n)) {
                position.digits.push_back(c.digits[current.digits.size()]);
                current = c;
                break;
            }
        }
    }
    assert(current == n);
    return position;
}

StrongSubtree StrongSubtree::from_checked_parts(int b, std::vector<std::vector<Node>> slices,
                                                std::vector<int> levels) {
    assert(slices.size() == levels.size());
    StrongSubtree t;
    t.b_ = b;
    t.slices_ = std::move(slices);
    t.levels_ = std::move(levels);
    for (auto& s : t.slices_) std::sort(s.begin(), s.end());
    return t;
}

bool StrongSubtree::canonical_less(const StrongSubtree& a, const StrongSubtree& b) {
    if (a.is_empty() != b.is_empty()) return a.is_empty();
    if (a.is_empty()) return false;
    if (a.root() != b.root()) return a.root() < b.root();
    if (a.levels() != b.levels()) return a.levels() < b.levels();
    return a.slices() < b.slices();
}

StrongSubtree validate_strong_subtree(const Universe& universe, std::vector<Node> nodes) {
    std::sort(nodes.begin(), nodes.end());
    nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
    if (nodes.empty()) throw TreeError(ErrorCode::EmptySet, "no nodes given");

    std::vector<int> ulevel(nodes.size());
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        auto lvl = universe.level_of(nodes[i]);
        if (!lvl) throw TreeError(ErrorCode::NodeOutsideUniverse, to_string(nodes[i]));
        ulevel[i] = *lvl;
    }

    // Single root: the unique shallowest node must be below every member.
    std::size_t root_idx = static_cast<std::size_t>(
        std::min_element(ulevel.begin(), ulevel.end()) - ulevel.begin());
    const Node& root = nodes[root_idx];
    for (const Node& n : nodes)
        if (!is_ancestor(root, n)) throw TreeError(ErrorCode::NotRooted, to_string(n));

    // Member-level parent links: the deepest proper member ancestor.
    std::vector<int> parent(nodes.size(), -1);
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        if (i == root_idx) continue;
        int best = -1;
        for (std::size_t j = 0; j < nodes.size(); ++j) {
            if (j == i || !is_ancestor(nodes[j], nodes[i])) continue;
            if (best < 0 || ulevel[j] > ulevel[static_cast<std::size_t>(best)])
                best = static_cast<int>(j);
        }
        assert(best >= 0);  // the root qualifies
        parent[i] = best;
    }

    // Relative depths via the parent links.
    std::vector<int> depth(nodes.size(), -1);
    depth[root_idx] = 0;
    auto depth_of = [&](auto&& self, std::size_t i) -> int {
        if (depth[i] < 0) depth[i] = self(self, static_cast<std::size_t>(parent[i])) + 1;
        return depth[i];
    };
    for (std::size_t i = 0; i < nodes.size(); ++i) depth_of(depth_of, i);

    // All members of one relative depth must share one universe level.
    int max_depth = *std::max_element(depth.begin(), depth.end());
    std::vector<int> level_at(max_depth + 1, -1);
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        int& l = level_at[depth[i]];
        if (l < 0)
            l = ulevel[i];
        else if (l != ulevel[i])
            throw TreeError(ErrorCode::LevelMismatch,
                            "depth-" + std::to_string(depth[i]) + " members on distinct levels");
    }

    // Every non-terminal member needs exactly one member extension through
    // each immediate successor direction, and terminal members must all sit
    // at the deepest relative depth.
    int b = universe.b();
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        std::vector<int> dirs;
        for (std::size_t j = 0; j < nodes.size(); ++j)
            if (parent[j] == static_cast<int>(i))
                dirs.push_back(nodes[j].digits[nodes[i].digits.size()]);
        if (dirs.empty()) {
            if (depth[i] != max_depth)
                throw TreeError(ErrorCode::LevelMismatch,
                                "terminal member above the final level: " + to_string(nodes[i]));
            continue;
        }
        std::sort(dirs.begin(), dirs.end());
        if (static_cast<int>(dirs.size()) != b ||
            std::adjacent_find(dirs.begin(), dirs.end()) != dirs.end())
            throw TreeError(ErrorCode::BranchingViolation,
                            "member lacks one extension per direction: " + to_string(nodes[i]));
    }

    StrongSubtree out;
    out.b_ = b;
    out.slices_.resize(max_depth + 1);
    for (std::size_t i = 0; i < nodes.size(); ++i) out.slices_[depth[i]].push_back(nodes[i]);
    for (auto& s : out.slices_) std::sort(s.begin(), s.end());
    out.levels_.assign(level_at.begin(), level_at.end());
    return out;
}

StrongSubtree graft(const Universe& universe, const StrongSubtree& Y,
                    const std::vector<StrongSubtree>& parts) {
    if (Y.is_empty()) {
        if (parts.size() != 1)
            throw TreeError(ErrorCode::ConstraintViolation, "empty base takes exactly one part");
        return parts[0];
    }
    int b = universe.b();
    std::size_t expected = 1;
    for (int i = 0; i < Y.height(); ++i) expected *= static_cast<std::size_t>(b);
    if (parts.size() != expected)
        throw TreeError(ErrorCode::ConstraintViolation,
                        "height-k base needs b^k parts, got " + std::to_string(parts.size()));

    for (const auto& p : parts) {
        if (p.is_empty()) throw TreeError(ErrorCode::EmptySet, "empty graft part");
        if (p.levels() != parts.front().levels())
            throw TreeError(ErrorCode::LevelSetMismatch, "graft parts with distinct level sets");
    }
    for (std::size_t i = 0; i < parts.size(); ++i)
        for (std::size_t j = i + 1; j < parts.size(); ++j)
            if (parts[i].root() == parts[j].root())
                throw TreeError(ErrorCode::RootCollision, to_string(parts[i].root()));

    const auto& terminals = Y.slice(Y.height() - 1);  // lex ordered
    if (parts.front().levels().front() <= Y.levels().back())
        throw TreeError(ErrorCode::RoutingViolation, "parts do not lie above the base");
    for (std::size_t j = 0; j < terminals.size(); ++j) {
        auto kids = universe.children(terminals[j]);
        for (int i = 0; i < b; ++i) {
            const StrongSubtree& part = parts[j * static_cast<std::size_t>(b) + i];
            if (static_cast<int>(kids.size()) <= i || !is_ancestor(kids[i], part.root()))
                throw TreeError(ErrorCode::RoutingViolation,
                                "part rooted at " + to_string(part.root()) +
                                    " not below direction " + std::to_string(i) + " of " +
                                    to_string(terminals[j]));
        }
    }

    std::vector<Node> all = Y.nodes();
    for (const auto& p : parts) {
        auto pn = p.nodes();
        all.insert(all.end(), pn.begin(), pn.end());
    }
    return validate_strong_subtree(universe, std::move(all));
}

Universe relative(const Universe& universe, const Node& t) {
    auto lvl = universe.level_of(t);
    if (!lvl) throw TreeError(ErrorCode::NodeOutsideUniverse, to_string(t));
    std::vector<std::vector<Node>> slices;
    for (int l = *lvl; l < universe.height(); ++l) {
        std::vector<Node> s;
        for (const Node& n : universe.slice(l))
            if (is_ancestor(t, n)) s.push_back(n);
        slices.push_back(std::move(s));
    }
    return Universe::from_slices(universe.b(), std::move(slices));
}

Universe relative_tree(const Universe& universe, const StrongSubtree& X) {
    if (X.is_empty()) throw TreeError(ErrorCode::EmptySet, "empty subtree");
    for (const Node& n : X.nodes())
        if (!universe.contains(n)) throw TreeError(ErrorCode::NodeOutsideUniverse, to_string(n));
    std::vector<std::vector<Node>> slices(X.slices().begin(), X.slices().end() - 1);
    const auto& terminals = X.slice(X.height() - 1);
    for (int l = X.levels().back(); l < universe.height(); ++l) {
        std::vector<Node> s;
        for (const Node& n : universe.slice(l))
            for (const Node& t : terminals)
                if (is_ancestor(t, n)) {
                    s.push_back(n);
                    break;
                }
        slices.push_back(std::move(s));
    }
    return Universe::from_slices(universe.b(), std::move(slices));
}

std::vector<StrongSubtree> decompose(const Universe& W, const StrongSubtree& Y) {
    if (Y.is_empty()) throw TreeError(ErrorCode::EmptySet, "empty initial segment");
    for (int k = 0; k < Y.height(); ++k)
        if (k >= W.height() || Y.slice(k) != W.slice(k))
            throw TreeError(ErrorCode::NotInitialSegment, "base is not an initial segment");
    std::vector<StrongSubtree> parts;
    if (Y.height() == W.height()) return parts;
    for (const Node& t : Y.slice(Y.height() - 1)) {
        for (const Node& c : W.children(t)) {
            std::vector<Node> cone;
            for (int l = Y.height(); l < W.height(); ++l)
                for (const Node& n : W.slice(l))
                    if (is_ancestor(c, n)) cone.push_back(n);
            parts.push_back(validate_strong_subtree(W, std::move(cone)));
        }
    }
    return parts;
}

}  // namespace stree
