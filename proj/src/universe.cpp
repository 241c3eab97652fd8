#include "stree/universe.hpp"

#include <algorithm>

namespace stree {

Universe::Universe(int b, std::vector<std::vector<Node>> slices)
    : b_(b), slices_(std::move(slices)) {
    for (int k = 0; k < static_cast<int>(slices_.size()); ++k)
        for (const Node& n : slices_[k]) level_index_.emplace(n, k);
}

Universe Universe::full(int b, int m) {
    if (b < 1) throw TreeError(ErrorCode::ConstraintViolation, "branching degree must be >= 1");
    if (m < 1) throw TreeError(ErrorCode::ConstraintViolation, "depth must be >= 1");
    std::vector<std::vector<Node>> slices;
    slices.push_back({Node{}});
    for (int k = 1; k < m; ++k) {
        std::vector<Node> next;
        next.reserve(slices.back().size() * b);
        for (const Node& n : slices.back())
            for (int d = 0; d < b; ++d) next.push_back(n.child(d));
        slices.push_back(std::move(next));
    }
    return Universe(b, std::move(slices));
}

Universe Universe::from_slices(int b, std::vector<std::vector<Node>> slices) {
    if (b < 1) throw TreeError(ErrorCode::ConstraintViolation, "branching degree must be >= 1");
    if (slices.empty() || slices.front().empty())
        throw TreeError(ErrorCode::EmptySet, "universe needs at least one node");
    if (slices.front().size() != 1)
        throw TreeError(ErrorCode::NotRooted, "slice 0 must hold a single root");
    for (auto& s : slices) std::sort(s.begin(), s.end());
    for (std::size_t k = 0; k + 1 < slices.size(); ++k) {
        for (const Node& parent : slices[k]) {
            // Collect the members of the next slice lying above `parent` and
            // check they leave through b distinct branch directions.
            std::vector<int> dirs;
            for (const Node& c : slices[k + 1]) {
                if (!is_ancestor(parent, c)) continue;
                if (c.level() <= parent.level())
                    throw TreeError(ErrorCode::LevelMismatch, "slice not above its parent slice");
                dirs.push_back(c.digits[parent.digits.size()]);
            }
            std::sort(dirs.begin(), dirs.end());
            if (static_cast<int>(dirs.size()) != b ||
                std::adjacent_find(dirs.begin(), dirs.end()) != dirs.end())
                throw TreeError(ErrorCode::BranchingViolation,
                                "node lacks b successors through distinct directions: " +
                                    to_string(parent));
        }
        for (const Node& c : slices[k + 1]) {
            bool linked = std::any_of(slices[k].begin(), slices[k].end(),
                                      [&](const Node& p) { return is_ancestor(p, c); });
            if (!linked)
                throw TreeError(ErrorCode::NotRooted, "node not linked to previous slice: " + to_string(c));
        }
    }
    return Universe(b, std::move(slices));
}

std::size_t Universe::node_count() const {
    std::size_t total = 0;
    for (const auto& s : slices_) total += s.size();
    return total;
}

std::vector<Node> Universe::all_nodes() const {
    std::vector<Node> out;
    out.reserve(node_count());
    for (const auto& s : slices_) out.insert(out.end(), s.begin(), s.end());
    return out;
}

bool Universe::contains(const Node& n) const { return level_index_.count(n) != 0; }

std::optional<int> Universe::level_of(const Node& n) const {
    auto it = level_index_.find(n);
    if (it == level_index_.end()) return std::nullopt;
    return it->second;
}

std::vector<Node> Universe::children(const Node& n) const {
    auto lvl = level_of(n);
    if (!lvl) throw TreeError(ErrorCode::NodeOutsideUniverse, to_string(n));
    std::vector<Node> out;
    if (*lvl + 1 >= height()) return out;
    for (const Node& c : slices_[*lvl + 1])
        if (is_ancestor(n, c)) out.push_back(c);
    // Slices are lex sorted, so the children already come in direction order.
    return out;
}

int Universe::direction_from(const Node& n, const Node& descendant) const {
    if (!is_ancestor(n, descendant) || n == descendant)
        throw TreeError(ErrorCode::NodeOutsideUniverse,
                        to_string(descendant) + " does not extend " + to_string(n));
    return descendant.digits[n.digits.size()];
}

}  // namespace stree
