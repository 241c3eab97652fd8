#pragma once

#include <map>
#include <optional>
#include <vector>

#include "stree/errors.hpp"
#include "stree/node.hpp"

namespace stree {

// A finite b-branching tree serving as ambient space. Internally a universe
// is a stack of level slices: slice k holds the b^k nodes of height k+1 in
// lex order. The full truncation b^{<m} is the common case; a validated
// strong subtree may also act as a universe (its slices then contain ambient
// digit sequences, but the level arithmetic is relative to the carrier).
class Universe {
  public:
    // The full tree b^{<m}: all digit sequences of length < m.
    static Universe full(int b, int m);
    // A carrier built from explicit slices; validates b-branching shape:
    // single root, prefix linkage, and b successors per node through b
    // distinct branch directions.
    static Universe from_slices(int b, std::vector<std::vector<Node>> slices);

    int b() const { return b_; }
    int height() const { return static_cast<int>(slices_.size()); }
    const std::vector<Node>& slice(int level) const { return slices_.at(level); }
    const std::vector<std::vector<Node>>& slices() const { return slices_; }
    const Node& root() const { return slices_.front().front(); }
    std::size_t node_count() const;
    std::vector<Node> all_nodes() const;  // level by level, lex within level

    bool contains(const Node& n) const;
    // Level of n within this universe (carrier-relative), if present.
    std::optional<int> level_of(const Node& n) const;
    // The b successors of n on the next slice, ordered by branch direction.
    std::vector<Node> children(const Node& n) const;
    // The direction index (0..b-1) through which descendant leaves n.
    int direction_from(const Node& n, const Node& descendant) const;
    // Deepest universe member that is an ancestor-or-equal of every node in
    // the set's pairwise meet; for two members this is their meet (universes
    // are meet-closed by construction).

    bool operator==(const Universe& other) const {
        return b_ == other.b_ && slices_ == other.slices_;
    }

  private:
    Universe(int b, std::vector<std::vector<Node>> slices);

    int b_ = 0;
    std::vector<std::vector<Node>> slices_;
    std::map<Node, int> level_index_;
};

}  // namespace stree
