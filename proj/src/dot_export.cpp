#include "stree/dot_export.hpp"

#include <algorithm>
#include <sstream>

namespace stree {

namespace {

std::string node_id(int coord, const Node& n) {
    return "c" + std::to_string(coord) + "_" + (n.is_root() ? "e" : to_string(n));
}

void emit_tree(std::ostringstream& out, const Universe& u, const std::vector<Node>& highlighted,
               int coord, const std::string& indent) {
    for (int l = 0; l < u.height(); ++l) {
        out << indent << "{ rank=same;";
        for (const Node& n : u.slice(l)) out << " " << node_id(coord, n) << ";";
        out << " }\n";
    }
    for (const Node& n : u.all_nodes()) {
        bool hot = std::find(highlighted.begin(), highlighted.end(), n) != highlighted.end();
        out << indent << node_id(coord, n) << " [label=\"" << to_string(n) << "\", color=grey"
            << (hot ? ", style=filled, fillcolor=gold" : "") << "];\n";
    }
    for (const Node& n : u.all_nodes())
        for (const Node& ch : u.children(n))
            out << indent << node_id(coord, n) << " -> " << node_id(coord, ch) << ";\n";
}

}  // namespace

std::string to_dot(const Universe& universe, const std::vector<Node>& highlighted) {
    std::ostringstream out;
    out << "digraph tree {\n  node [shape=circle];\n";
    emit_tree(out, universe, highlighted, 0, "  ");
    out << "}\n";
    return out.str();
}

std::string to_dot(const std::vector<Universe>& universes,
                   const std::vector<std::vector<Node>>& highlighted) {
    std::ostringstream out;
    out << "digraph forest {\n  node [shape=circle];\n";
    for (std::size_t i = 0; i < universes.size(); ++i) {
        out << "  subgraph cluster_" << i << " {\n    label=\"U" << i << "\";\n";
        emit_tree(out, universes[i], i < highlighted.size() ? highlighted[i] : std::vector<Node>{},
                  static_cast<int>(i), "    ");
        out << "  }\n";
    }
    out << "}\n";
    return out.str();
}

}  // namespace stree
