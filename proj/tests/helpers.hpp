#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "stree/subtree.hpp"

inline stree::Node N(const std::string& text) { return stree::parse_node(text); }

inline std::vector<stree::Node> Ns(std::initializer_list<std::string> texts) {
    std::vector<stree::Node> out;
    for (const auto& t : texts) out.push_back(N(t));
    return out;
}

inline stree::StrongSubtree T(const stree::Universe& u, std::initializer_list<std::string> texts) {
    return stree::validate_strong_subtree(u, Ns(texts));
}

inline std::vector<std::string> node_strings(const stree::StrongSubtree& t) {
    std::vector<std::string> out;
    for (const auto& n : t.nodes()) out.push_back(stree::to_string(n));
    return out;
}
