#include "stree/node.hpp"

#include <algorithm>
#include <stdexcept>

namespace stree {

Node Node::child(int direction) const {
    Node c = *this;
    c.digits.push_back(static_cast<std::uint8_t>(direction));
    return c;
}

Node Node::parent() const {
    if (is_root()) throw std::logic_error("root has no parent");
    Node p = *this;
    p.digits.pop_back();
    return p;
}

Node meet(const Node& s, const Node& t) {
    std::size_t k = 0;
    std::size_t bound = std::min(s.digits.size(), t.digits.size());
    while (k < bound && s.digits[k] == t.digits[k]) ++k;
    return Node{std::vector<std::uint8_t>(s.digits.begin(), s.digits.begin() + k)};
}

bool lex_less(const Node& s, const Node& t) { return s < t; }

bool is_ancestor(const Node& s, const Node& t) {
    return s.digits.size() <= t.digits.size() &&
           std::equal(s.digits.begin(), s.digits.end(), t.digits.begin());
}

std::string to_string(const Node& n) {
    if (n.is_root()) return "e";
    std::string out;
    out.reserve(n.digits.size());
    for (auto d : n.digits) out.push_back(static_cast<char>('0' + d));
    return out;
}

Node parse_node(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty node text");
    if (text == "e") return Node{};
    Node n;
    n.digits.reserve(text.size());
    for (char c : text) {
        if (c < '0' || c > '9') throw std::invalid_argument("bad node text: " + text);
        n.digits.push_back(static_cast<std::uint8_t>(c - '0'));
    }
    return n;
}

}  // namespace stree
