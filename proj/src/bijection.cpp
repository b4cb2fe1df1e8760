#include "qstirling/bijection.hpp"

#include <map>
#include <span>
#include <stdexcept>

namespace qstirling {

int first_value(const Tree& t) {
    if (t.children.empty()) throw std::invalid_argument("first_value: root has no children");
    return t.children.front().label;
}

namespace {

// Word of a sibling forest of gadget subtrees. The leftmost gadget with value
// r and even children E_1..E_k contributes r w(E_1) r ... w(E_k) r, then the
// remaining siblings follow; a leaf gadget (k = 0) contributes just r.
void phi_forest(std::span<const TreeNode> siblings, Word& out) {
    if (siblings.empty()) return;
    const TreeNode& g = siblings.front();
    out.push_back(g.label);
    for (const TreeNode& even_child : g.children) {
        phi_forest(even_child.children, out);
        out.push_back(g.label);
    }
    phi_forest(siblings.subspan(1), out);
}

// Inverse parse: all occurrences of the first letter r delimit the even-child
// segments and the trailing sibling remainder. Rejects (returns false) when a
// value other than r has occurrences in two different regions — exactly the
// words that are not quasi-Stirling.
bool parse_forest(std::span<const int> w, std::vector<TreeNode>& out) {
    if (w.empty()) return true;
    const int r = w.front();
    std::vector<std::size_t> occ;
    for (std::size_t i = 0; i < w.size(); ++i)
        if (w[i] == r) occ.push_back(i);
    std::map<int, std::size_t> region_of;
    std::size_t passed = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (passed < occ.size() && i == occ[passed]) {
            ++passed;
            continue;
        }
        auto [it, fresh] = region_of.try_emplace(w[i], passed - 1);
        if (!fresh && it->second != passed - 1) return false;
    }
    TreeNode gadget{r, {}};
    gadget.children.reserve(occ.size() - 1);
    for (std::size_t s = 0; s + 1 < occ.size(); ++s) {
        TreeNode even_child{r, {}};
        if (!parse_forest(w.subspan(occ[s] + 1, occ[s + 1] - occ[s] - 1), even_child.children))
            return false;
        gadget.children.push_back(std::move(even_child));
    }
    out.push_back(std::move(gadget));
    return parse_forest(w.subspan(occ.back() + 1), out);
}

}  // namespace

Word phi(const Tree& t) {
    Word out;
    phi_forest(t.children, out);
    return out;
}

std::optional<Tree> try_phi_inverse(const Word& w) {
    Tree t{0, {}};
    if (!parse_forest(w, t.children)) return std::nullopt;
    return t;
}

Tree phi_inverse(const Word& w) {
    auto t = try_phi_inverse(w);
    if (!t) throw std::invalid_argument("phi_inverse: word is not quasi-Stirling");
    return *std::move(t);
}

}  // namespace qstirling
