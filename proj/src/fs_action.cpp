#include "qstirling/fs_action.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace qstirling {

std::vector<VertexId> all_vertex_ids(const Multiset& m) {
    std::vector<VertexId> ids{{0, -1}};
    for (int v = 1; v <= m.n(); ++v) {
        ids.push_back({v, -1});
        for (int j = 0; j + 1 < m.multiplicity(v); ++j) ids.push_back({v, j});
    }
    return ids;
}

namespace {

void count_labels(const TreeNode& node, std::map<int, int>& counts) {
    ++counts[node.label];
    for (const TreeNode& c : node.children) count_labels(c, counts);
}

bool find_odd(const TreeNode& node, int depth, int value, std::vector<int>& path) {
    if (depth % 2 == 1 && node.label == value) return true;
    for (int i = 0; i < static_cast<int>(node.children.size()); ++i) {
        path.push_back(i);
        if (find_odd(node.children[i], depth + 1, value, path)) return true;
        path.pop_back();
    }
    return false;
}

TreeNode* find_mutable(Tree& t, const VertexRef& u) {
    TreeNode* cur = &t;
    for (int idx : u.path) cur = &cur->children[idx];
    return cur;
}

bool actionable(VertexClass c) {
    return c == VertexClass::DoubleCyclicDescent || c == VertexClass::DoubleCyclicAscent;
}

}  // namespace

std::vector<VertexId> tree_vertex_ids(const Tree& t) {
    std::map<int, int> counts;
    count_labels(t, counts);
    std::vector<VertexId> ids{{0, -1}};
    for (const auto& [v, k] : counts) {
        if (v == 0) continue;
        ids.push_back({v, -1});
        for (int j = 0; j + 1 < k; ++j) ids.push_back({v, j});
    }
    return ids;
}

std::optional<VertexRef> resolve(const Tree& t, const VertexId& id) {
    if (id.value == 0) {
        if (id.copy != -1) return std::nullopt;
        return VertexRef{};
    }
    std::vector<int> path;
    if (!find_odd(t, 0, id.value, path)) return std::nullopt;
    if (id.copy == -1) return VertexRef{std::move(path)};
    const TreeNode* odd = find_node(t, VertexRef{path});
    if (id.copy >= static_cast<int>(odd->children.size())) return std::nullopt;
    path.push_back(id.copy);
    return VertexRef{std::move(path)};
}

Tree psi(const Tree& t, const VertexRef& u) {
    VertexClass cls = classify_vertex(t, u);  // throws out_of_range on a bad path
    if (!actionable(cls)) return t;

    // host = the even vertex whose child subtrees get rearranged: u's parent
    // when u is odd, u itself when u is an even non-leaf.
    const bool u_odd = u.path.size() % 2 == 1;
    VertexRef host = u_odd ? VertexRef{std::vector<int>(u.path.begin(), u.path.end() - 1)} : u;
    const int pivot_pos = u_odd ? u.path.back() + 1 : 0;

    Tree result = t;
    TreeNode* h = find_mutable(result, host);
    std::vector<int> seq;
    seq.reserve(h->children.size() + 1);
    seq.push_back(h->label);
    for (const TreeNode& c : h->children) seq.push_back(c.label);

    CyclicFactorization f = cyclic_factorization(seq, pivot_pos);
    std::vector<int> cyc;
    cyc.reserve(seq.size());
    cyc.insert(cyc.end(), f.w2.begin(), f.w2.end());
    cyc.push_back(seq[pivot_pos]);
    cyc.insert(cyc.end(), f.w1.begin(), f.w1.end());
    cyc.insert(cyc.end(), f.w3.begin(), f.w3.end());
    CyclicProfile target = cyclic_profile(cyc);

    // anchor the new cyclic word at the host label
    auto v0 = std::find(cyc.begin(), cyc.end(), seq[0]);
    std::rotate(cyc.begin(), v0, cyc.end());

    // rearrange: subtrees travel with their (distinct) labels
    std::map<int, TreeNode> by_label;
    for (TreeNode& c : h->children) by_label.emplace(c.label, std::move(c));
    h->children.clear();
    for (std::size_t i = 1; i < cyc.size(); ++i)
        h->children.push_back(std::move(by_label.at(cyc[i])));

    // defining condition: the anchored sequence keeps CDES(W2 pivot W1 W3)
    CyclicProfile after = cyclic_profile(cyc);
    if (after.cdes_entries != target.cdes_entries)
        throw std::logic_error("psi: rearranged sequence lost the cyclic descent set");
    // and the pivot's class toggles DD <-> DA
    int new_pos = static_cast<int>(std::find(cyc.begin(), cyc.end(), seq[pivot_pos]) - cyc.begin());
    CyclicClass toggled = after.classes[new_pos];
    bool ok = (cls == VertexClass::DoubleCyclicDescent &&
               toggled == CyclicClass::DoubleCyclicAscent) ||
              (cls == VertexClass::DoubleCyclicAscent &&
               toggled == CyclicClass::DoubleCyclicDescent);
    if (!ok) throw std::logic_error("psi: pivot class did not toggle");
    return result;
}

Tree psi(const Tree& t, const VertexId& u) {
    auto ref = resolve(t, u);
    if (!ref) throw std::invalid_argument("psi: unknown vertex identity");
    return psi(t, *ref);
}

Tree psi_set(const Tree& t, std::vector<VertexId> ids) {
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    Tree cur = t;
    for (const VertexId& id : ids) cur = psi(cur, id);
    return cur;
}

const Tree& Orbit::representative() const {
    if (representative_index < 0) throw std::logic_error("orbit: no unique dcdes == 0 member");
    return members[representative_index];
}

Orbit orbit(const Tree& t) {
    std::vector<VertexId> ids = tree_vertex_ids(t);
    std::map<std::string, Tree> seen;
    std::vector<const Tree*> frontier;
    auto [it0, fresh0] = seen.emplace(tree_to_text(t), t);
    frontier.push_back(&it0->second);
    while (!frontier.empty()) {
        const Tree* cur = frontier.back();
        frontier.pop_back();
        for (const VertexId& id : ids) {
            Tree next = psi(*cur, id);
            std::string key = tree_to_text(next);
            auto [it, fresh] = seen.emplace(std::move(key), std::move(next));
            if (fresh) frontier.push_back(&it->second);
        }
    }
    Orbit o;
    o.members.reserve(seen.size());
    for (auto& [key, tree] : seen) o.members.push_back(std::move(tree));
    int reps = 0;
    for (std::size_t i = 0; i < o.members.size(); ++i) {
        if (tree_stats(o.members[i]).dcdes == 0) {
            ++reps;
            o.representative_index = static_cast<int>(i);
        }
    }
    if (reps != 1) o.representative_index = -1;
    return o;
}

Poly2 orbit_polynomial(const Orbit& o) {
    Poly2 p;
    for (const Tree& t : o.members) {
        TreeStats s = tree_stats(t);
        p.add_term({s.casc, s.cdes}, 1);
    }
    return p;
}

Poly2 orbit_polynomial_closed_form(const Orbit& o) {
    const Tree& rep = o.representative();
    TreeStats s = tree_stats(rep);
    const int kp1 = count_vertices(rep);
    const int e = kp1 - s.eleaf - 2 * s.cdes;
    if (e < 0) throw std::logic_error("orbit: closed form exponent went negative");
    Poly2 p;
    for (int t = 0; t <= e; ++t) p.add_term({s.cdes + t, s.cdes + e - t}, binomial(e, t));
    return p;
}

}  // namespace qstirling
