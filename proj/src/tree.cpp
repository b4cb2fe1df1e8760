#include "qstirling/tree.hpp"

#include <cctype>
#include <cstddef>
#include <map>
#include <stdexcept>

#include "json.hpp"

namespace qstirling {

const TreeNode* find_node(const Tree& t, const VertexRef& u) {
    const TreeNode* cur = &t;
    for (int idx : u.path) {
        if (idx < 0 || idx >= static_cast<int>(cur->children.size())) return nullptr;
        cur = &cur->children[idx];
    }
    return cur;
}

std::vector<int> vertex_sequence(const Tree& t, const VertexRef& u) {
    const TreeNode* node = find_node(t, u);
    if (!node) throw std::out_of_range("vertex_sequence: path outside the tree");
    std::vector<int> seq;
    seq.reserve(node->children.size() + 1);
    seq.push_back(node->label);
    for (const TreeNode& c : node->children) seq.push_back(c.label);
    return seq;
}

namespace {

VertexClass to_vertex_class(CyclicClass c) {
    switch (c) {
        case CyclicClass::DoubleCyclicDescent: return VertexClass::DoubleCyclicDescent;
        case CyclicClass::DoubleCyclicAscent: return VertexClass::DoubleCyclicAscent;
        case CyclicClass::CyclicPeak: return VertexClass::CyclicPeak;
        case CyclicClass::CyclicValley: return VertexClass::CyclicValley;
        default: throw std::logic_error("classification hit a tie; sequence entries not distinct");
    }
}

void bump(TreeStats& s, VertexClass c) {
    switch (c) {
        case VertexClass::EvenLeaf: ++s.eleaf; break;
        case VertexClass::DoubleCyclicDescent: ++s.dcdes; break;
        case VertexClass::DoubleCyclicAscent: ++s.dcasc; break;
        case VertexClass::CyclicPeak: ++s.cpeak; break;
        case VertexClass::CyclicValley: ++s.cval; break;
    }
}

std::vector<int> own_sequence(const TreeNode& node) {
    std::vector<int> seq;
    seq.reserve(node.children.size() + 1);
    seq.push_back(node.label);
    for (const TreeNode& c : node.children) seq.push_back(c.label);
    return seq;
}

void stats_walk(const TreeNode& node, int depth, TreeStats& s) {
    CyclicProfile p = cyclic_profile(own_sequence(node));
    s.cdes += p.cdes;
    s.casc += p.casc;
    if (depth % 2 == 0) {
        // an even vertex classifies itself at position 0 and its odd children
        // at positions 1..l of this same sequence
        if (node.children.empty()) ++s.eleaf;
        else bump(s, to_vertex_class(p.classes[0]));
        for (std::size_t i = 0; i < node.children.size(); ++i)
            bump(s, to_vertex_class(p.classes[i + 1]));
    }
    for (const TreeNode& c : node.children) stats_walk(c, depth + 1, s);
}

}  // namespace

VertexClass classify_vertex(const Tree& t, const VertexRef& u) {
    const TreeNode* node = find_node(t, u);
    if (!node) throw std::out_of_range("classify_vertex: path outside the tree");
    const bool even = u.path.size() % 2 == 0;
    if (even && node->children.empty()) return VertexClass::EvenLeaf;
    if (even) {
        CyclicProfile p = cyclic_profile(own_sequence(*node));
        return to_vertex_class(p.classes[0]);
    }
    VertexRef parent{std::vector<int>(u.path.begin(), u.path.end() - 1)};
    CyclicProfile p = cyclic_profile(vertex_sequence(t, parent));
    return to_vertex_class(p.classes[u.path.back() + 1]);
}

TreeStats tree_stats(const Tree& t) {
    TreeStats s;
    stats_walk(t, 0, s);
    return s;
}

namespace {

void collect_labels(const TreeNode& node, std::vector<int>& path, int max_value,
                    std::map<int, int>& counts, std::optional<TreeViolation>& bad_label) {
    if ((node.label < 0 || node.label > max_value) && !bad_label)
        bad_label = TreeViolation{"label-range", path};
    ++counts[node.label];
    for (int i = 0; i < static_cast<int>(node.children.size()); ++i) {
        path.push_back(i);
        collect_labels(node.children[i], path, max_value, counts, bad_label);
        path.pop_back();
    }
}

std::optional<TreeViolation> check_gadgets(const TreeNode& node, int depth, const Multiset& m,
                                           std::vector<int>& path, std::vector<int>& odd_seen) {
    if (depth % 2 == 1) {
        int v = node.label;
        if (v >= 1 && v <= m.n()) {
            if (static_cast<int>(node.children.size()) != m.multiplicity(v) - 1)
                return TreeViolation{"gadget-children", path};
            for (const TreeNode& c : node.children)
                if (c.label != v) return TreeViolation{"gadget-label", path};
            if (++odd_seen[v] > 1) return TreeViolation{"odd-duplicate", path};
        }
    } else if (!node.children.empty()) {
        // derived: an even child list carries pairwise distinct labels, none the parent's
        std::vector<bool> seen(m.n() + 1, false);
        for (const TreeNode& c : node.children) {
            if (c.label == node.label) return TreeViolation{"even-child-label", path};
            if (c.label >= 0 && c.label <= m.n()) {
                if (seen[c.label]) return TreeViolation{"even-child-duplicate", path};
                seen[c.label] = true;
            }
        }
    }
    for (int i = 0; i < static_cast<int>(node.children.size()); ++i) {
        path.push_back(i);
        auto r = check_gadgets(node.children[i], depth + 1, m, path, odd_seen);
        path.pop_back();
        if (r) return r;
    }
    return std::nullopt;
}

}  // namespace

std::optional<TreeViolation> validate(const Tree& t, const Multiset& m) {
    if (t.label != 0) return TreeViolation{"root-label", {}};
    std::map<int, int> counts;
    std::vector<int> path;
    std::optional<TreeViolation> bad_label;
    collect_labels(t, path, m.n(), counts, bad_label);
    if (bad_label) return bad_label;
    if (counts[0] != 1) return TreeViolation{"label-count", {}};
    for (int v = 1; v <= m.n(); ++v)
        if (counts[v] != m.multiplicity(v)) return TreeViolation{"label-count", {}};
    std::vector<int> odd_seen(m.n() + 1, 0);
    return check_gadgets(t, 0, m, path, odd_seen);
}

bool is_weakly_increasing(const Tree& t) {
    for (const TreeNode& c : t.children) {
        if (c.label < t.label) return false;
        if (!is_weakly_increasing(c)) return false;
    }
    return true;
}

int count_vertices(const Tree& t) {
    int n = 1;
    for (const TreeNode& c : t.children) n += count_vertices(c);
    return n;
}

namespace {

using Forest = std::vector<TreeNode>;

// Forests of gadget subtrees over value subsets, memoized per multiset run.
class ForestBuilder {
public:
    explicit ForestBuilder(const Multiset& m) : m_(m) {}

    const std::vector<Forest>& forests(unsigned mask) {
        auto it = memo_.find(mask);
        if (it != memo_.end()) return it->second;
        std::vector<Forest> out;
        if (mask == 0) {
            out.push_back({});
        } else {
            for (int v = 1; v <= m_.n(); ++v) {
                if (!(mask & (1u << (v - 1)))) continue;
                build_with_leftmost(v, mask & ~(1u << (v - 1)), out);
            }
        }
        return memo_.emplace(mask, std::move(out)).first->second;
    }

private:
    // Leftmost gadget takes value v; the remaining values split over the
    // gadget's k_v - 1 even children (slots 0..c-1) or the sibling remainder
    // (slot c), every assignment once, in mixed-radix order.
    void build_with_leftmost(int v, unsigned rest_mask, std::vector<Forest>& out) {
        std::vector<int> others;
        for (int u = 1; u <= m_.n(); ++u)
            if (rest_mask & (1u << (u - 1))) others.push_back(u);
        const int c = m_.multiplicity(v) - 1;
        std::vector<int> assign(others.size(), 0);
        while (true) {
            std::vector<unsigned> child_mask(c, 0);
            unsigned remainder_mask = 0;
            for (std::size_t i = 0; i < others.size(); ++i) {
                if (assign[i] < c) child_mask[assign[i]] |= 1u << (others[i] - 1);
                else remainder_mask |= 1u << (others[i] - 1);
            }
            emit(v, child_mask, remainder_mask, out);
            std::size_t i = 0;
            for (; i < assign.size(); ++i) {
                if (assign[i] < c) {
                    ++assign[i];
                    break;
                }
                assign[i] = 0;
            }
            if (i == assign.size()) break;
        }
    }

    void emit(int v, const std::vector<unsigned>& child_mask, unsigned remainder_mask,
              std::vector<Forest>& out) {
        const int c = static_cast<int>(child_mask.size());
        std::vector<const std::vector<Forest>*> lists(c + 1);
        for (int j = 0; j < c; ++j) lists[j] = &forests(child_mask[j]);
        lists[c] = &forests(remainder_mask);
        std::vector<std::size_t> pick(c + 1, 0);
        while (true) {
            TreeNode gadget{v, {}};
            gadget.children.reserve(c);
            for (int j = 0; j < c; ++j) gadget.children.push_back(TreeNode{v, (*lists[j])[pick[j]]});
            Forest f;
            f.reserve(1 + (*lists[c])[pick[c]].size());
            f.push_back(std::move(gadget));
            for (const TreeNode& sib : (*lists[c])[pick[c]]) f.push_back(sib);
            out.push_back(std::move(f));
            int j = 0;
            for (; j <= c; ++j) {
                if (++pick[j] < lists[j]->size()) break;
                pick[j] = 0;
            }
            if (j == c + 1) break;
        }
    }

    const Multiset& m_;
    std::map<unsigned, std::vector<Forest>> memo_;
};

}  // namespace

std::vector<Tree> enumerate_trees(const Multiset& m) {
    if (m.n() > 30) throw std::invalid_argument("enumerate_trees: value count too large");
    ForestBuilder builder(m);
    unsigned full = (m.n() == 32) ? ~0u : ((1u << m.n()) - 1);
    std::vector<Tree> out;
    for (const Forest& f : builder.forests(full)) out.push_back(Tree{0, f});
    return out;
}

std::string tree_to_text(const Tree& t) {
    std::string out = std::to_string(t.label);
    if (!t.children.empty()) {
        out += '(';
        for (std::size_t i = 0; i < t.children.size(); ++i) {
            if (i) out += ',';
            out += tree_to_text(t.children[i]);
        }
        out += ')';
    }
    return out;
}

namespace {

TreeNode parse_node(const std::string& s, std::size_t& pos) {
    std::size_t start = pos;
    while (pos < s.size() && (std::isdigit(static_cast<unsigned char>(s[pos])))) ++pos;
    if (pos == start) throw std::invalid_argument("tree text: expected a label at offset " +
                                                  std::to_string(pos));
    TreeNode node{std::stoi(s.substr(start, pos - start)), {}};
    if (pos < s.size() && s[pos] == '(') {
        ++pos;
        while (true) {
            node.children.push_back(parse_node(s, pos));
            if (pos >= s.size()) throw std::invalid_argument("tree text: unterminated child list");
            if (s[pos] == ',') {
                ++pos;
                continue;
            }
            if (s[pos] == ')') {
                ++pos;
                break;
            }
            throw std::invalid_argument("tree text: expected ',' or ')' at offset " +
                                        std::to_string(pos));
        }
    }
    return node;
}

}  // namespace

Tree parse_tree_text(const std::string& text) {
    std::size_t pos = 0;
    TreeNode node = parse_node(text, pos);
    if (pos != text.size()) throw std::invalid_argument("tree text: trailing characters");
    return node;
}

namespace {

nlohmann::json node_to_json(const TreeNode& node) {
    nlohmann::json j;
    j["label"] = node.label;
    j["children"] = nlohmann::json::array();
    for (const TreeNode& c : node.children) j["children"].push_back(node_to_json(c));
    return j;
}

TreeNode node_from_json(const nlohmann::json& j) {
    TreeNode node{j.at("label").get<int>(), {}};
    for (const auto& c : j.at("children")) node.children.push_back(node_from_json(c));
    return node;
}

}  // namespace

std::string tree_to_json_text(const Tree& t) { return node_to_json(t).dump(); }

Tree tree_from_json_text(const std::string& text) {
    return node_from_json(nlohmann::json::parse(text));
}

}  // namespace qstirling
