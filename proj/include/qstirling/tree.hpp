#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qstirling/multiset.hpp"
#include "qstirling/word.hpp"

namespace qstirling {

// Ordered labeled tree. The family T_M over M = {1^{k_1},...,n^{k_n}}:
//   (i)   labels form {0} union M,
//   (ii)  the root is labeled 0,
//   (iii) every odd-level vertex labeled i has exactly k_i - 1 children,
//         all labeled i (the "gadget" of value i).
// Consequences: one odd vertex per value, even child lists carry pairwise
// distinct labels all different from the parent's.
struct TreeNode {
    int label = 0;
    std::vector<TreeNode> children;
    bool operator==(const TreeNode&) const = default;
};
using Tree = TreeNode;

// A vertex addressed by child indices from the root; depth parity = level parity.
struct VertexRef {
    std::vector<int> path;
    bool operator==(const VertexRef&) const = default;
};

// nullptr when the path walks outside the tree.
const TreeNode* find_node(const Tree& t, const VertexRef& u);

struct TreeViolation {
    std::string clause;
    std::vector<int> path;
};
std::optional<TreeViolation> validate(const Tree& t, const Multiset& m);

// (v_0, v_1, ..., v_l): the vertex's own label followed by its children's labels.
std::vector<int> vertex_sequence(const Tree& t, const VertexRef& u);

enum class VertexClass {
    EvenLeaf,
    DoubleCyclicDescent,
    DoubleCyclicAscent,
    CyclicPeak,
    CyclicValley,
};

// Even leaf -> EvenLeaf. Other even vertex: class of position 0 in its own
// sequence. Odd vertex: class of its position in the parent's sequence.
// Both classification contexts have distinct entries, so a class always exists.
VertexClass classify_vertex(const Tree& t, const VertexRef& u);

// cdes/casc sum each vertex sequence's cyclic statistics; the rest count the
// vertex classes. Always: eleaf + dcdes + dcasc + cpeak + cval = K + 1.
struct TreeStats {
    int casc = 0;
    int cdes = 0;
    int eleaf = 0;
    int dcdes = 0;
    int dcasc = 0;
    int cpeak = 0;
    int cval = 0;
    bool operator==(const TreeStats&) const = default;
};
TreeStats tree_stats(const Tree& t);

// All of T_M, generated gadget-first: a forest on a value set S picks the
// leftmost gadget's value v, splits part of S \ {v} into k_v - 1 ordered
// child value sets, and puts a forest on the remainder as following siblings.
// Deterministic order: by leftmost gadget value, then recursively.
std::vector<Tree> enumerate_trees(const Multiset& m);

// Every edge weakly increases (parent label <= child label).
bool is_weakly_increasing(const Tree& t);

int count_vertices(const Tree& t);

// Text form: label(child,child,...), leaves bare, e.g. "0(1,2)".
std::string tree_to_text(const Tree& t);
Tree parse_tree_text(const std::string& text);

// JSON form: {"label": int, "children": [...]}.
std::string tree_to_json_text(const Tree& t);
Tree tree_from_json_text(const std::string& text);

}  // namespace qstirling
