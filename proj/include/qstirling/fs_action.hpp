#pragma once

#include <optional>
#include <vector>

#include "qstirling/poly.hpp"
#include "qstirling/tree.hpp"

namespace qstirling {

// Label-based vertex identity, stable under sibling rearrangement:
// (0, -1) is the root, (v, -1) the unique odd vertex of value v, and (v, j)
// the j-th even child of that odd vertex (odd vertices never reorder their
// children, so j is stable). A tree over M has exactly K + 1 identities.
struct VertexId {
    int value = 0;
    int copy = -1;
    bool operator==(const VertexId&) const = default;
    auto operator<=>(const VertexId&) const = default;
};

std::vector<VertexId> all_vertex_ids(const Multiset& m);
std::vector<VertexId> tree_vertex_ids(const Tree& t);
std::optional<VertexRef> resolve(const Tree& t, const VertexId& id);

// The involution psi_u. Even leaves, cyclic peaks and cyclic valleys are
// fixed. At a double cyclic ascent/descent the anchored sequence
// v_0 v_1 ... v_l is pivot-factorized W1 . p . W2 . W3 and the host's child
// subtrees are rearranged to read W2 . p . W1 . W3 rotated so v_0 leads
// (subtrees travel with their labels). Postconditions checked on every call:
// the new sequence keeps CDES(W2 p W1 W3) and u's class toggles DD <-> DA.
Tree psi(const Tree& t, const VertexRef& u);
Tree psi(const Tree& t, const VertexId& u);

// Commuting involutions: the composite over any id set is order-independent.
Tree psi_set(const Tree& t, std::vector<VertexId> ids);

struct Orbit {
    std::vector<Tree> members;       // sorted by text form
    int representative_index = -1;   // the unique dcdes == 0 member, -1 if not unique
    const Tree& representative() const;
};

// Closure of t under all psi_u.
Orbit orbit(const Tree& t);

// Sum of x^casc y^cdes over the orbit.
Poly2 orbit_polynomial(const Orbit& o);

// (xy)^cdes(T~) (x+y)^{K+1-eleaf(T~)-2 cdes(T~)} for the representative T~.
Poly2 orbit_polynomial_closed_form(const Orbit& o);

}  // namespace qstirling
