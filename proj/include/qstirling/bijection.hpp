#pragma once

#include <optional>

#include "qstirling/tree.hpp"
#include "qstirling/word.hpp"

namespace qstirling {

// Label of the leftmost child of the root; the first letter of phi(t).
int first_value(const Tree& t);

// The tree-to-word bijection. With r = first_value(t) and the leftmost gadget
// carrying k even children: phi(t) = r phi(T'_1) r ... r phi(T'_k) r phi(T_0),
// where T'_i hangs below the i-th even child and T_0 is t minus the whole
// gadget. A childless root maps to the empty word. Transport:
// (cdes, casc, eleaf)(t) = (des, asc, plat)(phi(t)), and t is weakly
// increasing iff phi(t) is Stirling.
Word phi(const Tree& t);

// Inverse by segment parsing: the occurrences of the first letter r delimit
// the even-child segments and the sibling remainder; a value straddling two
// segments means the word is not quasi-Stirling.
std::optional<Tree> try_phi_inverse(const Word& w);
Tree phi_inverse(const Word& w);  // throws std::invalid_argument when not quasi-Stirling

}  // namespace qstirling
