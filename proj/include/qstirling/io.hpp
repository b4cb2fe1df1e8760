#pragma once

#include <string>

#include "qstirling/multiset.hpp"
#include "qstirling/word.hpp"

namespace qstirling {

// Two input forms:
//   caret form  "1^2 2^2 3"  - value^multiplicity tokens, omitted exponent = 1,
//                              values must cover 1..n exactly once each;
//   comma form  "2,2,1"      - positional multiplicities (k_1,...,k_n).
// Braces around either form are ignored. Throws std::invalid_argument.
Multiset parse_multiset(const std::string& text);

// Entries joined by single spaces. Input also accepts an unspaced digit
// string ("1122") when all values are single digits.
std::string word_to_text(const Word& w);
Word parse_word(const std::string& text);

}  // namespace qstirling
