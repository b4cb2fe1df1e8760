#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qstirling/multiset.hpp"
#include "qstirling/poly.hpp"

namespace qstirling {

// The four statistic families sharing one trivariate shape:
//   quasi / stirling : sum of x^asc y^des z^plat over the word family,
//   trees / itrees   : sum of x^casc y^cdes z^eleaf over T_M resp. its
//                      weakly increasing subfamily.
// quasi == trees and stirling == itrees as polynomials.
enum class Family { Quasi, Stirling, Trees, ITrees };

const char* family_name(Family f);
Family parse_family(const std::string& name);  // throws std::invalid_argument

Poly3 compute_polynomial(const Multiset& m, Family f);

// Nonzero z-slices: p = sum_i s_i(x,y) z^i, ascending i.
std::vector<std::pair<int, Poly2>> slice_by_z(const Poly3& p);

// Expansion of a homogeneous symmetric s(x,y) of degree d in the basis
// (xy)^j (x+y)^{d-2j}, extracted by triangular elimination from j = 0 up
// (gamma_j is the residual coefficient of x^j y^{d-j}). Fails - as a value,
// not an exception - when s is not homogeneous, not symmetric, some gamma_j
// is negative, or a residual survives.
struct GammaExpandResult {
    bool ok = true;
    int degree = -1;                // -1 for the zero polynomial
    std::vector<long long> gamma;   // index j, size degree/2 + 1
    std::string failure;
};
GammaExpandResult gamma_expand(const Poly2& s);

struct GammaTable {
    int K = 0;
    std::vector<int> multiplicities;               // metadata when known
    std::string family;                            // metadata when known
    std::map<std::pair<int, int>, long long> entries;  // (i, j) -> gamma, zeros omitted
};

// Partial gamma expansion of a z-graded trivariate polynomial whose z^i slice
// must be homogeneous of degree K + 1 - i. Fails as a value.
struct PartialGammaResult {
    bool ok = true;
    GammaTable table;
    std::string failure;
};
PartialGammaResult partial_gamma(const Poly3& p, int K);

// gamma_{i,j} = #{t : cdes = j, eleaf = i, dcdes = 0}, over T_M (Trees) or
// its weakly increasing subfamily (ITrees). Equals the partial gamma table of
// the corresponding polynomial; the total mass is the number of orbit
// representatives.
GammaTable gamma_from_trees(const Multiset& m, Family f);

// sum gamma_{i,j} (xy)^j (x+y)^{K+1-i-2j} z^i; inverse of partial_gamma.
Poly3 reconstruct(const GammaTable& t);

std::string gamma_to_text(const GammaTable& t);       // one "z^i: ..." line per slice
std::string gamma_to_csv(const GammaTable& t);        // header i,j,value
std::string gamma_to_json_text(const GammaTable& t);  // {"multiset","family","K","gamma"}

}  // namespace qstirling
