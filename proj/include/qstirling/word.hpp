#pragma once

#include <algorithm>
#include <vector>

#include "qstirling/multiset.hpp"

namespace qstirling {

// A permutation of a multiset, written as its flat value sequence.
using Word = std::vector<int>;

bool is_permutation_of(const Word& w, const Multiset& m);

// No indices i<j<k<l with w_i = w_k, w_j = w_l and w_i != w_j
// (i.e. the word avoids 1212 and 2121; equal-letter 1111 is fine).
bool is_quasi_stirling(const Word& w);

// Between any two equal letters every entry is weakly larger:
// i<j<k and w_i = w_k imply w_j >= w_i.  Stirling words are quasi-Stirling.
bool is_stirling(const Word& w);

// Linear statistics of the zero-padded word w_0 = w_{K+1} = 0:
// asc/des/plat compare w_i with w_{i+1} for i = 0..K, so asc+des+plat = K+1.
// ddes counts interior i = 1..K with w_{i-1} > w_i > w_{i+1}.
struct LinearStats {
    int asc = 0;
    int des = 0;
    int plat = 0;
    int ddes = 0;
    bool operator==(const LinearStats&) const = default;
};
LinearStats linear_stats(const Word& w);

enum class CyclicClass {
    None,  // some neighbour ties the entry; no classification
    DoubleCyclicDescent,
    DoubleCyclicAscent,
    CyclicPeak,
    CyclicValley,
};

// Cyclic statistics: position i = 1..m is a cyclic descent when w_i > w_{i+1}
// with w_{m+1} = w_1; classification additionally reads w_0 = w_m.
// A length-1 word has cdes = casc = 0 and no classification.
struct CyclicProfile {
    int cdes = 0;
    int casc = 0;
    int dcdes = 0;
    int dcasc = 0;
    int cpeak = 0;
    int cval = 0;
    std::vector<CyclicClass> classes;  // one per position
    std::vector<int> cdes_entries;     // entries at cyclic-descent positions, sorted
};
CyclicProfile cyclic_profile(const Word& w);

// Cyclic pivot factorization w ~ W1 . w[pos] . W2 . W3 (a rotation of w):
// W1/W2 are the maximal runs immediately left/right of the pivot whose entries
// are all smaller than the pivot, read cyclically; W3 is the rest.
// pos must be classified DoubleCyclicAscent or DoubleCyclicDescent.
struct CyclicFactorization {
    std::vector<int> w1, w2, w3;
};
CyclicFactorization cyclic_factorization(const Word& w, int pos);

// Distinct permutations of m in lexicographic order.
template <class F>
void for_each_word(const Multiset& m, F&& f) {
    Word w;
    w.reserve(m.K());
    for (int v = 1; v <= m.n(); ++v) w.insert(w.end(), m.multiplicity(v), v);
    do {
        f(static_cast<const Word&>(w));
    } while (std::next_permutation(w.begin(), w.end()));
}

std::vector<Word> enumerate_words(const Multiset& m);

}  // namespace qstirling
