#include "qstirling/word.hpp"

#include <cassert>
#include <map>
#include <stdexcept>

namespace qstirling {

bool is_permutation_of(const Word& w, const Multiset& m) {
    if (static_cast<int>(w.size()) != m.K()) return false;
    std::vector<int> cnt(m.n() + 1, 0);
    for (int v : w) {
        if (v < 1 || v > m.n()) return false;
        ++cnt[v];
    }
    for (int v = 1; v <= m.n(); ++v)
        if (cnt[v] != m.multiplicity(v)) return false;
    return true;
}

namespace {

// Positions in A straddle positions in B: exists i<j<k<l, i,k in A, j,l in B.
// Taking i = min A and l = max B is optimal, so this reduces to finding
// j in B and k in A with min A < j < k < max B.
bool has_crossing(const std::vector<int>& A, const std::vector<int>& B) {
    if (A.size() < 2 || B.size() < 2) return false;
    auto j = std::upper_bound(B.begin(), B.end(), A.front());
    if (j == B.end()) return false;
    auto k = std::upper_bound(A.begin(), A.end(), *j);
    return k != A.end() && *k < B.back();
}

}  // namespace

bool is_quasi_stirling(const Word& w) {
    std::map<int, std::vector<int>> pos;
    for (int i = 0; i < static_cast<int>(w.size()); ++i) pos[w[i]].push_back(i);
    for (auto a = pos.begin(); a != pos.end(); ++a)
        for (auto b = pos.begin(); b != pos.end(); ++b)
            if (a != b && has_crossing(a->second, b->second)) return false;
    return true;
}

bool is_stirling(const Word& w) {
    std::map<int, std::pair<int, int>> span;  // value -> first/last occurrence
    for (int i = 0; i < static_cast<int>(w.size()); ++i) {
        auto [it, fresh] = span.try_emplace(w[i], i, i);
        if (!fresh) it->second.second = i;
    }
    for (const auto& [v, fl] : span)
        for (int i = fl.first + 1; i < fl.second; ++i)
            if (w[i] < v) return false;
    return true;
}

LinearStats linear_stats(const Word& w) {
    const int K = static_cast<int>(w.size());
    auto at = [&](int i) { return (i <= 0 || i > K) ? 0 : w[i - 1]; };
    LinearStats s;
    for (int i = 0; i <= K; ++i) {
        int a = at(i), b = at(i + 1);
        if (a < b) ++s.asc;
        else if (a > b) ++s.des;
        else ++s.plat;
    }
    for (int i = 1; i <= K; ++i)
        if (at(i - 1) > at(i) && at(i) > at(i + 1)) ++s.ddes;
    return s;
}

CyclicProfile cyclic_profile(const Word& w) {
    if (w.empty()) throw std::invalid_argument("cyclic_profile: empty word");
    const int m = static_cast<int>(w.size());
    CyclicProfile p;
    p.classes.assign(m, CyclicClass::None);
    for (int i = 0; i < m; ++i) {
        int prev = w[(i + m - 1) % m], cur = w[i], next = w[(i + 1) % m];
        if (cur > next) {
            ++p.cdes;
            p.cdes_entries.push_back(cur);
        } else if (cur < next) {
            ++p.casc;
        }
        if (prev == cur || cur == next) continue;  // a tie: no classification
        if (prev > cur && cur > next) {
            p.classes[i] = CyclicClass::DoubleCyclicDescent;
            ++p.dcdes;
        } else if (prev < cur && cur < next) {
            p.classes[i] = CyclicClass::DoubleCyclicAscent;
            ++p.dcasc;
        } else if (prev < cur) {
            p.classes[i] = CyclicClass::CyclicPeak;
            ++p.cpeak;
        } else {
            p.classes[i] = CyclicClass::CyclicValley;
            ++p.cval;
        }
    }
    std::sort(p.cdes_entries.begin(), p.cdes_entries.end());
    return p;
}

CyclicFactorization cyclic_factorization(const Word& w, int pos) {
    const int m = static_cast<int>(w.size());
    if (pos < 0 || pos >= m) throw std::out_of_range("cyclic_factorization: bad position");
    CyclicProfile prof = cyclic_profile(w);
    if (prof.classes[pos] != CyclicClass::DoubleCyclicAscent &&
        prof.classes[pos] != CyclicClass::DoubleCyclicDescent)
        throw std::invalid_argument(
            "cyclic_factorization: position must be a double cyclic ascent or descent");
    const int pivot = w[pos];
    CyclicFactorization f;
    int i = (pos + m - 1) % m;
    while (w[i] < pivot) {
        f.w1.push_back(w[i]);
        i = (i + m - 1) % m;
    }
    std::reverse(f.w1.begin(), f.w1.end());
    int j = (pos + 1) % m;
    while (w[j] < pivot) {
        f.w2.push_back(w[j]);
        j = (j + 1) % m;
    }
    // the rest, read cyclically from the right stopper through the left one
    for (int t = j;; t = (t + 1) % m) {
        f.w3.push_back(w[t]);
        if (t == i) break;
    }
    assert(f.w1.size() + f.w2.size() + f.w3.size() + 1 == w.size());
    return f;
}

std::vector<Word> enumerate_words(const Multiset& m) {
    std::vector<Word> out;
    for_each_word(m, [&](const Word& w) { out.push_back(w); });
    return out;
}

}  // namespace qstirling
