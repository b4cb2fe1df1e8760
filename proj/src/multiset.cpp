#include "qstirling/multiset.hpp"

#include <stdexcept>

#include "qstirling/poly.hpp"

namespace qstirling {

Multiset::Multiset(std::vector<int> multiplicities) : mults_(std::move(multiplicities)) {
    if (mults_.empty()) throw std::invalid_argument("multiset: needs at least one value");
    for (int k : mults_) {
        if (k < 1) throw std::invalid_argument("multiset: every multiplicity must be >= 1");
        total_ += k;
    }
}

int Multiset::multiplicity(int value) const {
    if (value < 1 || value > n()) throw std::out_of_range("multiset: value outside 1..n");
    return mults_[value - 1];
}

std::string Multiset::to_text() const {
    std::string out;
    for (int v = 1; v <= n(); ++v) {
        if (v > 1) out += ' ';
        out += std::to_string(v);
        if (mults_[v - 1] > 1) {
            out += '^';
            out += std::to_string(mults_[v - 1]);
        }
    }
    return out;
}

Multiset collapsed_multiset(const Multiset& m) {
    std::vector<int> ks(m.n(), 1);
    ks[0] = m.K() - m.n() + 1;
    return Multiset(ks);
}

namespace {

void compositions(int rest, std::vector<int>& ks, std::vector<Multiset>& out) {
    if (rest == 0) {
        out.emplace_back(ks);
        return;
    }
    for (int k = 1; k <= rest; ++k) {
        ks.push_back(k);
        compositions(rest - k, ks, out);
        ks.pop_back();
    }
}

}  // namespace

std::vector<Multiset> multisets_up_to(int max_total) {
    std::vector<Multiset> out;
    std::vector<int> ks;
    for (int K = 1; K <= max_total; ++K) compositions(K, ks, out);
    return out;
}

long long word_count(const Multiset& m) {
    long long r = 1;
    int placed = 0;
    for (int v = 1; v <= m.n(); ++v) {
        // multiply the multinomial one value at a time: C(placed + k_v, k_v)
        r = checked_mul(r, binomial(placed + m.multiplicity(v), m.multiplicity(v)));
        placed += m.multiplicity(v);
    }
    return r;
}

}  // namespace qstirling
