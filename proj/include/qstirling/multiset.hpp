#pragma once

#include <string>
#include <vector>

namespace qstirling {

// The multiset M = {1^{k_1}, ..., n^{k_n}} with every k_i >= 1 and K = sum k_i.
class Multiset {
public:
    explicit Multiset(std::vector<int> multiplicities);

    int n() const { return static_cast<int>(mults_.size()); }
    int K() const { return total_; }
    int multiplicity(int value) const;  // value in 1..n
    const std::vector<int>& multiplicities() const { return mults_; }

    std::string to_text() const;  // caret form, e.g. "1^2 2^2"

    bool operator==(const Multiset&) const = default;

private:
    std::vector<int> mults_;
    int total_ = 0;
};

// M' = {1^{K-n+1}, 2, ..., n}: same value count, all repetition piled onto value 1.
// Shares the quasi-Stirling (asc, des, plat) polynomial with M.
Multiset collapsed_multiset(const Multiset& m);

// All multiplicity vectors (k_1,...,k_n) with sum <= max_total,
// ordered by total, then lexicographically. Smallest-first, so the first
// recorded failure in a sweep is the minimal witness.
std::vector<Multiset> multisets_up_to(int max_total);

// K! / prod k_i!  (exact, overflow-checked)
long long word_count(const Multiset& m);

}  // namespace qstirling
