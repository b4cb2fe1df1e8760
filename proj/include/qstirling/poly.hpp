#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qstirling {

// Everything downstream (family polynomials, gamma extraction) is exact
// integer arithmetic; any overflow must surface, never wrap.
inline long long checked_add(long long a, long long b) {
    long long r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("int64 overflow in exact arithmetic");
    return r;
}

inline long long checked_mul(long long a, long long b) {
    long long r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("int64 overflow in exact arithmetic");
    return r;
}

inline long long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = checked_mul(r, n - k + i) / i;  // exact at every step
    return r;
}

// Sparse polynomial with exact integer coefficients in N formal variables.
// Zero coefficients are never stored.
template <std::size_t N>
class Poly {
public:
    using Exponents = std::array<int, N>;

    void add_term(const Exponents& e, long long c) {
        if (c == 0) return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, c);
        } else {
            it->second = checked_add(it->second, c);
            if (it->second == 0) terms_.erase(it);
        }
    }

    long long coeff(const Exponents& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? 0 : it->second;
    }

    bool is_zero() const { return terms_.empty(); }
    const std::map<Exponents, long long>& terms() const { return terms_; }

    Poly& operator+=(const Poly& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    bool operator==(const Poly&) const = default;

    long long total_coefficient() const {
        long long s = 0;
        for (const auto& [e, c] : terms_) s = checked_add(s, c);
        return s;
    }

    // true when all exponent sums agree; the zero polynomial reports degree -1.
    bool is_homogeneous(int& degree) const {
        degree = -1;
        for (const auto& [e, c] : terms_) {
            int d = 0;
            for (int x : e) d += x;
            if (degree == -1) degree = d;
            else if (degree != d) return false;
        }
        return true;
    }

    // Monomials in graded-lexicographic order (total degree, then exponents,
    // both descending), e.g. "2x^2y^2z + x^2yz^2 + xy^2z^2".
    std::string to_text(const std::array<std::string, N>& vars) const {
        if (terms_.empty()) return "0";
        std::vector<std::pair<Exponents, long long>> v(terms_.begin(), terms_.end());
        std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) {
            int da = 0, db = 0;
            for (int x : a.first) da += x;
            for (int x : b.first) db += x;
            if (da != db) return da > db;
            return a.first > b.first;
        });
        std::string out;
        for (std::size_t i = 0; i < v.size(); ++i) {
            long long c = v[i].second;
            if (i == 0) {
                if (c < 0) out += "-";
            } else {
                out += c < 0 ? " - " : " + ";
            }
            long long mag = c < 0 ? -c : c;
            bool constant = true;
            for (int x : v[i].first)
                if (x != 0) constant = false;
            if (mag != 1 || constant) out += std::to_string(mag);
            for (std::size_t k = 0; k < N; ++k) {
                int e = v[i].first[k];
                if (e == 0) continue;
                out += vars[k];
                if (e > 1) out += "^" + std::to_string(e);
            }
        }
        return out;
    }

private:
    std::map<Exponents, long long> terms_;
};

using Poly2 = Poly<2>;
using Poly3 = Poly<3>;

inline std::string poly_to_text(const Poly2& p) { return p.to_text({"x", "y"}); }
inline std::string poly_to_text(const Poly3& p) { return p.to_text({"x", "y", "z"}); }

}  // namespace qstirling
