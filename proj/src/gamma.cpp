#include "qstirling/gamma.hpp"

#include <stdexcept>

#include "json.hpp"
#include "qstirling/tree.hpp"
#include "qstirling/word.hpp"

namespace qstirling {

const char* family_name(Family f) {
    switch (f) {
        case Family::Quasi: return "quasi";
        case Family::Stirling: return "stirling";
        case Family::Trees: return "trees";
        case Family::ITrees: return "itrees";
    }
    throw std::logic_error("family_name: bad family");
}

Family parse_family(const std::string& name) {
    if (name == "quasi") return Family::Quasi;
    if (name == "stirling") return Family::Stirling;
    if (name == "trees") return Family::Trees;
    if (name == "itrees") return Family::ITrees;
    throw std::invalid_argument("unknown family '" + name + "' (quasi|stirling|trees|itrees)");
}

Poly3 compute_polynomial(const Multiset& m, Family f) {
    Poly3 p;
    if (f == Family::Quasi || f == Family::Stirling) {
        for_each_word(m, [&](const Word& w) {
            if (f == Family::Quasi ? !is_quasi_stirling(w) : !is_stirling(w)) return;
            LinearStats s = linear_stats(w);
            p.add_term({s.asc, s.des, s.plat}, 1);
        });
    } else {
        for (const Tree& t : enumerate_trees(m)) {
            if (f == Family::ITrees && !is_weakly_increasing(t)) continue;
            TreeStats s = tree_stats(t);
            p.add_term({s.casc, s.cdes, s.eleaf}, 1);
        }
    }
    return p;
}

std::vector<std::pair<int, Poly2>> slice_by_z(const Poly3& p) {
    std::map<int, Poly2> slices;
    for (const auto& [e, c] : p.terms()) slices[e[2]].add_term({e[0], e[1]}, c);
    std::vector<std::pair<int, Poly2>> out;
    for (auto& [i, s] : slices)
        if (!s.is_zero()) out.emplace_back(i, std::move(s));
    return out;
}

GammaExpandResult gamma_expand(const Poly2& s) {
    GammaExpandResult r;
    if (s.is_zero()) return r;
    int d = -1;
    if (!s.is_homogeneous(d)) {
        r.ok = false;
        r.failure = "not homogeneous";
        return r;
    }
    r.degree = d;
    for (const auto& [e, c] : s.terms()) {
        if (s.coeff({e[1], e[0]}) != c) {
            r.ok = false;
            r.failure = "not symmetric at x^" + std::to_string(e[0]) + "y^" + std::to_string(e[1]);
            return r;
        }
    }
    // triangular elimination: (xy)^i (x+y)^{d-2i} with i > j has no x^j y^{d-j}
    // term, so the residual coefficient of x^j y^{d-j} is gamma_j
    Poly2 residual = s;
    r.gamma.assign(d / 2 + 1, 0);
    for (int j = 0; j <= d / 2; ++j) {
        long long g = residual.coeff({j, d - j});
        if (g < 0) {
            r.ok = false;
            r.failure = "gamma_" + std::to_string(j) + " = " + std::to_string(g) + " < 0";
            return r;
        }
        if (g == 0) continue;
        r.gamma[j] = g;
        const int e = d - 2 * j;
        for (int t = 0; t <= e; ++t)
            residual.add_term({j + t, d - j - t}, checked_mul(-g, binomial(e, t)));
    }
    if (!residual.is_zero()) {
        r.ok = false;
        r.failure = "nonzero residual";
    }
    return r;
}

PartialGammaResult partial_gamma(const Poly3& p, int K) {
    PartialGammaResult res;
    res.table.K = K;
    for (const auto& [i, s] : slice_by_z(p)) {
        int d = -1;
        if (!s.is_homogeneous(d) || d != K + 1 - i) {
            res.ok = false;
            res.failure =
                "slice z^" + std::to_string(i) + " is not homogeneous of degree K+1-i";
            return res;
        }
        GammaExpandResult ge = gamma_expand(s);
        if (!ge.ok) {
            res.ok = false;
            res.failure = "slice z^" + std::to_string(i) + ": " + ge.failure;
            return res;
        }
        for (int j = 0; j < static_cast<int>(ge.gamma.size()); ++j)
            if (ge.gamma[j] != 0) res.table.entries[{i, j}] = ge.gamma[j];
    }
    return res;
}

GammaTable gamma_from_trees(const Multiset& m, Family f) {
    if (f != Family::Trees && f != Family::ITrees)
        throw std::invalid_argument("gamma_from_trees: family must be trees or itrees");
    GammaTable t;
    t.K = m.K();
    t.multiplicities = m.multiplicities();
    t.family = family_name(f);
    for (const Tree& tree : enumerate_trees(m)) {
        if (f == Family::ITrees && !is_weakly_increasing(tree)) continue;
        TreeStats s = tree_stats(tree);
        if (s.dcdes != 0) continue;
        auto [it, fresh] = t.entries.try_emplace({s.eleaf, s.cdes}, 1);
        if (!fresh) it->second = checked_add(it->second, 1);
    }
    return t;
}

Poly3 reconstruct(const GammaTable& t) {
    Poly3 p;
    for (const auto& [ij, g] : t.entries) {
        const auto [i, j] = ij;
        const int e = t.K + 1 - i - 2 * j;
        if (e < 0) throw std::invalid_argument("reconstruct: exponent K+1-i-2j went negative");
        for (int s = 0; s <= e; ++s)
            p.add_term({j + s, j + e - s, i}, checked_mul(g, binomial(e, s)));
    }
    return p;
}

std::string gamma_to_text(const GammaTable& t) {
    if (t.entries.empty()) return "0\n";
    std::string out;
    int cur_i = -1;
    for (const auto& [ij, g] : t.entries) {
        const auto [i, j] = ij;
        if (i != cur_i) {
            if (cur_i != -1) out += '\n';
            out += "z^" + std::to_string(i) + ":";
            cur_i = i;
        } else {
            out += " +";
        }
        out += ' ';
        if (g != 1) out += std::to_string(g) + " ";
        out += "(xy)";
        if (j != 1) out += "^" + std::to_string(j);
        const int e = t.K + 1 - i - 2 * j;
        if (e > 0) {
            out += " (x+y)";
            if (e != 1) out += "^" + std::to_string(e);
        }
    }
    out += '\n';
    return out;
}

std::string gamma_to_csv(const GammaTable& t) {
    std::string out = "i,j,value\n";
    for (const auto& [ij, g] : t.entries)
        out += std::to_string(ij.first) + "," + std::to_string(ij.second) + "," +
               std::to_string(g) + "\n";
    return out;
}

std::string gamma_to_json_text(const GammaTable& t) {
    nlohmann::json j;
    j["multiset"] = t.multiplicities;
    j["family"] = t.family;
    j["K"] = t.K;
    j["gamma"] = nlohmann::json::array();
    for (const auto& [ij, g] : t.entries)
        j["gamma"].push_back({{"i", ij.first}, {"j", ij.second}, {"value", g}});
    return j.dump();
}

}  // namespace qstirling
