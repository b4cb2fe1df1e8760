#include "qstirling/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <map>
#include <set>
#include <stdexcept>
#include <string>

#include "json.hpp"
#include "qstirling/bijection.hpp"
#include "qstirling/fs_action.hpp"
#include "qstirling/gamma.hpp"
#include "qstirling/io.hpp"
#include "qstirling/poly.hpp"
#include "qstirling/tree.hpp"
#include "qstirling/word.hpp"

namespace qstirling {
namespace {

// Records one failure per (check id, multiset): enumeration is smallest-first,
// so the recorded witness is minimal. The witness string is built lazily.
class Checker {
public:
    Checker(VerifyReport& r, const Multiset& m) : r_(r), m_(m.to_text()) {}
    Checker(VerifyReport& r, std::string scope) : r_(r), m_(std::move(scope)) {}

    template <class W>
    bool check(const char* id, bool ok, W&& witness) {
        ++r_.checks;
        if (!ok && failed_.insert(id).second) r_.failures.push_back({id, m_, witness()});
        return ok;
    }

private:
    VerifyReport& r_;
    std::string m_;
    std::set<std::string> failed_;
};

class Timer {
public:
    explicit Timer(VerifyReport& r) : r_(r), start_(std::chrono::steady_clock::now()) {}
    ~Timer() {
        r_.millis = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - start_)
                        .count();
    }

private:
    VerifyReport& r_;
    std::chrono::steady_clock::time_point start_;
};

std::string word_witness(const Word& w) { return "word=" + word_to_text(w); }

std::string id_text(const VertexId& u) {
    return "(" + std::to_string(u.value) + "," + std::to_string(u.copy) + ")";
}

bool is_rotation(const Word& a, const Word& b) {
    if (a.size() != b.size()) return false;
    Word bb = b;
    bb.insert(bb.end(), b.begin(), b.end());
    return std::search(bb.begin(), bb.end(), a.begin(), a.end()) != bb.end();
}

bool actionable(VertexClass c) {
    return c == VertexClass::DoubleCyclicDescent || c == VertexClass::DoubleCyclicAscent;
}

VertexClass toggled(VertexClass c) {
    if (c == VertexClass::DoubleCyclicDescent) return VertexClass::DoubleCyclicAscent;
    if (c == VertexClass::DoubleCyclicAscent) return VertexClass::DoubleCyclicDescent;
    return c;
}

std::optional<VertexClass> class_of(const Tree& t, const VertexId& id) {
    std::optional<VertexRef> ref = resolve(t, id);
    if (!ref) return std::nullopt;
    return classify_vertex(t, *ref);
}

// Known counts, frozen from direct enumeration, keyed by multiset text.
struct GoldenCounts {
    long long quasi;
    long long stirling;
};
const std::map<std::string, GoldenCounts>& golden_counts() {
    static const std::map<std::string, GoldenCounts> g = {
        {"1", {1, 1}},         {"1^2", {1, 1}},          {"1 2", {2, 2}},
        {"1^3", {1, 1}},       {"1^2 2", {3, 3}},        {"1 2 3", {6, 6}},
        {"1^4", {1, 1}},       {"1^3 2", {4, 4}},        {"1^2 2^2", {4, 3}},
        {"1^2 2^2 3^2", {30, 15}},
    };
    return g;
}

long long table_mass(const GammaTable& t) {
    long long s = 0;
    for (const auto& [ij, g] : t.entries) s = checked_add(s, g);
    return s;
}

}  // namespace

VerifyReport run_stats_suite(const std::vector<Multiset>& ms) {
    VerifyReport r;
    r.suite = "stats";
    Timer timer(r);
    for (const Multiset& m : ms) {
        Checker c(r, m);
        const int K = m.K();
        long long count = 0, quasi = 0, stirling = 0;
        for_each_word(m, [&](const Word& w) {
            ++count;
            auto ww = [&] { return word_witness(w); };
            LinearStats s = linear_stats(w);
            c.check("stats.sum", s.asc + s.des + s.plat == K + 1, ww);
            const bool q = is_quasi_stirling(w);
            const bool st = is_stirling(w);
            c.check("stats.stirling-implies-quasi", !st || q, ww);
            quasi += q;
            stirling += st;
            CyclicProfile p = cyclic_profile(w);
            // The class-split identities presume every position is classified,
            // which needs the cycle to be tie-free; with a tie somewhere they
            // can fail (1122 has a cyclic descent but no classified valley).
            bool tie_free = true;
            for (size_t i = 0; i < w.size(); ++i)
                if (w[i] == w[(i + 1) % w.size()]) tie_free = false;
            if (tie_free) {
                c.check("stats.cyclic-balance", p.cpeak == p.cval, ww);
                c.check("stats.cyclic-descent-split", p.cdes == p.cval + p.dcdes, ww);
                c.check("stats.cyclic-ascent-split", p.casc == p.cpeak + p.dcasc, ww);
                c.check("stats.cyclic-partition",
                        p.dcdes + p.dcasc + p.cpeak + p.cval == static_cast<int>(w.size()),
                        ww);
            }
            for (int i = 0; i < static_cast<int>(w.size()); ++i) {
                CyclicClass cl = p.classes[i];
                if (cl != CyclicClass::DoubleCyclicDescent &&
                    cl != CyclicClass::DoubleCyclicAscent)
                    continue;
                CyclicFactorization f = cyclic_factorization(w, i);
                Word lin = f.w1;
                lin.push_back(w[i]);
                lin.insert(lin.end(), f.w2.begin(), f.w2.end());
                lin.insert(lin.end(), f.w3.begin(), f.w3.end());
                auto fw = [&] { return word_witness(w) + " pos=" + std::to_string(i); };
                c.check("stats.factorization-rotation", is_rotation(lin, w), fw);
                bool runs_small = std::all_of(f.w1.begin(), f.w1.end(),
                                              [&](int x) { return x < w[i]; }) &&
                                  std::all_of(f.w2.begin(), f.w2.end(),
                                              [&](int x) { return x < w[i]; });
                c.check("stats.factorization-runs",
                        runs_small && !f.w3.empty() && f.w3.front() >= w[i] &&
                            f.w3.back() >= w[i],
                        fw);
            }
        });
        c.check("stats.count", count == word_count(m), [&] {
            return "enumerated=" + std::to_string(count) +
                   " formula=" + std::to_string(word_count(m));
        });
        auto it = golden_counts().find(m.to_text());
        if (it != golden_counts().end()) {
            c.check("stats.golden-quasi", quasi == it->second.quasi,
                    [&] { return "count=" + std::to_string(quasi); });
            c.check("stats.golden-stirling", stirling == it->second.stirling,
                    [&] { return "count=" + std::to_string(stirling); });
        }
    }
    return r;
}

VerifyReport run_bijection_suite(const std::vector<Multiset>& ms) {
    VerifyReport r;
    r.suite = "bijection";
    Timer timer(r);
    for (const Multiset& m : ms) {
        Checker c(r, m);
        const std::vector<Tree> trees = enumerate_trees(m);
        std::set<std::string> tree_texts;
        std::set<Word> images;
        long long wi_trees = 0;
        for (const Tree& t : trees) {
            tree_texts.insert(tree_to_text(t));
            auto tw = [&] { return "tree=" + tree_to_text(t); };
            const Word w = phi(t);
            c.check("bijection.image-quasi", is_permutation_of(w, m) && is_quasi_stirling(w),
                    tw);
            std::optional<Tree> back = try_phi_inverse(w);
            c.check("bijection.roundtrip", back && *back == t, tw);
            LinearStats s = linear_stats(w);
            TreeStats ts = tree_stats(t);
            c.check("bijection.transport",
                    ts.cdes == s.des && ts.casc == s.asc && ts.eleaf == s.plat, tw);
            const bool wi = is_weakly_increasing(t);
            wi_trees += wi;
            c.check("bijection.stirling-iff-wi", wi == is_stirling(w), tw);
            images.insert(w);
        }
        c.check("bijection.injective",
                images.size() == trees.size() && tree_texts.size() == trees.size(), [&] {
                    return "trees=" + std::to_string(trees.size()) +
                           " images=" + std::to_string(images.size());
                });
        long long quasi_words = 0, stirling_words = 0;
        std::set<std::string> parsed_texts;
        for_each_word(m, [&](const Word& w) {
            auto ww = [&] { return word_witness(w); };
            std::optional<Tree> t = try_phi_inverse(w);
            c.check("bijection.parse-iff-quasi", t.has_value() == is_quasi_stirling(w), ww);
            if (!t) return;
            ++quasi_words;
            stirling_words += is_stirling(w);
            c.check("bijection.inverse-then-phi", phi(*t) == w, ww);
            c.check("bijection.parse-valid", !validate(*t, m).has_value(), ww);
            parsed_texts.insert(tree_to_text(*t));
        });
        c.check("bijection.two-route", parsed_texts == tree_texts, [&] {
            return "direct=" + std::to_string(tree_texts.size()) +
                   " via-words=" + std::to_string(parsed_texts.size());
        });
        c.check("bijection.bijective", static_cast<long long>(trees.size()) == quasi_words,
                [&] {
                    return "trees=" + std::to_string(trees.size()) +
                           " quasi-words=" + std::to_string(quasi_words);
                });
        c.check("bijection.wi-cardinality", wi_trees == stirling_words, [&] {
            return "wi-trees=" + std::to_string(wi_trees) +
                   " stirling-words=" + std::to_string(stirling_words);
        });
    }
    return r;
}

VerifyReport run_observation_suite(const std::vector<Multiset>& ms) {
    VerifyReport r;
    r.suite = "observation";
    Timer timer(r);
    for (const Multiset& m : ms) {
        Checker c(r, m);
        const int K = m.K();
        for (const Tree& t : enumerate_trees(m)) {
            auto tw = [&] { return "tree=" + tree_to_text(t); };
            std::optional<TreeViolation> v = validate(t, m);
            c.check("observation.validate", !v.has_value(),
                    [&] { return "tree=" + tree_to_text(t) + " clause=" + v->clause; });
            TreeStats s = tree_stats(t);
            c.check("observation.eq1",
                    s.eleaf + s.dcdes + s.dcasc + s.cpeak + s.cval == K + 1, tw);
            c.check("observation.eq2", s.cpeak == s.cval, tw);
            c.check("observation.eq3", s.cdes == s.cval + s.dcdes, tw);
            c.check("observation.eq4", s.casc == s.cpeak + s.dcasc, tw);
            c.check("observation.vertex-count", count_vertices(t) == K + 1, tw);
            c.check("observation.text-roundtrip", parse_tree_text(tree_to_text(t)) == t, tw);
            c.check("observation.json-roundtrip",
                    tree_from_json_text(tree_to_json_text(t)) == t, tw);
        }
    }
    return r;
}

namespace {

// Host sequence and pivot position that psi acts through at u (u actionable):
// the parent's sequence for an odd u, u's own sequence for an even u.
struct HostView {
    VertexRef host;
    int pivot_pos;
};
HostView host_view(const VertexRef& u) {
    if (u.path.size() % 2 == 1) {
        VertexRef parent{std::vector<int>(u.path.begin(), u.path.end() - 1)};
        return {parent, u.path.back() + 1};
    }
    return {u, 0};
}

// Counts child orders of u's host satisfying the cyclic-descent-set condition
// that defines the rearrangement. More than one means the condition alone does
// not pin the rearranged tree; the constructive rotation always picks one.
int matching_orders(const Tree& t, const VertexRef& u) {
    HostView h = host_view(u);
    std::vector<int> seq = vertex_sequence(t, h.host);
    CyclicFactorization f = cyclic_factorization(seq, h.pivot_pos);
    Word cyc = f.w2;
    cyc.push_back(seq[h.pivot_pos]);
    cyc.insert(cyc.end(), f.w1.begin(), f.w1.end());
    cyc.insert(cyc.end(), f.w3.begin(), f.w3.end());
    const std::vector<int> target = cyclic_profile(cyc).cdes_entries;
    std::vector<int> children(seq.begin() + 1, seq.end());
    std::sort(children.begin(), children.end());
    int matches = 0;
    do {
        Word cand;
        cand.reserve(seq.size());
        cand.push_back(seq[0]);
        cand.insert(cand.end(), children.begin(), children.end());
        if (cyclic_profile(cand).cdes_entries == target) ++matches;
    } while (std::next_permutation(children.begin(), children.end()));
    return matches;
}

}  // namespace

VerifyReport run_fs_suite(const std::vector<Multiset>& ms) {
    VerifyReport r;
    r.suite = "fs";
    Timer timer(r);
    for (const Multiset& m : ms) {
        Checker c(r, m);
        const std::vector<VertexId> ids = all_vertex_ids(m);
        const std::vector<Tree> trees = enumerate_trees(m);
        std::set<std::string> tree_texts;
        for (const Tree& t : trees) tree_texts.insert(tree_to_text(t));

        long long dcdes_zero = 0;
        long long ambiguous = 0, rearrangements = 0;
        std::string ambiguous_example;
        for (const Tree& t : trees) {
            auto tw = [&] { return "tree=" + tree_to_text(t); };
            const TreeStats base = tree_stats(t);
            dcdes_zero += base.dcdes == 0;
            c.check("fs.psi-set-empty", psi_set(t, {}) == t, tw);

            std::vector<Tree> image(ids.size());
            bool threw = false;
            try {
                for (std::size_t a = 0; a < ids.size(); ++a) image[a] = psi(t, ids[a]);
            } catch (const std::logic_error& e) {
                threw = true;
                std::string what = e.what();
                c.check("fs.postcondition", false,
                        [&] { return "tree=" + tree_to_text(t) + " error=" + what; });
            }
            if (threw) continue;

            for (std::size_t a = 0; a < ids.size(); ++a) {
                const VertexId& u = ids[a];
                auto uw = [&] { return "tree=" + tree_to_text(t) + " u=" + id_text(u); };
                std::optional<VertexClass> cls = class_of(t, u);
                if (!c.check("fs.resolve", cls.has_value(), uw)) continue;
                if (!actionable(*cls)) {
                    c.check("fs.fixed", image[a] == t, uw);
                    continue;
                }
                const Tree& img = image[a];
                c.check("fs.involution", psi(img, u) == t, uw);
                c.check("fs.closure-family", !validate(img, m).has_value(), uw);
                c.check("fs.closure-wi",
                        is_weakly_increasing(img) == is_weakly_increasing(t), uw);
                bool classes_ok = true;
                for (const VertexId& w : ids) {
                    std::optional<VertexClass> before = class_of(t, w);
                    std::optional<VertexClass> after = class_of(img, w);
                    if (!before || !after) {
                        classes_ok = false;
                        break;
                    }
                    const VertexClass expect = w == u ? toggled(*before) : *before;
                    if (*after != expect) {
                        classes_ok = false;
                        break;
                    }
                }
                c.check("fs.class-transport", classes_ok, uw);
                const TreeStats si = tree_stats(img);
                c.check("fs.invariants",
                        si.eleaf == base.eleaf && si.cpeak == base.cpeak &&
                            si.cval == base.cval, uw);
                const int d = *cls == VertexClass::DoubleCyclicAscent ? 1 : -1;
                c.check("fs.stat-toggle",
                        si.cdes == base.cdes + d && si.casc == base.casc - d &&
                            si.dcdes == base.dcdes + d && si.dcasc == base.dcasc - d,
                        uw);
                if (m.K() <= 5) {
                    ++rearrangements;
                    std::optional<VertexRef> ref = resolve(t, u);
                    if (ref && matching_orders(t, *ref) > 1) {
                        ++ambiguous;
                        if (ambiguous_example.empty())
                            ambiguous_example =
                                "tree=" + tree_to_text(t) + " u=" + id_text(u);
                    }
                }
            }

            for (std::size_t a = 0; a < ids.size(); ++a)
                for (std::size_t b = a + 1; b < ids.size(); ++b) {
                    auto pw = [&] {
                        return "tree=" + tree_to_text(t) + " u=" + id_text(ids[a]) +
                               " v=" + id_text(ids[b]);
                    };
                    c.check("fs.commutation", psi(image[a], ids[b]) == psi(image[b], ids[a]),
                            pw);
                }

            Tree forward = t;
            for (const VertexId& u : ids) forward = psi(forward, u);
            c.check("fs.psi-set-order", psi_set(t, ids) == forward, tw);
        }

        std::set<std::string> assigned;
        long long orbit_count = 0;
        Poly3 orbit_sum;
        for (const Tree& t : trees) {
            if (assigned.count(tree_to_text(t))) continue;
            ++orbit_count;
            Orbit o = orbit(t);
            auto ow = [&] { return "tree=" + tree_to_text(t); };
            bool fresh = true, inside = true;
            for (const Tree& member : o.members) {
                const std::string key = tree_to_text(member);
                inside = inside && tree_texts.count(key) > 0;
                fresh = fresh && assigned.insert(key).second;
            }
            c.check("fs.orbit-partition", fresh, ow);
            c.check("fs.orbit-closure", inside, ow);
            if (!c.check("fs.orbit-unique-rep", o.representative_index != -1, ow)) continue;
            const TreeStats rs = tree_stats(o.representative());
            c.check("fs.orbit-size",
                    static_cast<long long>(o.members.size()) == (1LL << rs.dcasc), [&] {
                        return "tree=" + tree_to_text(t) +
                               " size=" + std::to_string(o.members.size()) +
                               " dcasc=" + std::to_string(rs.dcasc);
                    });
            Poly2 direct = orbit_polynomial(o);
            Poly2 closed = orbit_polynomial_closed_form(o);
            c.check("fs.orbit-poly", direct == closed, [&] {
                return "tree=" + tree_to_text(t) + " direct=" + poly_to_text(direct) +
                       " closed=" + poly_to_text(closed);
            });
            for (const auto& [e, coeff] : closed.terms())
                orbit_sum.add_term({e[0], e[1], rs.eleaf}, coeff);
        }
        c.check("fs.orbit-cover", assigned.size() == tree_texts.size(), [&] {
            return "assigned=" + std::to_string(assigned.size()) +
                   " trees=" + std::to_string(tree_texts.size());
        });
        const Poly3 family = compute_polynomial(m, Family::Trees);
        c.check("fs.orbit-sum", orbit_sum == family, [&] {
            return "orbits=" + poly_to_text(orbit_sum) + " family=" + poly_to_text(family);
        });
        c.check("fs.orbit-rep-count", orbit_count == dcdes_zero, [&] {
            return "orbits=" + std::to_string(orbit_count) +
                   " dcdes0-trees=" + std::to_string(dcdes_zero);
        });
        if (ambiguous > 0)
            r.notes.push_back(
                "fs.ambiguity: " + m.to_text() + ": " + std::to_string(ambiguous) + " of " +
                std::to_string(rearrangements) +
                " rearrangements admit multiple child orders satisfying the "
                "cyclic-descent-set condition alone (first: " +
                ambiguous_example + "); the constructive rotation pins a canonical one");
    }
    return r;
}

VerifyReport run_gamma_suite(const std::vector<Multiset>& ms) {
    VerifyReport r;
    r.suite = "gamma";
    Timer timer(r);
    for (const Multiset& m : ms) {
        Checker c(r, m);
        const int K = m.K();
        const Poly3 quasi = compute_polynomial(m, Family::Quasi);
        const Poly3 trees = compute_polynomial(m, Family::Trees);
        const Poly3 stirling = compute_polynomial(m, Family::Stirling);
        const Poly3 itrees = compute_polynomial(m, Family::ITrees);
        c.check("gamma.bridge-quasi-trees", quasi == trees, [&] {
            return "quasi=" + poly_to_text(quasi) + " trees=" + poly_to_text(trees);
        });
        c.check("gamma.bridge-stirling-itrees", stirling == itrees, [&] {
            return "stirling=" + poly_to_text(stirling) + " itrees=" + poly_to_text(itrees);
        });

        const struct {
            Family f;
            const Poly3& p;
        } cases[] = {{Family::Quasi, quasi},
                     {Family::Stirling, stirling},
                     {Family::Trees, trees},
                     {Family::ITrees, itrees}};
        PartialGammaResult pg_quasi, pg_stirling;
        for (const auto& [f, p] : cases) {
            const std::string name = family_name(f);
            PartialGammaResult pg = partial_gamma(p, K);
            c.check(("gamma.partial-" + name).c_str(), pg.ok,
                    [&] { return "failure=" + pg.failure; });
            if (!pg.ok) continue;
            c.check(("gamma.reconstruct-" + name).c_str(), reconstruct(pg.table) == p, [&] {
                return "poly=" + poly_to_text(p) +
                       " rebuilt=" + poly_to_text(reconstruct(pg.table));
            });
            for (const auto& [ij, g] : pg.table.entries)
                if (ij.second == 0)
                    r.notes.push_back("gamma.j0: " + m.to_text() + " family=" + name +
                                      " gamma_{" + std::to_string(ij.first) + ",0}=" +
                                      std::to_string(g));
            if (f == Family::Quasi) pg_quasi = std::move(pg);
            if (f == Family::Stirling) pg_stirling = std::move(pg);
        }

        const GammaTable from_trees = gamma_from_trees(m, Family::Trees);
        const GammaTable from_itrees = gamma_from_trees(m, Family::ITrees);
        if (pg_quasi.ok)
            c.check("gamma.tables-trees", pg_quasi.table.entries == from_trees.entries, [&] {
                return "analytic=" + gamma_to_csv(pg_quasi.table) +
                       " trees=" + gamma_to_csv(from_trees);
            });
        if (pg_stirling.ok)
            c.check("gamma.tables-itrees", pg_stirling.table.entries == from_itrees.entries,
                    [&] {
                        return "analytic=" + gamma_to_csv(pg_stirling.table) +
                               " itrees=" + gamma_to_csv(from_itrees);
                    });

        long long dcdes_zero = 0, wi_dcdes_zero = 0;
        for (const Tree& t : enumerate_trees(m)) {
            TreeStats s = tree_stats(t);
            if (s.dcdes != 0) continue;
            ++dcdes_zero;
            wi_dcdes_zero += is_weakly_increasing(t);
        }
        c.check("gamma.mass-trees", table_mass(from_trees) == dcdes_zero, [&] {
            return "mass=" + std::to_string(table_mass(from_trees)) +
                   " dcdes0-trees=" + std::to_string(dcdes_zero);
        });
        c.check("gamma.mass-itrees", table_mass(from_itrees) == wi_dcdes_zero, [&] {
            return "mass=" + std::to_string(table_mass(from_itrees)) +
                   " dcdes0-wi-trees=" + std::to_string(wi_dcdes_zero);
        });

        if (m.to_text() == "1^2 2^2" && pg_quasi.ok && pg_stirling.ok) {
            const std::map<std::pair<int, int>, long long> quasi_expect = {{{1, 2}, 2},
                                                                           {{2, 1}, 1}};
            const std::map<std::pair<int, int>, long long> stirl_expect = {{{1, 2}, 1},
                                                                           {{2, 1}, 1}};
            c.check("gamma.golden-quasi", pg_quasi.table.entries == quasi_expect,
                    [&] { return gamma_to_csv(pg_quasi.table); });
            c.check("gamma.golden-stirling", pg_stirling.table.entries == stirl_expect,
                    [&] { return gamma_to_csv(pg_stirling.table); });
        }
    }
    return r;
}

VerifyReport run_mprime_suite(const std::vector<Multiset>& ms) {
    VerifyReport r;
    r.suite = "mprime";
    Timer timer(r);
    for (const Multiset& m : ms) {
        Checker c(r, m);
        const Multiset mp = collapsed_multiset(m);
        const Poly3 lhs = compute_polynomial(m, Family::Quasi);
        const Poly3 rhs = compute_polynomial(mp, Family::Quasi);
        c.check("mprime.identity", lhs == rhs, [&] {
            return "M=" + poly_to_text(lhs) + " M'=" + mp.to_text() + ":" + poly_to_text(rhs);
        });
        c.check("mprime.stirling-equiv",
                rhs == compute_polynomial(mp, Family::Stirling) &&
                    word_count(mp) ==
                        static_cast<long long>(rhs.total_coefficient()),
                [&] { return "M'=" + mp.to_text(); });
    }
    return r;
}

VerifyReport run_equidist_suite(int max_n) {
    VerifyReport r;
    r.suite = "equidist";
    Timer timer(r);
    for (int n = 1; n <= max_n; ++n) {
        Multiset m{std::vector<int>(n, 2)};
        Checker c(r, m);
        std::map<int, long long> asc_h, des_h, plat_h;
        long long count = 0;
        for_each_word(m, [&](const Word& w) {
            if (!is_stirling(w)) return;
            ++count;
            LinearStats s = linear_stats(w);
            ++asc_h[s.asc];
            ++des_h[s.des];
            ++plat_h[s.plat];
        });
        c.check("equidist.histograms", asc_h == des_h && des_h == plat_h, [&] {
            auto dump = [](const std::map<int, long long>& h) {
                std::string s = "{";
                for (const auto& [k, v] : h)
                    s += std::to_string(k) + ":" + std::to_string(v) + " ";
                s += "}";
                return s;
            };
            return "asc=" + dump(asc_h) + " des=" + dump(des_h) + " plat=" + dump(plat_h);
        });
        long long dfact = 1;
        for (int i = 3; i <= 2 * n - 1; i += 2) dfact = checked_mul(dfact, i);
        c.check("equidist.count", count == dfact, [&] {
            return "count=" + std::to_string(count) +
                   " double-factorial=" + std::to_string(dfact);
        });
    }
    return r;
}

namespace {

int parse_bound(const std::string& range, const std::string& prefix) {
    const std::string tail = range.substr(prefix.size());
    size_t pos = 0;
    int b;
    try {
        b = std::stoi(tail, &pos);
    } catch (const std::exception&) {
        throw std::invalid_argument("bad range bound '" + tail + "'");
    }
    if (pos != tail.size() || b < 1)
        throw std::invalid_argument("bad range bound '" + tail + "'");
    return b;
}

VerifyReport dispatch_multiset_suite(const std::string& suite, const std::string& range,
                                     int max_k) {
    int bound = suite == "fs" ? 7 : 8;
    std::vector<Multiset> ms;
    std::string range_text;
    if (range.empty()) {
        bound = std::min(bound, max_k);
        ms = multisets_up_to(bound);
        range_text = "K<=" + std::to_string(bound);
    } else if (range.rfind("K<=", 0) == 0) {
        bound = parse_bound(range, "K<=");
        if (bound > max_k)
            throw std::invalid_argument("range K<=" + std::to_string(bound) +
                                        " exceeds the ceiling " + std::to_string(max_k) +
                                        " (raise --max-K)");
        ms = multisets_up_to(bound);
        range_text = "K<=" + std::to_string(bound);
    } else if (range.rfind("n<=", 0) == 0) {
        throw std::invalid_argument("range n<=B applies to the equidist suite only");
    } else {
        Multiset m = parse_multiset(range);
        if (m.K() > max_k)
            throw std::invalid_argument("multiset K=" + std::to_string(m.K()) +
                                        " exceeds the ceiling " + std::to_string(max_k) +
                                        " (raise --max-K)");
        range_text = m.to_text();
        ms.push_back(std::move(m));
    }
    VerifyReport r;
    if (suite == "stats") r = run_stats_suite(ms);
    else if (suite == "bijection") r = run_bijection_suite(ms);
    else if (suite == "observation") r = run_observation_suite(ms);
    else if (suite == "fs") r = run_fs_suite(ms);
    else if (suite == "gamma") r = run_gamma_suite(ms);
    else if (suite == "mprime") r = run_mprime_suite(ms);
    else throw std::invalid_argument("unknown suite '" + suite + "'");
    r.range = range_text;
    return r;
}

VerifyReport dispatch_equidist(const std::string& range, int max_k) {
    int n = std::min(4, max_k / 2);
    if (!range.empty()) {
        if (range.rfind("n<=", 0) != 0)
            throw std::invalid_argument("equidist takes a range of the form n<=B");
        n = parse_bound(range, "n<=");
        if (2 * n > max_k)
            throw std::invalid_argument("range n<=" + std::to_string(n) + " means K=" +
                                        std::to_string(2 * n) + " > ceiling " +
                                        std::to_string(max_k) + " (raise --max-K)");
    }
    VerifyReport r = run_equidist_suite(n);
    r.range = "n<=" + std::to_string(n);
    return r;
}

}  // namespace

std::vector<VerifyReport> run_verify(const std::string& suite, const std::string& range,
                                     int max_k) {
    if (max_k < 1) throw std::invalid_argument("ceiling must be >= 1");
    std::vector<VerifyReport> out;
    if (suite == "all") {
        const bool word_range = !range.empty() && range.rfind("n<=", 0) != 0;
        const bool n_range = !range.empty() && range.rfind("n<=", 0) == 0;
        for (const char* s : {"stats", "observation", "bijection", "fs", "gamma", "mprime"})
            out.push_back(dispatch_multiset_suite(s, word_range ? range : "", max_k));
        out.push_back(dispatch_equidist(n_range ? range : "", max_k));
        return out;
    }
    if (suite == "equidist") {
        out.push_back(dispatch_equidist(range, max_k));
        return out;
    }
    out.push_back(dispatch_multiset_suite(suite, range, max_k));
    return out;
}

int default_max_k() {
    if (const char* env = std::getenv("QSTIRLING_MAX_K")) {
        try {
            size_t pos = 0;
            int v = std::stoi(env, &pos);
            if (pos == std::string(env).size() && v >= 1) return v;
        } catch (const std::exception&) {
        }
    }
    return 9;
}

std::string report_to_text(const VerifyReport& r) {
    std::string out = "suite: " + r.suite + "\n";
    out += "range: " + r.range + "\n";
    out += "checks: " + std::to_string(r.checks) + "\n";
    out += "failures: " + std::to_string(r.failures.size()) + "\n";
    for (const CheckFailure& f : r.failures)
        out += "  fail: " + f.id + " multiset=" + f.multiset + " " + f.witness + "\n";
    for (const std::string& n : r.notes) out += "  note: " + n + "\n";
    out += std::string("result: ") + (r.pass() ? "PASS" : "FAIL") + "\n";
    return out;
}

std::string report_to_json_text(const VerifyReport& r) {
    nlohmann::json j;
    j["suite"] = r.suite;
    j["range"] = r.range;
    j["checks"] = r.checks;
    j["failures"] = nlohmann::json::array();
    for (const CheckFailure& f : r.failures)
        j["failures"].push_back(
            {{"id", f.id}, {"multiset", f.multiset}, {"witness", f.witness}});
    j["notes"] = r.notes;
    j["millis"] = r.millis;
    return j.dump();
}

}  // namespace qstirling
