#include <map>
#include <set>
#include <string>

#include "doctest.h"
#include "qstirling/io.hpp"
#include "qstirling/multiset.hpp"
#include "qstirling/word.hpp"

using namespace qstirling;

namespace {

std::string compact(const Word& w) {
    std::string s;
    for (int v : w) s += std::to_string(v);
    return s;
}

// Independent quadruple-loop oracle for the interleaved-pair condition.
bool quasi_oracle(const Word& w) {
    const int k = static_cast<int>(w.size());
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            for (int l = j + 1; l < k; ++l)
                for (int e = l + 1; e < k; ++e)
                    if (w[i] == w[l] && w[j] == w[e] && w[i] != w[j]) return false;
    return true;
}

// Independent triple-loop oracle for the between-equal-letters condition.
bool stirling_oracle(const Word& w) {
    const int k = static_cast<int>(w.size());
    for (int i = 0; i < k; ++i)
        for (int l = i + 1; l < k; ++l)
            if (w[i] == w[l])
                for (int j = i + 1; j < l; ++j)
                    if (w[j] < w[i]) return false;
    return true;
}

}  // namespace

TEST_CASE("multiset basics") {
    Multiset m({2, 2});
    CHECK(m.n() == 2);
    CHECK(m.K() == 4);
    CHECK(m.multiplicity(1) == 2);
    CHECK(m.to_text() == "1^2 2^2");
    CHECK(Multiset({1, 1, 1, 1, 3, 1, 2}).to_text() == "1 2 3 4 5^3 6 7^2");
    CHECK_THROWS_AS(Multiset({}), std::invalid_argument);
    CHECK_THROWS_AS(Multiset({2, 0}), std::invalid_argument);
    CHECK(word_count(Multiset({2, 2})) == 6);
    CHECK(word_count(Multiset({1, 1, 1, 1, 3, 1, 2})) == 10 * 9 * 8 * 7 * 6 * 5 * 4 / 2);
}

TEST_CASE("collapsed multiset") {
    CHECK(collapsed_multiset(Multiset({2, 2})) == Multiset({3, 1}));
    CHECK(collapsed_multiset(Multiset({1, 1, 1})) == Multiset({1, 1, 1}));
    CHECK(collapsed_multiset(Multiset({1, 1, 1, 1, 3, 1, 2})).to_text() ==
          "1^4 2 3 4 5 6 7");
}

TEST_CASE("multisets_up_to is ordered by total then lexicographic") {
    const std::vector<Multiset> ms = multisets_up_to(3);
    REQUIRE(ms.size() == 7);  // compositions of 1..3: 1 + 2 + 4
    CHECK(ms[0].to_text() == "1");
    CHECK(ms[1].to_text() == "1 2");
    CHECK(ms[2].to_text() == "1^2");
    CHECK(ms[3].to_text() == "1 2 3");
    CHECK(ms[4].to_text() == "1 2^2");
    CHECK(ms[5].to_text() == "1^2 2");
    CHECK(ms[6].to_text() == "1^3");
    CHECK(multisets_up_to(8).size() == 255);
}

TEST_CASE("published quasi-Stirling and Stirling sets of 1^2 2^2") {
    std::set<std::string> quasi, stirling, all;
    for_each_word(Multiset({2, 2}), [&](const Word& w) {
        all.insert(compact(w));
        if (is_quasi_stirling(w)) quasi.insert(compact(w));
        if (is_stirling(w)) stirling.insert(compact(w));
    });
    CHECK(all == std::set<std::string>{"1122", "1212", "1221", "2112", "2121", "2211"});
    CHECK(quasi == std::set<std::string>{"1122", "1221", "2112", "2211"});
    CHECK(stirling == std::set<std::string>{"1122", "1221", "2211"});
}

TEST_CASE("equal letters never form the forbidden pattern") {
    CHECK(is_quasi_stirling({1, 1, 1, 1}));
    CHECK(is_stirling({1, 1, 1, 1}));
    CHECK(is_quasi_stirling({2, 1, 1, 2, 2}));
    CHECK_FALSE(is_quasi_stirling({1, 2, 1, 2}));
    CHECK_FALSE(is_quasi_stirling({2, 1, 2, 1}));
    CHECK_FALSE(is_quasi_stirling({3, 1, 2, 3, 1, 2}));
    // weak comparison: equal middle letters are allowed
    CHECK(is_stirling({1, 2, 1, 1}));
    CHECK_FALSE(is_stirling({2, 1, 2}));
}

TEST_CASE("predicates agree with brute-force oracles for K <= 6") {
    for (const Multiset& m : multisets_up_to(6)) {
        for_each_word(m, [&](const Word& w) {
            REQUIRE(is_quasi_stirling(w) == quasi_oracle(w));
            REQUIRE(is_stirling(w) == stirling_oracle(w));
        });
    }
}

TEST_CASE("linear statistics of the published word") {
    const Word w = parse_word("2773516455");
    REQUIRE(w == Word{2, 7, 7, 3, 5, 1, 6, 4, 5, 5});
    const LinearStats s = linear_stats(w);
    CHECK(s.asc == 5);
    CHECK(s.des == 4);
    CHECK(s.plat == 2);
    CHECK(s.ddes == 0);
}

TEST_CASE("linear statistics small cases") {
    CHECK(linear_stats({1}) == LinearStats{1, 1, 0, 0});
    CHECK(linear_stats({1, 1}) == LinearStats{1, 1, 1, 0});
    CHECK(linear_stats({2, 1}) == LinearStats{1, 2, 0, 1});
    CHECK(linear_stats({3, 2, 1}) == LinearStats{1, 3, 0, 2});
    for (const Multiset& m : multisets_up_to(6))
        for_each_word(m, [&](const Word& w) {
            LinearStats s = linear_stats(w);
            REQUIRE(s.asc + s.des + s.plat == m.K() + 1);
        });
}

TEST_CASE("cyclic profile of short sequences") {
    const CyclicProfile p = cyclic_profile({0, 1, 2});
    CHECK(p.cdes == 1);
    CHECK(p.casc == 2);
    CHECK(p.cdes_entries == std::vector<int>{2});
    REQUIRE(p.classes.size() == 3);
    CHECK(p.classes[0] == CyclicClass::CyclicValley);
    CHECK(p.classes[1] == CyclicClass::DoubleCyclicAscent);
    CHECK(p.classes[2] == CyclicClass::CyclicPeak);

    const CyclicProfile q = cyclic_profile({0, 2, 1});
    CHECK(q.cdes == 2);
    CHECK(q.casc == 1);
    CHECK(q.cdes_entries == std::vector<int>{1, 2});
    CHECK(q.classes[1] == CyclicClass::CyclicPeak);
    CHECK(q.classes[2] == CyclicClass::DoubleCyclicDescent);

    // ties classify nothing and count nothing
    const CyclicProfile t = cyclic_profile({1, 1, 1});
    CHECK(t.cdes == 0);
    CHECK(t.casc == 0);
    CHECK(t.classes == std::vector<CyclicClass>(3, CyclicClass::None));

    const CyclicProfile single = cyclic_profile({5});
    CHECK(single.cdes == 0);
    CHECK(single.casc == 0);
    CHECK(single.classes == std::vector<CyclicClass>{CyclicClass::None});
}

TEST_CASE("published cyclic factorization of 15324") {
    const Word w = {1, 5, 3, 2, 4};
    const CyclicFactorization f = cyclic_factorization(w, 2);
    CHECK(f.w1 == Word{});
    CHECK(f.w2 == Word{2});
    CHECK(f.w3 == Word{4, 1, 5});
    CHECK_THROWS_AS(cyclic_factorization(w, 0), std::invalid_argument);  // 1 is a valley
}

TEST_CASE("factorization reassembles to a rotation everywhere, K <= 6") {
    auto is_rotation = [](const Word& a, const Word& b) {
        if (a.size() != b.size()) return false;
        Word bb = b;
        bb.insert(bb.end(), b.begin(), b.end());
        return std::search(bb.begin(), bb.end(), a.begin(), a.end()) != bb.end();
    };
    for (const Multiset& m : multisets_up_to(6)) {
        for_each_word(m, [&](const Word& w) {
            const CyclicProfile p = cyclic_profile(w);
            for (int i = 0; i < static_cast<int>(w.size()); ++i) {
                if (p.classes[i] != CyclicClass::DoubleCyclicAscent &&
                    p.classes[i] != CyclicClass::DoubleCyclicDescent)
                    continue;
                const CyclicFactorization f = cyclic_factorization(w, i);
                Word lin = f.w1;
                lin.push_back(w[i]);
                lin.insert(lin.end(), f.w2.begin(), f.w2.end());
                lin.insert(lin.end(), f.w3.begin(), f.w3.end());
                REQUIRE(is_rotation(lin, w));
            }
        });
    }
}

TEST_CASE("enumeration is lexicographic and complete") {
    const std::vector<Word> words = enumerate_words(Multiset({2, 1}));
    REQUIRE(words.size() == 3);
    CHECK(words[0] == Word{1, 1, 2});
    CHECK(words[1] == Word{1, 2, 1});
    CHECK(words[2] == Word{2, 1, 1});
    for (const Multiset& m : multisets_up_to(5)) {
        long long count = 0;
        for_each_word(m, [&](const Word& w) {
            ++count;
            REQUIRE(is_permutation_of(w, m));
        });
        REQUIRE(count == word_count(m));
    }
}
