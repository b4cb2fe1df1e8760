#include <string>

#include "doctest.h"
#include "json.hpp"
#include "qstirling/gamma.hpp"
#include "qstirling/multiset.hpp"
#include "qstirling/poly.hpp"

using namespace qstirling;

namespace {

Poly2 p2(std::initializer_list<std::pair<std::array<int, 2>, long long>> terms) {
    Poly2 p;
    for (const auto& [e, c] : terms) p.add_term(e, c);
    return p;
}

}  // namespace

TEST_CASE("polynomial text form") {
    Poly3 p;
    CHECK(poly_to_text(p) == "0");
    p.add_term({0, 0, 0}, 3);
    CHECK(poly_to_text(p) == "3");
    CHECK(poly_to_text(p2({{{1, 0}, 1}, {{0, 1}, -2}})) == "x - 2y");
    CHECK(poly_to_text(p2({{{2, 2}, 2}, {{3, 0}, 1}})) == "2x^2y^2 + x^3");
}

TEST_CASE("checked arithmetic surfaces overflow") {
    CHECK(binomial(10, 3) == 120);
    CHECK(binomial(3, 5) == 0);
    CHECK(binomial(61, 30) == 232714176627630544LL);
    CHECK_THROWS_AS(binomial(100, 50), std::overflow_error);
    CHECK_THROWS_AS(checked_add(0x7fffffffffffffffLL, 1), std::overflow_error);
    CHECK_THROWS_AS(checked_mul(0x4000000000000000LL, 2), std::overflow_error);
}

TEST_CASE("family polynomials of 1^2 2^2") {
    const Multiset m({2, 2});
    const Poly3 quasi = compute_polynomial(m, Family::Quasi);
    const Poly3 stirling = compute_polynomial(m, Family::Stirling);
    CHECK(poly_to_text(quasi) == "2x^2y^2z + x^2yz^2 + xy^2z^2");
    CHECK(poly_to_text(stirling) == "x^2y^2z + x^2yz^2 + xy^2z^2");
    CHECK(compute_polynomial(m, Family::Trees) == quasi);
    CHECK(compute_polynomial(m, Family::ITrees) == stirling);
    CHECK(quasi.total_coefficient() == 4);
    CHECK(stirling.total_coefficient() == 3);
}

TEST_CASE("z slices") {
    const auto slices = slice_by_z(compute_polynomial(Multiset({2, 2}), Family::Quasi));
    REQUIRE(slices.size() == 2);
    CHECK(slices[0].first == 1);
    CHECK(slices[0].second == p2({{{2, 2}, 2}}));
    CHECK(slices[1].first == 2);
    CHECK(slices[1].second == p2({{{2, 1}, 1}, {{1, 2}, 1}}));
}

TEST_CASE("gamma expansion of symmetric slices") {
    GammaExpandResult r = gamma_expand(p2({{{2, 1}, 1}, {{1, 2}, 1}}));
    REQUIRE(r.ok);
    CHECK(r.degree == 3);
    CHECK(r.gamma == std::vector<long long>{0, 1});

    r = gamma_expand(p2({{{2, 2}, 2}}));
    REQUIRE(r.ok);
    CHECK(r.degree == 4);
    CHECK(r.gamma == std::vector<long long>{0, 0, 2});

    // (x+y)^2 + extra xy
    r = gamma_expand(p2({{{2, 0}, 1}, {{1, 1}, 3}, {{0, 2}, 1}}));
    REQUIRE(r.ok);
    CHECK(r.gamma == std::vector<long long>{1, 1});

    const GammaExpandResult zero = gamma_expand(Poly2{});
    CHECK(zero.ok);
    CHECK(zero.degree == -1);
    CHECK(zero.gamma.empty());
}

TEST_CASE("gamma expansion failures are values, not exceptions") {
    // x^2 + y^2 = (x+y)^2 - 2xy: gamma_1 would be negative
    GammaExpandResult r = gamma_expand(p2({{{2, 0}, 1}, {{0, 2}, 1}}));
    CHECK_FALSE(r.ok);
    CHECK(r.failure == "gamma_1 = -2 < 0");

    r = gamma_expand(p2({{{2, 0}, 1}}));
    CHECK_FALSE(r.ok);
    CHECK(r.failure.find("not symmetric") != std::string::npos);

    r = gamma_expand(p2({{{1, 0}, 1}, {{0, 1}, 1}, {{1, 1}, 1}}));
    CHECK_FALSE(r.ok);
    CHECK(r.failure == "not homogeneous");
}

TEST_CASE("partial gamma tables of 1^2 2^2") {
    const Multiset m({2, 2});
    const PartialGammaResult quasi =
        partial_gamma(compute_polynomial(m, Family::Quasi), m.K());
    REQUIRE(quasi.ok);
    const std::map<std::pair<int, int>, long long> quasi_expect = {{{1, 2}, 2}, {{2, 1}, 1}};
    CHECK(quasi.table.entries == quasi_expect);

    const PartialGammaResult stirling =
        partial_gamma(compute_polynomial(m, Family::Stirling), m.K());
    REQUIRE(stirling.ok);
    const std::map<std::pair<int, int>, long long> stirling_expect = {{{1, 2}, 1},
                                                                      {{2, 1}, 1}};
    CHECK(stirling.table.entries == stirling_expect);

    CHECK(reconstruct(quasi.table) == compute_polynomial(m, Family::Quasi));
    CHECK(reconstruct(stirling.table) == compute_polynomial(m, Family::Stirling));
}

TEST_CASE("partial gamma rejects slices of the wrong degree") {
    Poly3 p;
    p.add_term({1, 0, 1}, 1);  // slice z^1 has degree 1, but K+1-i wants 5
    const PartialGammaResult r = partial_gamma(p, 5);
    CHECK_FALSE(r.ok);
    CHECK(r.failure.find("homogeneous") != std::string::npos);
}

TEST_CASE("gamma tables counted from trees") {
    const GammaTable small = gamma_from_trees(Multiset({1, 1}), Family::Trees);
    const std::map<std::pair<int, int>, long long> expect = {{{0, 1}, 1}};
    CHECK(small.entries == expect);
    CHECK(small.family == "trees");

    const Multiset m({2, 2});
    CHECK(gamma_from_trees(m, Family::Trees).entries ==
          partial_gamma(compute_polynomial(m, Family::Quasi), m.K()).table.entries);
    CHECK(gamma_from_trees(m, Family::ITrees).entries ==
          partial_gamma(compute_polynomial(m, Family::Stirling), m.K()).table.entries);
    CHECK_THROWS_AS(gamma_from_trees(m, Family::Quasi), std::invalid_argument);
}

TEST_CASE("table reconstruction round-trips for K <= 5") {
    for (const Multiset& m : multisets_up_to(5)) {
        for (Family f : {Family::Quasi, Family::Stirling}) {
            const Poly3 p = compute_polynomial(m, f);
            const PartialGammaResult r = partial_gamma(p, m.K());
            REQUIRE(r.ok);
            REQUIRE(reconstruct(r.table) == p);
        }
    }
}

TEST_CASE("gamma table renderings") {
    const Multiset m({2, 2});
    PartialGammaResult quasi = partial_gamma(compute_polynomial(m, Family::Quasi), m.K());
    REQUIRE(quasi.ok);
    CHECK(gamma_to_text(quasi.table) == "z^1: 2 (xy)^2\nz^2: (xy) (x+y)\n");
    CHECK(gamma_to_csv(quasi.table) == "i,j,value\n1,2,2\n2,1,1\n");

    GammaTable st = gamma_from_trees(m, Family::ITrees);
    CHECK(gamma_to_csv(st) == "i,j,value\n1,2,1\n2,1,1\n");
    const nlohmann::json j = nlohmann::json::parse(gamma_to_json_text(st));
    CHECK(j.at("family") == "itrees");
    CHECK(j.at("K") == 4);
    CHECK(j.at("multiset") == std::vector<int>{2, 2});
    CHECK(j.at("gamma").size() == 2);
    CHECK(gamma_to_text(GammaTable{}) == "0\n");
}

TEST_CASE("family names parse both ways") {
    for (Family f : {Family::Quasi, Family::Stirling, Family::Trees, Family::ITrees})
        CHECK(parse_family(family_name(f)) == f);
    CHECK_THROWS_AS(parse_family("nope"), std::invalid_argument);
}
