#include <set>
#include <string>

#include "doctest.h"
#include "qstirling/fs_action.hpp"
#include "qstirling/io.hpp"
#include "qstirling/poly.hpp"
#include "qstirling/tree.hpp"

using namespace qstirling;

namespace {
const char* kPublishedTree = "0(2,7(7),3,5(5(1,6,4),5))";
}

TEST_CASE("vertex identities") {
    CHECK(all_vertex_ids(Multiset({1, 1})) ==
          std::vector<VertexId>{{0, -1}, {1, -1}, {2, -1}});
    CHECK(all_vertex_ids(Multiset({2, 1})) ==
          std::vector<VertexId>{{0, -1}, {1, -1}, {1, 0}, {2, -1}});
    const Multiset m({1, 1, 1, 1, 3, 1, 2});
    CHECK(static_cast<int>(all_vertex_ids(m).size()) == m.K() + 1);

    const Tree t = parse_tree_text(kPublishedTree);
    std::vector<VertexId> ids = tree_vertex_ids(t);
    std::sort(ids.begin(), ids.end());
    CHECK(ids == all_vertex_ids(m));
    CHECK(resolve(t, {5, 0}) == VertexRef{{3, 0}});
    CHECK(resolve(t, {5, 1}) == VertexRef{{3, 1}});
    CHECK(resolve(t, {7, 0}) == VertexRef{{1, 0}});
    CHECK(resolve(t, {3, -1}) == VertexRef{{2}});
    CHECK(resolve(t, {0, -1}) == VertexRef{{}});
    CHECK_FALSE(resolve(t, {5, 2}).has_value());
}

TEST_CASE("fixed classes do not move the tree") {
    const Tree t = parse_tree_text(kPublishedTree);
    for (VertexId u : {VertexId{0, -1}, VertexId{7, -1}, VertexId{3, -1}, VertexId{5, -1},
                       VertexId{7, 0}, VertexId{5, 0}, VertexId{5, 1}, VertexId{1, -1},
                       VertexId{6, -1}, VertexId{4, -1}})
        CHECK(psi(t, u) == t);
}

TEST_CASE("the action at the only double cyclic ascent of the published tree") {
    const Tree t = parse_tree_text(kPublishedTree);
    const Tree expect = parse_tree_text("0(7(7),3,5(5(1,6,4),5),2)");
    CHECK(psi(t, VertexId{2, -1}) == expect);
    CHECK(psi(expect, VertexId{2, -1}) == t);
    CHECK(classify_vertex(expect, {{3}}) == VertexClass::DoubleCyclicDescent);
}

TEST_CASE("the action at an even double cyclic descent") {
    // host sequence (2,1,3): 3 > 2 > 1 makes the even vertex a double cyclic
    // descent; the rearranged cycle anchors back at the host label
    const Tree t = parse_tree_text("0(2(2(1,3)))");
    const Tree expect = parse_tree_text("0(2(2(3,1)))");
    CHECK(classify_vertex(t, {{0, 0}}) == VertexClass::DoubleCyclicDescent);
    CHECK(psi(t, VertexId{2, 0}) == expect);
    CHECK(psi(expect, VertexId{2, 0}) == t);
    CHECK(classify_vertex(expect, {{0, 0}}) == VertexClass::DoubleCyclicAscent);
}

TEST_CASE("involution and pairwise commutation for K <= 4") {
    for (const Multiset& m : multisets_up_to(4)) {
        const std::vector<VertexId> ids = all_vertex_ids(m);
        for (const Tree& t : enumerate_trees(m)) {
            REQUIRE(psi_set(t, {}) == t);
            for (const VertexId& u : ids) {
                const Tree img = psi(t, u);
                REQUIRE(psi(img, u) == t);
                REQUIRE_FALSE(validate(img, m).has_value());
                for (const VertexId& v : ids) REQUIRE(psi(img, v) == psi(psi(t, v), u));
            }
            Tree forward = t;
            for (const VertexId& u : ids) forward = psi(forward, u);
            REQUIRE(psi_set(t, ids) == forward);
        }
    }
}

TEST_CASE("orbit of the two-tree family") {
    const Orbit o = orbit(parse_tree_text("0(2,1)"));
    REQUIRE(o.members.size() == 2);
    CHECK(tree_to_text(o.members[0]) == "0(1,2)");
    CHECK(tree_to_text(o.members[1]) == "0(2,1)");
    CHECK(tree_to_text(o.representative()) == "0(1,2)");
    CHECK(tree_stats(o.representative()).dcdes == 0);

    const Poly2 expect = [] {
        Poly2 p;
        p.add_term({2, 1}, 1);
        p.add_term({1, 2}, 1);
        return p;
    }();
    CHECK(orbit_polynomial(o) == expect);
    CHECK(orbit_polynomial_closed_form(o) == expect);
    CHECK(poly_to_text(orbit_polynomial(o)) == "x^2y + xy^2");
}

TEST_CASE("singleton orbit") {
    const Orbit o = orbit(parse_tree_text("0(1)"));
    REQUIRE(o.members.size() == 1);
    CHECK(tree_to_text(o.representative()) == "0(1)");
    Poly2 xy;
    xy.add_term({1, 1}, 1);
    CHECK(orbit_polynomial(o) == xy);
    CHECK(orbit_polynomial_closed_form(o) == xy);
}

TEST_CASE("orbit of the published tree") {
    const Tree t = parse_tree_text(kPublishedTree);
    const Orbit o = orbit(t);
    REQUIRE(o.members.size() == 2);  // one double cyclic ascent
    CHECK(o.representative() == t);  // dcdes = 0 already
    Poly2 expect;
    expect.add_term({5, 4}, 1);
    expect.add_term({4, 5}, 1);
    CHECK(orbit_polynomial(o) == expect);
    CHECK(orbit_polynomial_closed_form(o) == expect);
}

TEST_CASE("orbits partition the family and sum to its polynomial, K <= 4") {
    for (const Multiset& m : multisets_up_to(4)) {
        const std::vector<Tree> trees = enumerate_trees(m);
        std::set<std::string> assigned;
        Poly2 total;
        for (const Tree& t : trees) {
            if (assigned.count(tree_to_text(t))) continue;
            const Orbit o = orbit(t);
            REQUIRE(o.representative_index != -1);
            for (const Tree& member : o.members)
                REQUIRE(assigned.insert(tree_to_text(member)).second);
            total += orbit_polynomial(o);
        }
        REQUIRE(assigned.size() == trees.size());
        Poly2 family;
        for (const Tree& t : trees) {
            const TreeStats s = tree_stats(t);
            family.add_term({s.casc, s.cdes}, 1);
        }
        REQUIRE(total == family);
    }
}
