#include "doctest.h"

#include <stdexcept>

#include "mindil/filling.hpp"

using namespace mindil;

TEST_CASE("Perm construction diagnostics") {
    CHECK_NOTHROW(Perm(1, {2, 3, 4, 1}));
    CHECK_THROWS_WITH_AS(Perm(1, {2, 3, 0, 1}), "not a permutation: symbol 3 unassigned",
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS(Perm(1, {2, 3, 2, 1}), "not a permutation: symbol 2 repeated",
                         std::invalid_argument);
    CHECK_THROWS_AS(Perm(1, {2, 3, 9, 1}), std::invalid_argument);
    CHECK_THROWS_AS(Perm(1, {2, 3, 4}), std::invalid_argument);
}

TEST_CASE("cycle notation parsing") {
    Perm p = Perm::from_cycles("(1,2,3,4)");
    CHECK(p.m() == 1);
    CHECK(p(1) == 2);
    CHECK(p(4) == 1);
    CHECK(p.cycle_string() == "(1,2,3,4)");

    Perm q = Perm::from_cycles("(1,3)(2,4)");
    CHECK(q.cycle_count() == 2);
    CHECK(q.two_cycle_count() == 2);

    // fixed points must be written as singletons
    Perm r = Perm::from_cycles("(1)(2)(3)(4)");
    CHECK(r(2) == 2);

    CHECK_THROWS_AS(Perm::from_cycles("(1,2,3"), std::invalid_argument);
    CHECK_THROWS_AS(Perm::from_cycles("(1,2,3,4,5)"), std::invalid_argument);  // not 4m symbols
}

TEST_CASE("an incomplete cycle set for a five-arc pair is not a permutation") {
    // Three cycles covering only 19 of 20 symbols; the validator must name
    // the gap rather than guess an image.
    const std::string caption =
        "(1,2,19,14)(3,8,15,16,9,17,18,5,10,11,12)(6,13,20,7)";
    CHECK_THROWS_WITH_AS(Perm::from_cycles(caption),
                         "not a permutation: symbol 4 unassigned", std::invalid_argument);
}

TEST_CASE("Q is the fixed-point-free involution j <-> j+2m") {
    Perm q1 = make_Q(1);
    CHECK(q1.cycle_string() == "(1,3)(2,4)");
    Perm q2 = make_Q(2);
    CHECK(q2.cycle_string() == "(1,5)(2,6)(3,7)(4,8)");
    for (int m = 1; m <= 20; ++m) {
        Perm q = make_Q(m);
        for (int j = 1; j <= 4 * m; ++j) {
            CHECK(q(q(j)) == j);
            CHECK(q(j) != j);
        }
    }
}

TEST_CASE("tau cycles") {
    Perm t1 = make_tau(1);
    for (int j = 1; j <= 4; ++j) CHECK(t1(j) == j);

    Perm t2 = make_tau(2);
    CHECK(t2(1) == 3);
    CHECK(t2(3) == 1);
    CHECK(t2(2) == 4);
    CHECK(t2(7) == 5);
    CHECK(t2(5) == 7);
    CHECK(t2(8) == 6);
    CHECK(t2(6) == 8);

    for (int m = 1; m <= 20; ++m) {
        CHECK(make_tau(m).parity_respecting());
    }
}

TEST_CASE("validation of the square gluing") {
    Perm sigma = Perm::from_cycles("(1,2,3,4)");
    FillingValidation v = validate_filling(sigma, 1, 0);
    CHECK(v.parity_reversing);
    CHECK(v.relation_ok);
    CHECK(v.cycle_count == 1);
    CHECK(v.two_cycle_count == 0);
    CHECK(v.genus == 1);
    CHECK(v.valid());

    // identity is parity-respecting and breaks the relation
    Perm id = Perm::from_cycles("(1)(2)(3)(4)");
    FillingValidation vi = validate_filling(id, 1, 0);
    CHECK_FALSE(vi.parity_reversing);
    CHECK_FALSE(vi.relation_ok);
    CHECK_FALSE(vi.valid());
}

TEST_CASE("genus_of") {
    CHECK(genus_of(Perm::from_cycles("(1,2,3,4)")) == 1);
    CHECK_THROWS_WITH_AS(genus_of(Perm::from_cycles("(1)(2)(3)(4)")),
                         "not a filling permutation: sigma Q sigma != tau", std::domain_error);
}

TEST_CASE("torus intersection formula") {
    CHECK(torus_intersection(5, 1, 0, 1) == 5);
    CHECK(torus_intersection(1, 0, 0, 1) == 1);
    CHECK(torus_intersection(2, 1, 1, 1) == 1);
    CHECK_THROWS_WITH_AS(torus_intersection(2, 2, 0, 1),
                         "not simple closed curves: classes must be primitive",
                         std::invalid_argument);
}

TEST_CASE("i_min cases") {
    CHECK(i_min(2, 0) == 4);
    CHECK(i_min(2, 2) == 4);
    CHECK(i_min(2, 3) == 5);
    CHECK(i_min(0, 5) == 4);
    CHECK(i_min(0, 4) == 2);
    CHECK(i_min(0, 6) == 4);
    CHECK(i_min(3, 2) == 6);
    CHECK(i_min(3, 0) == 5);
    CHECK(i_min(1, 0) == 1);
    CHECK(i_min(1, 1) == 1);
    CHECK(i_min(1, 3) == 3);
    CHECK(i_min(1, 4) == 4);
    CHECK_THROWS_AS(i_min(0, 3), std::domain_error);
    CHECK_THROWS_AS(i_min(0, 0), std::domain_error);
}

TEST_CASE("search finds the torus square") {
    PermSearchResult r = search_filling(1, 0, 1);
    REQUIRE(r.found.has_value());
    CHECK(r.conclusive);
    CHECK(validate_filling(*r.found, 1, 0).valid());
    CHECK(r.found->cycle_string() == "(1,2,3,4)");  // canonical order finds the square first
}

TEST_CASE("closed torus with two intersections: two square disks") {
    // Realized by a (1,0) curve against a (1,2) curve: two crossings, two
    // quadrilateral complementary disks, no bigons.
    PermSearchResult r = search_filling(1, 0, 2);
    CHECK(r.conclusive);
    REQUIRE(r.found.has_value());
    FillingValidation v = validate_filling(*r.found, 1, 0);
    CHECK(v.valid());
    CHECK(v.cycle_count == 2);
    CHECK(v.two_cycle_count == 0);
}

TEST_CASE("torus admits three intersections with three complementary disks") {
    PermSearchResult r = search_filling(1, 0, 3);
    REQUIRE(r.found.has_value());
    CHECK(validate_filling(*r.found, 1, 0).valid());
    CHECK(r.found->cycle_count() == 3);
}

TEST_CASE("genus-2 requires four intersections") {
    PermSearchResult none = search_filling(2, 0, 3);
    CHECK(none.conclusive);
    CHECK(none.exhausted());

    PermSearchResult four = search_filling(2, 0, 4);
    REQUIRE(four.found.has_value());
    FillingValidation v = validate_filling(*four.found, 2, 0);
    CHECK(v.valid());
    CHECK(v.cycle_count == 2);
    CHECK(v.two_cycle_count == 0);
    CHECK(genus_of(*four.found) == 2);
}

TEST_CASE("a correct gluing exists for genus 2 with three punctures and five arcs") {
    PermSearchResult r = search_filling(2, 3, 5);
    REQUIRE(r.found.has_value());
    FillingValidation v = validate_filling(*r.found, 2, 3);
    CHECK(v.valid());
    CHECK(v.cycle_count == 3);  // m + 2 - 2g = 5 + 2 - 4
    CHECK(genus_of(*r.found) == 2);
}

TEST_CASE("search respects the budget and reports inconclusively") {
    PermSearchResult r = search_filling(2, 0, 4, 3);
    if (!r.found) CHECK_FALSE(r.conclusive);
}

TEST_CASE("euler identity on every search hit") {
    for (auto [g, n, m] : {std::tuple{1, 0, 1}, {1, 0, 3}, {2, 0, 4}, {1, 2, 2}}) {
        PermSearchResult r = search_filling(g, n, m);
        if (!r.found) continue;
        FillingValidation v = validate_filling(*r.found, g, n);
        REQUIRE(v.valid());
        CHECK(m - 2 * m + v.cycle_count == 2 - 2 * g);
        CHECK(genus_of(*r.found) == g);
    }
}

TEST_CASE("double bigon from the square") {
    Perm sigma = Perm::from_cycles("(1,2,3,4)");
    REQUIRE(validate_filling(sigma, 1, 1).valid());

    Perm s2 = double_bigon(sigma, 1, 1);
    CHECK(s2.m() == 3);
    FillingValidation v2 = validate_filling(s2, 1, 3);
    CHECK(v2.valid());
    CHECK(v2.cycle_count == 3);
    CHECK(v2.two_cycle_count == 2);
    CHECK(genus_of(s2) == 1);

    Perm s3 = double_bigon(s2, 1, 3);
    CHECK(s3.m() == 5);
    FillingValidation v3 = validate_filling(s3, 1, 5);
    CHECK(v3.valid());
    CHECK(v3.two_cycle_count == 4);
    CHECK(genus_of(s3) == 1);

    // i_min agrees with the surgery chain on the punctured torus
    CHECK(i_min(1, 3) == 3);
    CHECK(i_min(1, 5) == 5);
}

TEST_CASE("double bigon applies to a mirrored input") {
    // the inverse square is the mirror image; only non-positive corners exist
    Perm sigma = Perm::from_cycles("(1,4,3,2)");
    REQUIRE(validate_filling(sigma, 1, 0).valid());
    Perm s2 = double_bigon(sigma, 1, 0);
    CHECK(validate_filling(s2, 1, 2).valid());
    CHECK(s2.two_cycle_count() == 2);
}

TEST_CASE("double bigon rejects invalid input") {
    Perm sigma = Perm::from_cycles("(1,2,3,4)");
    CHECK_THROWS_AS(double_bigon(sigma, 2, 0), std::domain_error);
}

TEST_CASE("double bigon from a genus-2 gluing") {
    PermSearchResult r = search_filling(2, 0, 4);
    REQUIRE(r.found.has_value());
    Perm s = double_bigon(*r.found, 2, 0);
    CHECK(s.m() == 6);
    CHECK(validate_filling(s, 2, 2).valid());
}
