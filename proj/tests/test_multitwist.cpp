#include "doctest.h"

#include <stdexcept>

#include <cmath>
#include <random>

#include "mindil/multitwist.hpp"
#include "mindil/thurston.hpp"

using namespace mindil;

TEST_CASE("intersection matrix validation") {
    CHECK_NOTHROW(IntersectionMatrix(2, 2, {1, 1, 1, 1}));
    CHECK_THROWS_AS(IntersectionMatrix(2, 2, {1, 1, -1, 1}), std::invalid_argument);
    CHECK_THROWS_WITH_AS(IntersectionMatrix(2, 2, {0, 0, 1, 1}), "cannot fill: row 1 is zero",
                         std::domain_error);
    CHECK_THROWS_WITH_AS(IntersectionMatrix(2, 2, {1, 0, 1, 0}), "cannot fill: column 2 is zero",
                         std::domain_error);
    CHECK_THROWS_AS(IntersectionMatrix(1, 2, {1}), std::invalid_argument);
}

TEST_CASE("matrix parsing") {
    IntersectionMatrix j = IntersectionMatrix::from_json(
        R"({"rows":2,"cols":2,"entries":[[2,1],[1,2]]})");
    CHECK(j.at(0, 0) == 2);
    CHECK(j.at(1, 0) == 1);

    IntersectionMatrix c = IntersectionMatrix::from_csv("2,1\n1,2\n");
    CHECK(c.rows() == 2);
    CHECK(c.at(0, 1) == 1);
}

TEST_CASE("mu closed forms") {
    CHECK(mu(IntersectionMatrix(1, 1, {4})) == doctest::Approx(16.0).epsilon(1e-14));
    CHECK(mu(IntersectionMatrix(2, 2, {1, 1, 1, 1})) == doctest::Approx(4.0).epsilon(1e-14));
    CHECK(mu(IntersectionMatrix(2, 2, {2, 1, 1, 2})) == doctest::Approx(9.0).epsilon(1e-13));
}

TEST_CASE("mu via power iteration on larger shapes") {
    // 3x3 all-ones: N^T N = 3 * ones, top eigenvalue 9.
    IntersectionMatrix ones(3, 3, std::vector<long long>(9, 1));
    CHECK(mu(ones) == doctest::Approx(9.0).epsilon(1e-11));

    // rank-one rectangular: N = [[1],[2],[2]], N^T N = [9]
    IntersectionMatrix col(3, 1, {1, 2, 2});
    CHECK(mu(col) == doctest::Approx(9.0).epsilon(1e-12));

    // mu is at least the square of the largest entry
    IntersectionMatrix m(3, 4, {1, 0, 2, 1, 0, 3, 1, 0, 2, 1, 0, 5});
    CHECK(mu(m) >= 25.0 - 1e-9);
}

TEST_CASE("mu symmetric in transposition") {
    std::mt19937 rng(321);
    std::uniform_int_distribution<long long> d(0, 6);
    for (int trial = 0; trial < 30; ++trial) {
        int r = 2 + trial % 3, c = 2 + (trial / 3) % 3;
        std::vector<long long> e(static_cast<std::size_t>(r) * c);
        for (auto& x : e) x = d(rng);
        // pad ones to guarantee row/column positivity
        for (int i = 0; i < r; ++i) e[static_cast<std::size_t>(i) * c + i % c] = 1 + d(rng);
        IntersectionMatrix N(r, c, e);
        std::vector<long long> et(static_cast<std::size_t>(r) * c);
        for (int i = 0; i < r; ++i) {
            for (int j = 0; j < c; ++j) et[static_cast<std::size_t>(j) * r + i] = N.at(i, j);
        }
        IntersectionMatrix Nt(c, r, et);
        CHECK(mu(N) == doctest::Approx(mu(Nt)).epsilon(1e-12));
    }
}

TEST_CASE("mu monotone under entrywise increase") {
    std::mt19937 rng(99);
    std::uniform_int_distribution<long long> d(1, 5);
    for (int trial = 0; trial < 30; ++trial) {
        std::vector<long long> e(4);
        for (auto& x : e) x = d(rng);
        IntersectionMatrix N(2, 2, e);
        std::vector<long long> e2 = e;
        e2[static_cast<std::size_t>(trial) % 4] += 1 + d(rng) % 3;
        IntersectionMatrix N2(2, 2, e2);
        CHECK(mu(N2) >= mu(N) - 1e-12);
    }
}

TEST_CASE("rep generators") {
    auto [A, B] = rep_generators(IntersectionMatrix(1, 1, {3}));
    CHECK(A.b == doctest::Approx(-3.0).epsilon(1e-12));
    CHECK(B.c == doctest::Approx(3.0).epsilon(1e-12));
    CHECK(A.det() == doctest::Approx(1.0).epsilon(1e-9));

    auto [A2, B2] = rep_generators(IntersectionMatrix(2, 2, {2, 1, 1, 2}));
    CHECK(A2.b == doctest::Approx(-3.0).epsilon(1e-12));
    CHECK(B2.c == doctest::Approx(3.0).epsilon(1e-12));

    auto [A3, B3] = rep_generators(IntersectionMatrix(2, 2, {1, 1, 1, 1}));
    CHECK(A3.b == doctest::Approx(-2.0).epsilon(1e-12));
    CHECK(B3.c == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("classification under the multitwist representation") {
    TwistWord ab = TwistWord::parse("a b");

    MultitwistClassification c4 = multitwist_classify(ab, IntersectionMatrix(1, 1, {4}));
    CHECK(c4.cls == MatClass::Hyperbolic);
    CHECK(c4.dilatation == doctest::Approx(13.9282032302755).epsilon(1e-10));

    MultitwistClassification cp = multitwist_classify(ab, IntersectionMatrix(2, 2, {1, 1, 1, 1}));
    CHECK(cp.cls == MatClass::Parabolic);
    CHECK(cp.trace == doctest::Approx(-2.0).epsilon(1e-12));
    CHECK_FALSE(cp.tolerance_classified);  // mu = 4 exactly

    MultitwistClassification ch = multitwist_classify(ab, IntersectionMatrix(2, 2, {2, 1, 1, 2}));
    CHECK(ch.cls == MatClass::Hyperbolic);
    CHECK(ch.dilatation == doctest::Approx(6.85410196624968).epsilon(1e-10));

    MultitwistClassification ci = multitwist_classify(TwistWord(), IntersectionMatrix(1, 1, {5}));
    CHECK(ci.cls == MatClass::Identity);
}

TEST_CASE("reduction to a single pair matches the exact pipeline") {
    std::vector<TwistWord> words = {TwistWord::parse("a b"), TwistWord::parse("a b a^-1 b^-1"),
                                    TwistWord::parse("a^2 b"), TwistWord::parse("a")};
    for (long n = 1; n <= 20; ++n) {
        IntersectionMatrix N(1, 1, {n});
        CHECK(mu(N) == doctest::Approx(static_cast<double>(n) * n).epsilon(1e-14));
        for (const TwistWord& w : words) {
            ProjMat2 exact = evaluate(w, n);
            MultitwistClassification c = multitwist_classify(w, N);
            double exact_tr = exact.abs_trace().get_d();
            CHECK(std::abs(c.trace) == doctest::Approx(exact_tr).epsilon(1e-9));
            if (classify(exact) == MatClass::Hyperbolic) {
                CHECK(c.cls == MatClass::Hyperbolic);
                CHECK(c.dilatation ==
                      doctest::Approx(spectral_radius(exact).to_double()).epsilon(1e-9));
            }
        }
    }
}
