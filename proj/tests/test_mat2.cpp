#include "doctest.h"

#include <stdexcept>

#include <cmath>
#include <random>

#include "mindil/mat2.hpp"

using mindil::Mat2;
using mindil::MatClass;
using mindil::ProjMat2;

namespace {

// Random word in the generators at n = 3 (free, so products stay honest).
Mat2 random_word(std::mt19937& rng, int len) {
    Mat2 A(1, -3, 0, 1), B(1, 0, 3, 1);
    const Mat2 gens[4] = {A, B, A.inverse(), B.inverse()};
    Mat2 acc = Mat2::identity();
    std::uniform_int_distribution<int> pick(0, 3);
    for (int i = 0; i < len; ++i) acc = acc * gens[pick(rng)];
    return acc;
}

}  // namespace

TEST_CASE("construction enforces determinant 1") {
    CHECK_THROWS_AS(Mat2(1, 0, 0, 2), std::invalid_argument);
    CHECK_THROWS_AS(Mat2(0, 1, 1, 0), std::invalid_argument);  // det -1
    CHECK_NOTHROW(Mat2(2, 1, 1, 1));
}

TEST_CASE("product and inverse") {
    Mat2 I = Mat2::identity();
    Mat2 M(2, 1, 1, 1);
    CHECK(I * M == M);
    CHECK(M * M.inverse() == I);

    Mat2 A(1, -3, 0, 1), B(1, 0, 3, 1);
    Mat2 AB = A * B;
    CHECK(AB == Mat2(-8, -3, 3, 1));

    CHECK(Mat2(1, -3, 0, 1).inverse() == Mat2(1, 3, 0, 1));
    CHECK(Mat2(-8, -3, 3, 1).inverse() == Mat2(1, 3, -3, -8));
    CHECK(Mat2(-8, -3, 3, 1).inverse() * Mat2(-8, -3, 3, 1) == I);
}

TEST_CASE("projective normalization identifies M and -M") {
    Mat2 M(-8, -3, 3, 1);
    CHECK(ProjMat2(M) == ProjMat2(-M));
    // First nonzero entry of the representative is positive.
    CHECK(ProjMat2(M).rep().a == 8);

    Mat2 P(0, -1, 1, 0);
    CHECK(ProjMat2(P).rep().b == 1);  // normalized from [[0,-1],[1,0]]
    CHECK(ProjMat2(P) == ProjMat2(-P));
}

TEST_CASE("classification") {
    CHECK(classify(ProjMat2(Mat2::identity())) == MatClass::Identity);
    CHECK(classify(ProjMat2(-Mat2::identity())) == MatClass::Identity);
    CHECK(classify(ProjMat2(Mat2(0, -1, 1, 0))) == MatClass::Elliptic);
    CHECK(classify(ProjMat2(Mat2(1, -5, 0, 1))) == MatClass::Parabolic);
    CHECK(classify(ProjMat2(Mat2(2, 1, 1, 1))) == MatClass::Hyperbolic);
    CHECK(classify(ProjMat2(Mat2(-8, -3, 3, 1))) == MatClass::Hyperbolic);
}

TEST_CASE("spectral radius") {
    using mindil::QuadraticSurd;
    CHECK(spectral_radius(ProjMat2(Mat2(2, 1, 1, 1))) == QuadraticSurd::from_trace(3));
    CHECK(spectral_radius(ProjMat2(Mat2(1, -5, 0, 1))) == QuadraticSurd::from_integer(1));
    CHECK(spectral_radius(ProjMat2(Mat2(-8, -3, 3, 1))) == QuadraticSurd::from_trace(7));
}

TEST_CASE("properties over random products") {
    std::mt19937 rng(987123);
    for (int trial = 0; trial < 100; ++trial) {
        Mat2 x = random_word(rng, 6);
        Mat2 g = random_word(rng, 5);
        CHECK(x.det() == 1);

        ProjMat2 px(x);
        ProjMat2 conj(g * x * g.inverse());
        CHECK(classify(conj) == classify(px));
        CHECK(spectral_radius(px) == spectral_radius(ProjMat2(x.inverse())));
        CHECK(spectral_radius(conj) == spectral_radius(px));

        // Float cross-check of the dominant eigenvalue for hyperbolic classes.
        if (classify(px) == MatClass::Hyperbolic) {
            double tr = std::abs(px.rep().trace().get_d());
            double eig = (tr + std::sqrt(tr * tr - 4.0)) / 2.0;
            CHECK(spectral_radius(px).to_double() == doctest::Approx(eig).epsilon(1e-9));
        }
    }
}
