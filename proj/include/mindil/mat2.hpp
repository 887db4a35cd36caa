#pragma once

#include <compare>
#include <iosfwd>
#include <string>

#include <gmpxx.h>

#include "mindil/surd.hpp"

namespace mindil {

/// 2x2 integer matrix of determinant 1.  Entries are exact integers of
/// unbounded magnitude.
struct Mat2 {
    mpz_class a, b, c, d;  // row-major

    Mat2(mpz_class a_, mpz_class b_, mpz_class c_, mpz_class d_);

    static Mat2 identity() { return Mat2(1, 0, 0, 1); }

    mpz_class det() const { return a * d - b * c; }
    mpz_class trace() const { return a + d; }

    Mat2 operator*(const Mat2& o) const;
    Mat2 inverse() const;  // adjugate [[d,-b],[-c,a]]
    Mat2 operator-() const;

    bool operator==(const Mat2& o) const = default;

    std::string str() const;  // "[[a, b], [c, d]]"
};

std::ostream& operator<<(std::ostream& os, const Mat2& m);

/// Trichotomy of PSL2 classes (by |trace|), with the identity split out.
enum class MatClass { Identity, Elliptic, Parabolic, Hyperbolic };

const char* to_string(MatClass c);

/// Projective class of a Mat2: M and -M are identified.  The stored
/// representative is normalized so that the first nonzero entry in reading
/// order (a, b, c, d) is positive, which makes the representative a usable
/// deduplication key.
class ProjMat2 {
public:
    explicit ProjMat2(const Mat2& m);

    static ProjMat2 identity() { return ProjMat2(Mat2::identity()); }

    const Mat2& rep() const { return rep_; }

    mpz_class abs_trace() const { return abs(rep_.trace()); }
    bool is_identity() const { return rep_ == Mat2::identity(); }

    ProjMat2 operator*(const ProjMat2& o) const { return ProjMat2(rep_ * o.rep_); }
    ProjMat2 inverse() const { return ProjMat2(rep_.inverse()); }

    bool operator==(const ProjMat2& o) const { return rep_ == o.rep_; }

    /// Lexicographic order on the normalized entries; a total order suitable
    /// for ordered containers, not a mathematical order.
    std::strong_ordering operator<=>(const ProjMat2& o) const;

private:
    Mat2 rep_;
};

MatClass classify(const ProjMat2& x);

/// Dominant eigenvalue magnitude: surd (|tr| + sqrt(tr^2-4))/2 for hyperbolic
/// classes, the rational surd 1 otherwise.
QuadraticSurd spectral_radius(const ProjMat2& x);

}  // namespace mindil
