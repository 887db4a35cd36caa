#pragma once

#include <compare>
#include <string>

#include <gmpxx.h>

namespace mindil {

/// Exact real value of the form (p + q*sqrt(D))/2 with integer p and
/// nonnegative integers q, D.  This is the shape of every stretch factor
/// the twist representation produces, so no general algebraic-number
/// machinery is needed.
///
/// Canonical form: D is squarefree, and q == 0 iff D == 0 (a rational
/// value p/2).  Square factors of D are folded into q on construction, so
/// equality is field-wise and ordering is decided by exact integer sign
/// analysis, never by floating point.
class QuadraticSurd {
public:
    QuadraticSurd() : p_(0), q_(0), rad_(0) {}
    QuadraticSurd(mpz_class p, mpz_class q, mpz_class D);

    /// Larger root of x^2 - t*x + 1, i.e. (t + sqrt(t^2-4))/2.
    /// Requires t >= 3; smaller traces are not hyperbolic.
    static QuadraticSurd from_trace(const mpz_class& t);

    /// The rational value k (stored as (2k + 0*sqrt(0))/2).
    static QuadraticSurd from_integer(const mpz_class& k);

    const mpz_class& p() const { return p_; }
    const mpz_class& q() const { return q_; }
    const mpz_class& radicand() const { return rad_; }

    bool is_rational() const { return q_ == 0; }

    /// Floating approximation, relative error well under 1e-12 (the value is
    /// evaluated with 256-bit intermediates before rounding to double).
    double to_double() const;

    /// Decimal approximation with the given number of significant digits.
    std::string decimal(int significant_digits = 15) const;

    /// Human-readable exact form, e.g. "(3+sqrt(5))/2" or "7".
    std::string str() const;

    /// Exact total order by integer sign analysis and squaring.
    std::strong_ordering compare(const QuadraticSurd& other) const;

    bool operator==(const QuadraticSurd& o) const { return compare(o) == std::strong_ordering::equal; }
    std::strong_ordering operator<=>(const QuadraticSurd& o) const { return compare(o); }

private:
    void canonicalize();

    mpz_class p_;
    mpz_class q_;
    mpz_class rad_;
};

/// Sign of x + y*sqrt(D) for integers x, y and D >= 0, computed exactly.
/// Exposed for reuse by the exact comparison tests.
int sign_of_radical_sum(const mpz_class& x, const mpz_class& y, const mpz_class& D);

}  // namespace mindil
