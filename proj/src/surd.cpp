#include "mindil/surd.hpp"

#include <sstream>
#include <stdexcept>

namespace mindil {

namespace {

// Fold square factors of D into q: D = s^2 * D' with D' squarefree becomes
// q *= s, D = D'.  Trial division is complete for D below ~4e12; any square
// factor that survives would need a prime factor above 2^21, which is then
// caught by the perfect-square test on the remainder.
void extract_square_part(mpz_class& q, mpz_class& D) {
    const unsigned long trial_limit = 1u << 21;
    mpz_class f = 2;
    while (f * f <= D && f <= trial_limit) {
        mpz_class f2 = f * f;
        while (mpz_divisible_p(D.get_mpz_t(), f2.get_mpz_t())) {
            D /= f2;
            q *= f;
        }
        f += (f == 2) ? 1 : 2;
    }
    if (D > 1 && mpz_perfect_square_p(D.get_mpz_t())) {
        mpz_class s;
        mpz_sqrt(s.get_mpz_t(), D.get_mpz_t());
        q *= s;
        D = 1;
    }
}

}  // namespace

QuadraticSurd::QuadraticSurd(mpz_class p, mpz_class q, mpz_class D)
    : p_(std::move(p)), q_(std::move(q)), rad_(std::move(D)) {
    if (q_ < 0) throw std::invalid_argument("QuadraticSurd: q must be nonnegative");
    if (rad_ < 0) throw std::invalid_argument("QuadraticSurd: radicand must be nonnegative");
    canonicalize();
}

void QuadraticSurd::canonicalize() {
    if (q_ == 0 || rad_ == 0) {
        q_ = 0;
        rad_ = 0;
        return;
    }
    extract_square_part(q_, rad_);
    if (rad_ == 1) {
        p_ += q_;
        q_ = 0;
        rad_ = 0;
    }
}

QuadraticSurd QuadraticSurd::from_trace(const mpz_class& t) {
    if (t <= 2) throw std::domain_error("not hyperbolic: trace must be >= 3");
    return QuadraticSurd(t, 1, t * t - 4);
}

QuadraticSurd QuadraticSurd::from_integer(const mpz_class& k) {
    return QuadraticSurd(2 * k, 0, 0);
}

int sign_of_radical_sum(const mpz_class& x, const mpz_class& y, const mpz_class& D) {
    if (y == 0 || D == 0) return sgn(x);
    if (y > 0) {
        if (x >= 0) return 1;
        // x < 0: compare y^2 D against x^2.
        mpz_class lhs = y * y * D;
        mpz_class rhs = x * x;
        return cmp(lhs, rhs) > 0 ? 1 : (lhs == rhs ? 0 : -1);
    }
    return -sign_of_radical_sum(-x, -y, D);
}

std::strong_ordering QuadraticSurd::compare(const QuadraticSurd& other) const {
    auto from_sign = [](int s) {
        return s < 0 ? std::strong_ordering::less
                     : (s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    };

    mpz_class x = p_ - other.p_;
    if (rad_ == other.rad_) {
        return from_sign(sign_of_radical_sum(x, q_ - other.q_, rad_));
    }
    if (other.q_ == 0) return from_sign(sign_of_radical_sum(x, q_, rad_));
    if (q_ == 0) return from_sign(-sign_of_radical_sum(-x, other.q_, other.rad_));

    // Distinct radicands: decide sign of (x + q*sqrt(D)) - q'*sqrt(D') by
    // isolating and squaring once; the result is again a single-radical sign.
    int lhs_sign = sign_of_radical_sum(x, q_, rad_);
    if (lhs_sign <= 0) return std::strong_ordering::less;
    mpz_class u = x * x + q_ * q_ * rad_ - other.q_ * other.q_ * other.rad_;
    mpz_class v = 2 * x * q_;
    return from_sign(sign_of_radical_sum(u, v, rad_));
}

double QuadraticSurd::to_double() const {
    mpf_class acc(p_, 256);
    if (q_ != 0) {
        mpf_class root(rad_, 256);
        root = sqrt(root);
        acc += mpf_class(q_, 256) * root;
    }
    acc /= 2;
    return acc.get_d();
}

std::string QuadraticSurd::decimal(int significant_digits) const {
    mpf_class acc(p_, 512);
    if (q_ != 0) {
        mpf_class root(rad_, 512);
        root = sqrt(root);
        acc += mpf_class(q_, 512) * root;
    }
    acc /= 2;

    mp_exp_t exp10 = 0;
    std::string digits = acc.get_str(exp10, 10, significant_digits);
    bool neg = !digits.empty() && digits[0] == '-';
    if (neg) digits.erase(0, 1);
    if (digits.empty()) digits = "0";

    std::string out;
    if (exp10 <= 0) {
        out = "0." + std::string(static_cast<size_t>(-exp10), '0') + digits;
    } else if (static_cast<size_t>(exp10) >= digits.size()) {
        out = digits + std::string(static_cast<size_t>(exp10) - digits.size(), '0');
    } else {
        out = digits.substr(0, static_cast<size_t>(exp10)) + "." + digits.substr(static_cast<size_t>(exp10));
    }
    return neg ? "-" + out : out;
}

std::string QuadraticSurd::str() const {
    std::ostringstream os;
    if (is_rational()) {
        if (mpz_even_p(p_.get_mpz_t())) {
            os << p_ / 2;
        } else {
            os << p_ << "/2";
        }
        return os.str();
    }
    os << "(" << p_;
    if (q_ == 1) {
        os << "+sqrt(" << rad_ << ")";
    } else {
        os << "+" << q_ << "*sqrt(" << rad_ << ")";
    }
    os << ")/2";
    return os.str();
}

}  // namespace mindil
