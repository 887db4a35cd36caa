#include "mindil/mat2.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>

namespace mindil {

Mat2::Mat2(mpz_class a_, mpz_class b_, mpz_class c_, mpz_class d_)
    : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)) {
    if (det() != 1) throw std::invalid_argument("Mat2: determinant must be 1");
}

Mat2 Mat2::operator*(const Mat2& o) const {
    return Mat2(a * o.a + b * o.c, a * o.b + b * o.d,
                c * o.a + d * o.c, c * o.b + d * o.d);
}

Mat2 Mat2::inverse() const { return Mat2(d, -b, -c, a); }

Mat2 Mat2::operator-() const {
    Mat2 r = *this;
    r.a = -r.a; r.b = -r.b; r.c = -r.c; r.d = -r.d;
    return r;
}

std::string Mat2::str() const {
    std::ostringstream os;
    os << "[[" << a << ", " << b << "], [" << c << ", " << d << "]]";
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Mat2& m) { return os << m.str(); }

const char* to_string(MatClass c) {
    switch (c) {
        case MatClass::Identity: return "identity";
        case MatClass::Elliptic: return "elliptic";
        case MatClass::Parabolic: return "parabolic";
        case MatClass::Hyperbolic: return "hyperbolic";
    }
    return "?";
}

ProjMat2::ProjMat2(const Mat2& m) : rep_(m) {
    for (const mpz_class* e : {&rep_.a, &rep_.b, &rep_.c, &rep_.d}) {
        if (*e != 0) {
            if (*e < 0) rep_ = -rep_;
            break;
        }
    }
}

std::strong_ordering ProjMat2::operator<=>(const ProjMat2& o) const {
    for (auto [x, y] : {std::pair{&rep_.a, &o.rep_.a}, {&rep_.b, &o.rep_.b},
                        {&rep_.c, &o.rep_.c}, {&rep_.d, &o.rep_.d}}) {
        int s = cmp(*x, *y);
        if (s != 0) return s < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
}

MatClass classify(const ProjMat2& x) {
    if (x.is_identity()) return MatClass::Identity;
    mpz_class t = x.abs_trace();
    if (t < 2) return MatClass::Elliptic;
    if (t == 2) return MatClass::Parabolic;
    return MatClass::Hyperbolic;
}

QuadraticSurd spectral_radius(const ProjMat2& x) {
    if (classify(x) != MatClass::Hyperbolic) return QuadraticSurd::from_integer(1);
    return QuadraticSurd::from_trace(x.abs_trace());
}

}  // namespace mindil
