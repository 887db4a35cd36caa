#include "mindil/thurston.hpp"

#include <stdexcept>

#include "mindil/filling.hpp"

namespace mindil {

std::pair<Mat2, Mat2> generators(long n) {
    if (n < 1) throw std::invalid_argument("generators: intersection number must be >= 1");
    return {Mat2(1, -n, 0, 1), Mat2(1, 0, n, 1)};
}

ProjMat2 evaluate(const TwistWord& w, long n) {
    if (n < 1) throw std::invalid_argument("evaluate: intersection number must be >= 1");
    Mat2 acc = Mat2::identity();
    for (const Syllable& s : w.syllables()) {
        mpz_class ne = mpz_class(n) * s.exp;
        // Generator powers are unipotent: A^e = [[1, -n*e], [0, 1]],
        // B^e = [[1, 0], [n*e, 1]].
        Mat2 pow = (s.gen == Twist::Alpha) ? Mat2(1, -ne, 0, 1) : Mat2(1, 0, ne, 1);
        acc = acc * pow;
    }
    return ProjMat2(acc);
}

const char* to_string(MappingClass c) {
    switch (c) {
        case MappingClass::Identity: return "identity";
        case MappingClass::Periodic: return "periodic";
        case MappingClass::TwistPower: return "twist-power (reducible)";
        case MappingClass::PseudoAnosov: return "pseudo-Anosov";
    }
    return "?";
}

MappingClass classify_mapping_class(const TwistWord& w, long n) {
    switch (classify(evaluate(w, n))) {
        case MatClass::Identity: return MappingClass::Identity;
        case MatClass::Elliptic: return MappingClass::Periodic;
        case MatClass::Parabolic: return MappingClass::TwistPower;
        case MatClass::Hyperbolic: return MappingClass::PseudoAnosov;
    }
    throw std::logic_error("unreachable");
}

QuadraticSurd dilatation(const TwistWord& w, long n) {
    ProjMat2 m = evaluate(w, n);
    if (classify(m) != MatClass::Hyperbolic) {
        throw std::domain_error("no dilatation: not pseudo-Anosov");
    }
    return spectral_radius(m);
}

Mat2 CongruenceForm::reconstruct() const {
    mpz_class n2 = mpz_class(n) * n;
    return Mat2(1 + k1 * n2, k2 * n, k3 * n, 1 + k4 * n2);
}

namespace {

std::optional<CongruenceForm> decompose_one_sign(const Mat2& m, long n) {
    mpz_class n2 = mpz_class(n) * n;
    mpz_class a1 = m.a - 1, d1 = m.d - 1;
    if (!mpz_divisible_p(a1.get_mpz_t(), n2.get_mpz_t())) return std::nullopt;
    if (!mpz_divisible_p(d1.get_mpz_t(), n2.get_mpz_t())) return std::nullopt;
    mpz_class nn(n);
    if (!mpz_divisible_p(m.b.get_mpz_t(), nn.get_mpz_t())) return std::nullopt;
    if (!mpz_divisible_p(m.c.get_mpz_t(), nn.get_mpz_t())) return std::nullopt;
    return CongruenceForm{n, a1 / n2, m.b / n, m.c / n, d1 / n2};
}

}  // namespace

std::optional<CongruenceForm> try_congruence_decompose(const Mat2& x, long n) {
    if (n < 3) throw std::invalid_argument("congruence_decompose: requires n >= 3");
    if (auto f = decompose_one_sign(x, n)) return f;
    return decompose_one_sign(-x, n);
}

CongruenceForm congruence_decompose(const Mat2& x, long n) {
    if (auto f = try_congruence_decompose(x, n)) return *f;
    throw std::domain_error("not in Lambda_n congruence shape");
}

MinDilatation min_dilatation(long n) {
    if (n <= 0) throw std::invalid_argument("min_dilatation: intersection number must be >= 1");
    if (n == 2) {
        throw std::domain_error("excluded: Lambda_2 never arises as a twist-pair representation");
    }
    if (n == 1) {
        // The group is the full modular group; the smallest hyperbolic trace
        // is 3, reached e.g. by a^-1 b -> [[2, 1], [1, 1]].
        TwistWord w{{Twist::Alpha, -1}, {Twist::Beta, 1}};
        return {QuadraticSurd::from_trace(3), w};
    }
    mpz_class t = mpz_class(n) * n - 2;
    TwistWord w{{Twist::Alpha, 1}, {Twist::Beta, 1}};
    return {QuadraticSurd::from_trace(t), w};
}

SurfaceMinDilatation min_dilatation_for_surface(long g, long n_punct) {
    long i = i_min(g, n_punct);  // throws for g=0, n<4
    if (i <= 2) {
        throw std::domain_error(
            "minimal-trace theorem inapplicable: minimal intersection number is " +
            std::to_string(i) + " (requires >= 3)");
    }
    MinDilatation md = min_dilatation(i);
    // The closed form is stated for genus != 0, 2 with more than two
    // punctures; elsewhere it still follows from the minimal intersection
    // number, so flag rather than refuse.
    bool outside = (g == 0 || g == 2 || n_punct <= 2);
    return {md.lambda, i, md.witness, outside};
}

std::vector<TableRow> dilatation_table(long g_lo, long g_hi, long n_lo, long n_hi) {
    if (g_lo > g_hi || n_lo > n_hi) throw std::invalid_argument("dilatation_table: empty range");
    std::vector<TableRow> rows;
    for (long g = g_lo; g <= g_hi; ++g) {
        for (long n = n_lo; n <= n_hi; ++n) {
            TableRow row;
            row.g = g;
            row.n = n;
            try {
                long i = i_min(g, n);
                row.intersections = i;
                SurfaceMinDilatation s = min_dilatation_for_surface(g, n);
                row.lambda = s.lambda;
                row.outside_stated_hypotheses = s.outside_stated_hypotheses;
            } catch (const std::domain_error&) {
                if (!row.intersections.has_value()) {
                    row.error_code = "no-intersecting-filling-pair";
                } else {
                    row.error_code = "min-trace-theorem-inapplicable";
                }
            }
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

}  // namespace mindil
