#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "mindil/mat2.hpp"
#include "mindil/twist_word.hpp"

namespace mindil {

/// Image matrices of the two twist generators for intersection number n:
/// A = [[1, -n], [0, 1]] and B = [[1, 0], [n, 1]].
std::pair<Mat2, Mat2> generators(long n);

/// Projective image of a twist word under the representation at
/// intersection number n.  The empty word maps to the identity.
ProjMat2 evaluate(const TwistWord& w, long n);

/// Mapping-class trichotomy induced by the matrix trichotomy: periodic <->
/// elliptic, twist-power (reducible) <-> parabolic, pseudo-Anosov <->
/// hyperbolic.
enum class MappingClass { Identity, Periodic, TwistPower, PseudoAnosov };

const char* to_string(MappingClass c);

MappingClass classify_mapping_class(const TwistWord& w, long n);

/// Stretch factor of a pseudo-Anosov word: the spectral radius of its
/// image.  Throws std::domain_error for non-pA words.
QuadraticSurd dilatation(const TwistWord& w, long n);

/// The shape every element of the twist group takes for n >= 3:
/// [[1 + k1*n^2, k2*n], [k3*n, 1 + k4*n^2]].
struct CongruenceForm {
    long n;
    mpz_class k1, k2, k3, k4;

    Mat2 reconstruct() const;
};

/// Decompose x into congruence form, trying both signs of the matrix so the
/// projective normalization cannot cause a false negative.  Empty result
/// certifies x is not congruent to the identity in the required sense.
std::optional<CongruenceForm> try_congruence_decompose(const Mat2& x, long n);

/// Throwing variant: "not in Lambda_n congruence shape" on failure.
CongruenceForm congruence_decompose(const Mat2& x, long n);

struct MinDilatation {
    QuadraticSurd lambda;
    TwistWord witness;
};

/// Closed-form minimal stretch factor over hyperbolic elements of the twist
/// group at intersection number n, with a word realizing it.
/// n = 1: (3+sqrt(5))/2.  n >= 3: (n^2-2 + n*sqrt(n^2-4))/2, witness a b.
/// n = 2 is rejected: that group is never a twist representation.
MinDilatation min_dilatation(long n);

struct SurfaceMinDilatation {
    QuadraticSurd lambda;
    long intersections;  // minimal intersection number used
    TwistWord witness;
    bool outside_stated_hypotheses;  // computed from the minimal intersection
                                     // number even where the closed form's
                                     // stated genus/puncture hypotheses do
                                     // not cover the case
};

/// Minimal stretch factor over all twist-pair pseudo-Anosov classes on the
/// genus-g surface with n punctures, via the minimal intersection number.
/// Fails for surfaces with no intersecting filling pair (g=0, n<4) and for
/// minimal intersection number <= 2, where the trace-minimization argument
/// does not apply.
SurfaceMinDilatation min_dilatation_for_surface(long g, long n_punct);

/// One row of the per-surface summary table.  Cells that cannot be computed
/// carry an error code instead of a value:
///   "no-intersecting-filling-pair"  (g=0, n<4)
///   "min-trace-theorem-inapplicable" (minimal intersection number <= 2)
struct TableRow {
    long g;
    long n;
    std::optional<long> intersections;
    std::optional<QuadraticSurd> lambda;
    std::string error_code;  // empty when the cell has a value
    bool outside_stated_hypotheses = false;
};

std::vector<TableRow> dilatation_table(long g_lo, long g_hi, long n_lo, long n_hi);

}  // namespace mindil
