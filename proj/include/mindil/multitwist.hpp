#pragma once

#include <string>
#include <utility>
#include <vector>

#include "mindil/mat2.hpp"
#include "mindil/twist_word.hpp"

namespace mindil {

/// Nonnegative integer matrix N with N[i][j] the intersection number of the
/// i-th curve of one multicurve with the j-th of the other.  Every row and
/// column must contain a positive entry (a zero row or column means the
/// union cannot fill; full filling verification is out of scope, and
/// disjointness within each multicurve is assumed, not checked).
class IntersectionMatrix {
public:
    IntersectionMatrix(int rows, int cols, std::vector<long long> entries);

    static IntersectionMatrix from_json(const std::string& text);
    static IntersectionMatrix from_csv(const std::string& text);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    long long at(int i, int j) const { return entries_[static_cast<std::size_t>(i) * cols_ + j]; }

private:
    int rows_, cols_;
    std::vector<long long> entries_;
};

/// Perron-Frobenius eigenvalue of N^T N (the squared largest singular value
/// of N).  Closed form for 1x1 and 2x2 N^T N; power iteration from the
/// all-ones vector with tolerance 1e-12 otherwise.  Throws with the
/// residual if the iteration cap is reached.
double mu(const IntersectionMatrix& N);

/// Real 2x2 matrix for the multitwist representation; determinant drift is
/// tracked so downstream classification can surface it.
struct RealMat2 {
    double a, b, c, d;

    static RealMat2 identity() { return {1.0, 0.0, 0.0, 1.0}; }

    double det() const { return a * d - b * c; }
    double trace() const { return a + d; }
    RealMat2 operator*(const RealMat2& o) const;
};

/// Generator images [[1, -sqrt(mu)], [0, 1]] and [[1, 0], [sqrt(mu), 1]].
std::pair<RealMat2, RealMat2> rep_generators(const IntersectionMatrix& N);

/// Trace classification of a word under the multitwist representation.
/// Unlike the single-curve case this is tolerance-based: |trace| within
/// 1e-9 of 2 counts as parabolic, and the result is flagged
/// tolerance-classified when that margin did the deciding while mu does not
/// look like an exact integer.
struct MultitwistClassification {
    MatClass cls;
    double mu;
    double trace;
    double dilatation = 0.0;      // meaningful only for hyperbolic results
    double det_residual = 0.0;    // |det - 1| of the evaluated word
    bool tolerance_classified = false;
};

MultitwistClassification multitwist_classify(const TwistWord& w, const IntersectionMatrix& N);

}  // namespace mindil
