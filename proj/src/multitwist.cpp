#include "mindil/multitwist.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace mindil {

IntersectionMatrix::IntersectionMatrix(int rows, int cols, std::vector<long long> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (rows_ < 1 || cols_ < 1) throw std::invalid_argument("IntersectionMatrix: empty shape");
    if (entries_.size() != static_cast<std::size_t>(rows_) * cols_) {
        throw std::invalid_argument("IntersectionMatrix: entry count does not match shape");
    }
    for (long long e : entries_) {
        if (e < 0) throw std::invalid_argument("IntersectionMatrix: entries must be nonnegative");
    }
    for (int i = 0; i < rows_; ++i) {
        bool pos = false;
        for (int j = 0; j < cols_; ++j) pos = pos || at(i, j) > 0;
        if (!pos) throw std::domain_error("cannot fill: row " + std::to_string(i + 1) + " is zero");
    }
    for (int j = 0; j < cols_; ++j) {
        bool pos = false;
        for (int i = 0; i < rows_; ++i) pos = pos || at(i, j) > 0;
        if (!pos) throw std::domain_error("cannot fill: column " + std::to_string(j + 1) + " is zero");
    }
}

IntersectionMatrix IntersectionMatrix::from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    int rows = j.at("rows").get<int>();
    int cols = j.at("cols").get<int>();
    std::vector<long long> entries;
    for (const auto& row : j.at("entries")) {
        for (const auto& e : row) entries.push_back(e.get<long long>());
    }
    return IntersectionMatrix(rows, cols, std::move(entries));
}

IntersectionMatrix IntersectionMatrix::from_csv(const std::string& text) {
    std::vector<long long> entries;
    int rows = 0, cols = -1;
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        if (line.find_first_not_of(" \t\r\n") == std::string::npos) continue;
        std::istringstream ls(line);
        std::string cell;
        int c = 0;
        while (std::getline(ls, cell, ',')) {
            entries.push_back(std::stoll(cell));
            ++c;
        }
        if (cols >= 0 && c != cols) throw std::invalid_argument("csv: ragged rows");
        cols = c;
        ++rows;
    }
    if (rows == 0) throw std::invalid_argument("csv: empty matrix");
    return IntersectionMatrix(rows, cols, std::move(entries));
}

double mu(const IntersectionMatrix& N) {
    const int k = N.rows(), l = N.cols();
    // Gram matrix G = N^T N, l x l, symmetric positive semidefinite.
    std::vector<double> G(static_cast<std::size_t>(l) * l, 0.0);
    for (int i = 0; i < l; ++i) {
        for (int j = 0; j < l; ++j) {
            double s = 0.0;
            for (int r = 0; r < k; ++r) s += static_cast<double>(N.at(r, i)) * N.at(r, j);
            G[static_cast<std::size_t>(i) * l + j] = s;
        }
    }

    if (l == 1) return G[0];
    if (l == 2) {
        double a = G[0], b = G[1], d = G[3];
        return (a + d) / 2 + std::sqrt((a - d) * (a - d) / 4 + b * b);
    }

    // Power iteration from the all-ones vector; the Gram matrix is
    // nonnegative so the start vector has a component along the Perron
    // direction.
    std::vector<double> v(static_cast<std::size_t>(l), 1.0), w(static_cast<std::size_t>(l));
    double lambda = 0.0;
    const int max_iter = 200000;
    for (int it = 0; it < max_iter; ++it) {
        double norm = 0.0;
        for (int i = 0; i < l; ++i) {
            double s = 0.0;
            for (int j = 0; j < l; ++j) s += G[static_cast<std::size_t>(i) * l + j] * v[j];
            w[i] = s;
            norm += s * s;
        }
        norm = std::sqrt(norm);
        if (norm == 0.0) return 0.0;
        double rayleigh = 0.0;
        for (int i = 0; i < l; ++i) rayleigh += v[i] * w[i];
        for (int i = 0; i < l; ++i) v[i] = w[i] / norm;
        if (it > 0 && std::abs(rayleigh - lambda) <= 1e-12 * std::max(1.0, std::abs(rayleigh))) {
            return rayleigh;
        }
        lambda = rayleigh;
    }
    // Residual ||Gv - lambda v|| at the last iterate.
    double res = 0.0;
    for (int i = 0; i < l; ++i) {
        double s = 0.0;
        for (int j = 0; j < l; ++j) s += G[static_cast<std::size_t>(i) * l + j] * v[j];
        res += (s - lambda * v[i]) * (s - lambda * v[i]);
    }
    throw std::runtime_error("mu: power iteration did not converge; residual " +
                             std::to_string(std::sqrt(res)));
}

RealMat2 RealMat2::operator*(const RealMat2& o) const {
    return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
}

std::pair<RealMat2, RealMat2> rep_generators(const IntersectionMatrix& N) {
    double root = std::sqrt(mu(N));
    return {RealMat2{1.0, -root, 0.0, 1.0}, RealMat2{1.0, 0.0, root, 1.0}};
}

MultitwistClassification multitwist_classify(const TwistWord& w, const IntersectionMatrix& N) {
    MultitwistClassification out{};
    out.mu = mu(N);
    double root = std::sqrt(out.mu);

    RealMat2 acc = RealMat2::identity();
    for (const Syllable& s : w.syllables()) {
        double e = static_cast<double>(s.exp) * root;
        RealMat2 pow = (s.gen == Twist::Alpha) ? RealMat2{1.0, -e, 0.0, 1.0}
                                               : RealMat2{1.0, 0.0, e, 1.0};
        acc = acc * pow;
    }
    out.trace = acc.trace();
    out.det_residual = std::abs(acc.det() - 1.0);

    const double band = 1e-9;
    double abs_tr = std::abs(out.trace);
    bool near_identity = std::abs(acc.a - 1) <= band && std::abs(acc.d - 1) <= band &&
                         std::abs(acc.b) <= band && std::abs(acc.c) <= band;
    bool near_neg_identity = std::abs(acc.a + 1) <= band && std::abs(acc.d + 1) <= band &&
                             std::abs(acc.b) <= band && std::abs(acc.c) <= band;

    if (w.empty() || near_identity || near_neg_identity) {
        out.cls = MatClass::Identity;
        return out;
    }
    if (std::abs(abs_tr - 2.0) <= band) {
        out.cls = MatClass::Parabolic;
        // The call is decided by the tolerance band; flag it unless mu is
        // integral, in which case the trace is exact in this arithmetic.
        out.tolerance_classified = std::abs(out.mu - std::round(out.mu)) > band;
        return out;
    }
    if (abs_tr < 2.0) {
        out.cls = MatClass::Elliptic;
        return out;
    }
    out.cls = MatClass::Hyperbolic;
    out.dilatation = (abs_tr + std::sqrt(abs_tr * abs_tr - 4.0)) / 2.0;
    return out;
}

}  // namespace mindil
