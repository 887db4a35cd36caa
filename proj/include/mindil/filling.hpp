#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

namespace mindil {

/// Permutation of {1..4m} encoding the polygon gluing of a filling pair:
/// sigma(j) = k when, walking clockwise around a complementary polygon, the
/// side labeled j is followed by the side labeled k.
///
/// Symbol convention: the 4m side labels interleave the two curves' arcs and
/// then their inverses, so odd symbols in [1, 2m] are alpha-arcs, even ones
/// are beta-arcs, and symbol j + 2m is the reversal of symbol j.
class Perm {
public:
    /// images[j-1] = sigma(j).  Must be a bijection of {1..4m}; otherwise
    /// throws std::invalid_argument with a "not a permutation: ..."
    /// diagnostic naming the offending symbol.
    Perm(int m, std::vector<int> images);

    /// Parse cycle notation like "(1,2,3,4)" or "(1,2)(3,4)".  Every symbol
    /// of {1..4m} must appear in exactly one cycle (write fixed points as
    /// singleton cycles).  With m == 0 the size is inferred from the largest
    /// symbol, which must be a multiple of 4.
    static Perm from_cycles(const std::string& text, int m = 0);

    int m() const { return m_; }
    int size() const { return 4 * m_; }

    int operator()(int j) const { return images_[static_cast<std::size_t>(j - 1)]; }
    const std::vector<int>& images() const { return images_; }

    /// Cycle decomposition in canonical form: each cycle starts at its
    /// minimum element and cycles are sorted by that minimum.
    std::vector<std::vector<int>> cycles() const;
    int cycle_count() const;
    int two_cycle_count() const;

    std::string cycle_string() const;

    Perm inverse() const;
    Perm compose(const Perm& then) const;  // j -> then(this(j))

    /// True when every symbol maps to the opposite parity.
    bool parity_reversing() const;
    /// True when every symbol maps to the same parity.
    bool parity_respecting() const;

    bool operator==(const Perm&) const = default;

private:
    int m_;
    std::vector<int> images_;
};

/// The orientation-reversal involution (1, 2, ..., 4m)^(2m): j <-> j + 2m.
Perm make_Q(int m);

/// The arc-successor permutation
/// (1,3,...,2m-1)(2,4,...,2m)(4m-1,4m-3,...,2m+1)(4m,4m-2,...,2m+2).
Perm make_tau(int m);

/// Outcome of checking sigma against the gluing conditions for a filling
/// pair on the genus-g surface with n punctures: parity reversal, the
/// relation sigma Q sigma = tau, the cycle count m+2-2g, and at most n
/// 2-cycles (punctured bigons).
struct FillingValidation {
    int m = 0;
    bool parity_reversing = false;
    bool relation_ok = false;
    int cycle_count = 0;
    int two_cycle_count = 0;
    std::optional<int> genus;  // (2 + m - cycle_count)/2 when integral, >= 0
                               // and the relation holds
    std::optional<std::tuple<int, int, int>> valid_for;  // (g, n, m)

    bool valid() const { return valid_for.has_value(); }
};

FillingValidation validate_filling(const Perm& sigma, int g, int n);

/// Genus recovered from the Euler characteristic of the glued surface.
/// Requires sigma Q sigma = tau (else throws "not a filling permutation");
/// empty when (2 + m - cycle_count) is odd or negative.
std::optional<int> genus_of(const Perm& sigma);

/// Geometric intersection number of primitive torus curves of classes
/// (p, q) and (r, s): |ps - qr|.  Throws for non-primitive classes.
long torus_intersection(long p, long q, long r, long s);

/// Minimal intersection number of a filling pair on the genus-g surface
/// with n punctures.  Throws std::domain_error for g = 0, n < 4, where no
/// intersecting filling pair exists.
long i_min(long g, long n);

struct PermSearchResult {
    std::optional<Perm> found;
    bool conclusive = false;  // true: either found, or the space is exhausted
    std::uint64_t nodes = 0;

    bool exhausted() const { return conclusive && !found.has_value(); }
};

/// Backtracking search for a filling permutation for (g, n) with
/// intersection number m, propagating sigma(Q(sigma(j))) = tau(j) after
/// every assignment.  Deterministic: smallest unassigned symbol first,
/// candidate images ascending; the first valid permutation is returned.
/// Hitting the node budget yields an inconclusive result, never a silent
/// "none".
PermSearchResult search_filling(int g, int n, int m, std::uint64_t budget = 10'000'000);

/// Push an alpha-arc across an adjacent beta-arc and puncture the two
/// bigons this creates: a filling pair for (g, n) with intersection number
/// m becomes one for (g, n+2) with intersection number m+2, its sigma
/// gaining exactly two 2-cycles.  The rewrite is validated before being
/// returned; if no arc adjacency admits the push, throws "no bigon site".
Perm double_bigon(const Perm& sigma, int g, int n);

}  // namespace mindil
