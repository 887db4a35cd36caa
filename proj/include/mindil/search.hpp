#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "mindil/mat2.hpp"
#include "mindil/twist_word.hpp"

namespace mindil {

struct SearchBudget {
    std::uint64_t max_nodes = 50'000'000;  // frontier expansions (matrix products)
    unsigned jobs = 1;                     // worker threads for frontier expansion
};

/// One enumerated group element: projective matrix plus the first word that
/// reached it in breadth-first order.
struct EnumeratedElement {
    ProjMat2 mat;
    std::string letters;  // 'a','A','b','B' = alpha, alpha^-1, beta, beta^-1

    TwistWord word() const;
};

/// Breadth-first closure of the twist group's image at intersection number
/// n over the four generator letters, up to the given letter length,
/// deduplicated by projective normal form.  Elements are listed in
/// discovery order (shortest word first, letters a, b, a^-1, b^-1 breaking
/// ties), which is identical for any worker count.
struct Enumeration {
    long n = 0;
    int max_len = 0;
    std::vector<EnumeratedElement> elements;  // includes the identity
};

struct SearchWitness {
    TwistWord word;
    Mat2 matrix;
};

/// What the brute-force enumeration certifies about the group: the number
/// of distinct projective elements, the minimal hyperbolic trace magnitude
/// with the words realizing it, and whether every element decomposes into
/// the congruence shape.
struct SearchReport {
    long n = 0;
    int max_len = 0;
    std::uint64_t distinct_elements = 0;
    std::optional<mpz_class> min_hyperbolic_trace_abs;
    std::vector<SearchWitness> witnesses;  // minimal-trace elements, BFS order
    bool witnesses_truncated = false;
    std::optional<bool> congruence_closure_ok;  // unset for n < 3

    /// min |trace| equals n^2 - 2.
    bool min_trace_matches_formula() const;
    /// Some witness word is a b up to inversion and cyclic rotation.
    bool has_twist_product_witness() const;
};

/// Raised when a search exceeds its node budget; carries the progress made.
class BudgetExceededError : public std::runtime_error {
public:
    BudgetExceededError(std::string what, SearchReport partial_report)
        : std::runtime_error(std::move(what)), partial(std::move(partial_report)) {}

    SearchReport partial;
};

Enumeration enumerate_subgroup(long n, int max_len, const SearchBudget& budget = {});

/// Build the full report for an enumeration (congruence closure is checked
/// only for n >= 3).
SearchReport make_report(const Enumeration& e, std::size_t witness_cap = 16);

/// Enumerate and certify the minimal hyperbolic trace magnitude; n >= 3.
SearchReport verify_min_trace(long n, int max_len, const SearchBudget& budget = {});

/// True iff every element enumerated to max_len has the congruence shape.
bool verify_congruence_closure(long n, int max_len, const SearchBudget& budget = {});

/// Number of freely reduced words of letter length <= L in a rank-2 free
/// group: 1 + 4(3^L - 1)/2.  The enumeration must match this for n >= 3.
mpz_class free_group_ball_size(int max_len);

/// CSV histogram "trace_abs,count" over all enumerated elements, ascending.
std::string trace_histogram_csv(const Enumeration& e);

std::string report_to_json(const SearchReport& r);

}  // namespace mindil
