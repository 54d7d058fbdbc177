#pragma once

#include <cstdint>
#include <optional>

#include "fideal/monomial.hpp"
#include "fideal/search.hpp"

namespace fideal {

// Perfectness of a homogeneous set A of degree d in n variables. Each
// predicate throws InputError if A is not homogeneous of degree d.
// Targets that would need the unit monomial (d = 1 below) or degree n+1
// (d = n above) are empty, so those halves hold vacuously.

/// upper_shadow(A) = sm(S)_{d+1}.
[[nodiscard]] bool is_upper_perfect(const MonomialSet& a, int d);
/// lower_shadow(A) = sm(S)_{d-1}.
[[nodiscard]] bool is_lower_perfect(const MonomialSet& a, int d);
[[nodiscard]] bool is_perfect(const MonomialSet& a, int d);

enum class PerfectMethod { brute, formula };

struct PerfectNumber {
    int n;
    int d;
    PerfectMethod method;
    std::uint64_t value;
    /// Lexicographically least perfect set of minimum size (brute method only).
    std::optional<MonomialSet> witness;
};

/// N_(n,d), the least size of an (n, d)-perfect set.
/// The formula method covers d = 2 only: k^2 - k for n = 2k, k^2 for n = 2k + 1.
/// The brute method searches sizes upward and throws BudgetExceeded when a size
/// has more than options.max_candidates candidate subsets.
[[nodiscard]] PerfectNumber perfect_number(int n, int d, PerfectMethod method, const SearchOptions& options = {});

/// W_B: all x_i x_j with i, j both in B or both outside B. Requires B nonempty and proper.
[[nodiscard]] MonomialSet two_part_construction(int n, Mask b);

/// The explicit minimum perfect set built by the staircase recurrence
/// A_{j+} = {j + 2} u A_{(j+2)+}. Requires n >= 4; the result is checked with is_perfect.
[[nodiscard]] MonomialSet staircase_construction(int n);

}  // namespace fideal
