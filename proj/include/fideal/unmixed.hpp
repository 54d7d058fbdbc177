#pragma once

#include <vector>

#include "fideal/complex.hpp"
#include "fideal/monomial.hpp"

namespace fideal {

/// A minimal prime <x_i : i in vertices> over a square-free monomial ideal,
/// i.e. a minimal vertex cover of the generator supports.
struct PrimeCover {
    Mask vertices = 0;

    [[nodiscard]] int size() const noexcept { return popcount(vertices); }
    friend auto operator<=>(const PrimeCover&, const PrimeCover&) = default;
};

/// All minimal transversals of the generator supports, ascending by mask.
/// Scans 2^n subsets; BudgetExceeded when n > max_scan_bits.
[[nodiscard]] std::vector<PrimeCover> minimal_primes(const Ideal& ideal, int max_scan_bits = default_face_scan_bits);

enum class UnmixedRoute { covers, purity, both };

/// covers: all minimal primes have the same size. purity: the Stanley-Reisner
/// complex is pure. both: computes the two and throws InconsistencyError if they differ.
[[nodiscard]] bool is_unmixed(const Ideal& ideal, UnmixedRoute route = UnmixedRoute::both,
                              int max_scan_bits = default_face_scan_bits);

/// For a homogeneous f-ideal of degree d: whether sm(S)_d minus G(I) is lower perfect.
/// InputError when the ideal is not homogeneous or not an f-ideal.
[[nodiscard]] bool complement_criterion(const Ideal& ideal);

struct UnmixedReport {
    bool unmixed = false;
    /// Smallest minimal-prime size.
    int codim = 0;
    std::vector<PrimeCover> minimal_primes;
    bool pure = false;
};

[[nodiscard]] UnmixedReport unmixed_report(const Ideal& ideal, int max_scan_bits = default_face_scan_bits);

}  // namespace fideal
