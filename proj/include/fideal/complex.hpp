#pragma once

#include <cstdint>
#include <vector>

#include "fideal/monomial.hpp"

namespace fideal {

/// Default limit on n for routines that scan all 2^n subsets of [n].
inline constexpr int default_face_scan_bits = 22;

/// (f_0, ..., f_dim); f_i counts faces with i+1 vertices. The empty face is not counted.
using FVector = std::vector<std::uint64_t>;

/// A simplicial complex on [n] given by its facets.
class SimplicialComplex {
public:
    explicit SimplicialComplex(int n);
    /// Any generating faces; only the maximal ones are kept.
    SimplicialComplex(int n, std::vector<Mask> faces);

    [[nodiscard]] int ambient() const noexcept { return n_; }
    [[nodiscard]] const std::vector<Mask>& facets() const noexcept { return facets_; }
    [[nodiscard]] bool empty() const noexcept { return facets_.empty(); }
    [[nodiscard]] bool has_face(Mask face) const noexcept;

    friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

private:
    int n_;
    std::vector<Mask> facets_;
};

/// delta_F(I): facets are the supports of G(I).
[[nodiscard]] SimplicialComplex facet_complex(const Ideal& ideal);

/// delta_N(I), the Stanley-Reisner complex: subsets of [n] containing no generator support.
/// Scans all 2^n subsets; throws BudgetExceeded when n > max_scan_bits.
[[nodiscard]] SimplicialComplex nonface_complex(const Ideal& ideal,
                                                int max_scan_bits = default_face_scan_bits);

/// Counts the distinct nonempty faces of the downward closure by size.
[[nodiscard]] FVector f_vector(const SimplicialComplex& c);

/// Largest facet size minus one; -1 for the complex with no facets.
[[nodiscard]] int dimension(const SimplicialComplex& c) noexcept;

[[nodiscard]] bool is_pure(const SimplicialComplex& c) noexcept;

/// All nonempty faces of the complex, ascending.
[[nodiscard]] std::vector<Mask> nonempty_faces(const SimplicialComplex& c);

/// Minimal subsets of [n] that are not faces (the Stanley-Reisner generators).
[[nodiscard]] std::vector<Mask> minimal_nonfaces(const SimplicialComplex& c,
                                                 int max_scan_bits = default_face_scan_bits);

}  // namespace fideal
