#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "fideal/binomial.hpp"
#include "fideal/complex.hpp"
#include "fideal/monomial.hpp"
#include "fideal/search.hpp"

namespace fideal {

enum class VerdictRoute { definition, homogeneous, general_degreewise };

/// Outcome of the f-ideal test. The f-vector comparison is always made; the
/// perfect-set criterion (homogeneous ideals) and the per-degree counting
/// criterion are computed alongside it and must agree with it.
struct FIdealVerdict {
    bool is_f_ideal = false;
    /// The structural route cross-checked against the f-vectors.
    VerdictRoute route = VerdictRoute::general_degreewise;
    FVector f_facet;
    FVector f_nonface;
    std::optional<std::string> failure_detail;
};

/// Throws InconsistencyError if the routes disagree.
[[nodiscard]] FIdealVerdict is_f_ideal(const Ideal& ideal, int max_scan_bits = default_face_scan_bits);

/// The per-degree count behind the general f-ideal criterion at degree l:
/// 2|G_l| must equal C(n,l) minus the l-subsets lying under a larger generator
/// minus the l-subsets lying over a smaller one.
struct DegreeBalance {
    int l = 0;
    std::uint64_t generators = 0;   // |G_l|
    std::uint64_t slice_size = 0;   // C(n, l)
    std::uint64_t below_larger = 0;
    std::uint64_t above_smaller = 0;

    /// Twice the right-hand side; may be odd, in which case the balance fails.
    [[nodiscard]] std::int64_t twice_rhs() const noexcept {
        return static_cast<std::int64_t>(slice_size) - static_cast<std::int64_t>(below_larger) -
               static_cast<std::int64_t>(above_smaller);
    }
    [[nodiscard]] bool holds() const noexcept {
        return 2 * static_cast<std::int64_t>(generators) == twice_rhs();
    }
};

/// Requires 1 <= l <= n.
[[nodiscard]] DegreeBalance degree_balance(const Ideal& ideal, int l);

/// Checks that the nonempty proper divisors of generators are exactly the faces
/// shared by both complexes, and that proper multiples of generators are faces of neither.
[[nodiscard]] bool shadow_closure_identities(const Ideal& ideal, int max_scan_bits = default_face_scan_bits);

/// Streams every f-ideal generated in degree d (as perfect subsets of sm(S)_d
/// of size C(n,d)/2), in lexicographic order of the canonical slice order.
/// Throws BudgetExceeded up front when C(C(n,d), C(n,d)/2) > options.max_candidates.
void enumerate_f_ideals(int n, int d, const SearchOptions& options, const std::function<void(const Ideal&)>& visit);
[[nodiscard]] std::vector<Ideal> list_f_ideals(int n, int d, const SearchOptions& options = {});

enum class CountMethod { formula, enumeration };

struct CountResult {
    int n = 0;
    int d = 2;
    BigInt value;
    CountMethod method = CountMethod::formula;
};

/// |U(n,2)|: (1/2) C(4k,2k) C(4k^2,k) for n = 4k, C(4k+1,2k) C(4k^2+2k,k) for n = 4k+1, else 0.
[[nodiscard]] CountResult count_U(int n);
/// |V(n,2)| by the closed formula (n >= 4).
[[nodiscard]] CountResult count_V(int n);
/// |V(n,d)| by exhaustive enumeration.
[[nodiscard]] CountResult count_by_enumeration(int n, int d, const SearchOptions& options = {});

/// One summand of the closed |V(n,2)| formula: the ideals of type l, or the
/// 5-cycle family (l = 0) at n = 5.
struct CountTerm {
    int l;
    BigInt value;
};
[[nodiscard]] std::vector<CountTerm> count_V_terms(int n);

/// Whether the ideals of type l exist according to the closed inequality:
/// with i = 2k - l, i^2 <= k for n = 4k and i^2 + i <= k for n = 4k + 1.
[[nodiscard]] bool w_l_nonempty(int n, int l);

/// G(I) = W_B u extra. Checks n = 0, 1 mod 4, |extra| = C(n,2)/2 - |W_B|,
/// extra degree 2 and disjoint from W_B (InputError), then that the result is
/// an f-ideal (ConstructionError otherwise).
[[nodiscard]] Ideal construct_f_ideal(int n, Mask b, const MonomialSet& extra);
/// Lexicographically least extra set making construct_f_ideal succeed;
/// ConstructionError if there is none.
[[nodiscard]] MonomialSet auto_extra(int n, Mask b);

/// The 12 ideals at n = 5 whose generators form a 5-cycle, canonical order.
[[nodiscard]] std::vector<Ideal> c5_family();

[[nodiscard]] std::string to_string(VerdictRoute r);
[[nodiscard]] std::string to_string(CountMethod m);

}  // namespace fideal
