#pragma once

// Square-free monomials in K[x_1, ..., x_n] stored as their support bitmask
// (variable x_i at bit i-1), canonically ordered sets of them, and the
// minimal generating sets of square-free monomial ideals.

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace fideal {

using Mask = std::uint64_t;

inline constexpr int max_variables = 64;

/// All of [n] as a mask.
[[nodiscard]] constexpr Mask full_mask(int n) noexcept {
    return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1;
}

[[nodiscard]] int popcount(Mask m) noexcept;

/// 1-based variable indices of a mask, ascending.
[[nodiscard]] std::vector<int> mask_indices(Mask m);

/// Mask from 1-based indices; throws InputError on indices outside [n] or repeats.
[[nodiscard]] Mask mask_from_indices(int n, std::span<const int> indices);

void check_ambient(int n);

class Monomial {
public:
    Monomial(int n, Mask support);
    Monomial(int n, std::initializer_list<int> indices);

    [[nodiscard]] static Monomial unit(int n) { return Monomial(n, 0); }

    [[nodiscard]] int ambient() const noexcept { return n_; }
    [[nodiscard]] Mask support() const noexcept { return bits_; }
    [[nodiscard]] int degree() const noexcept { return popcount(bits_); }
    [[nodiscard]] bool is_unit() const noexcept { return bits_ == 0; }
    [[nodiscard]] bool has_variable(int i) const noexcept {
        return i >= 1 && i <= n_ && ((bits_ >> (i - 1)) & 1u);
    }
    /// this | other as monomials, i.e. support containment.
    [[nodiscard]] bool divides(const Monomial& other) const noexcept {
        return (bits_ & ~other.bits_) == 0;
    }
    [[nodiscard]] std::vector<int> indices() const { return mask_indices(bits_); }

    friend bool operator==(const Monomial&, const Monomial&) = default;
    friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) noexcept {
        if (auto c = a.bits_ <=> b.bits_; c != 0) return c;
        return a.n_ <=> b.n_;
    }

private:
    int n_;
    Mask bits_;
};

/// Dot-joined ascending indices ("1.2.5"); the unit renders as "@".
[[nodiscard]] std::string to_string(const Monomial& m);
[[nodiscard]] Monomial parse_monomial(std::string_view text, int n);

/// Duplicate-free monomials of one ambient n in ascending support order.
class MonomialSet {
public:
    using const_iterator = std::vector<Monomial>::const_iterator;

    explicit MonomialSet(int n);
    MonomialSet(int n, std::vector<Monomial> members);
    MonomialSet(int n, std::span<const Mask> supports);
    MonomialSet(int n, std::initializer_list<std::initializer_list<int>> members);

    [[nodiscard]] int ambient() const noexcept { return n_; }
    [[nodiscard]] std::size_t size() const noexcept { return members_.size(); }
    [[nodiscard]] bool empty() const noexcept { return members_.empty(); }
    [[nodiscard]] const_iterator begin() const noexcept { return members_.begin(); }
    [[nodiscard]] const_iterator end() const noexcept { return members_.end(); }
    [[nodiscard]] const Monomial& operator[](std::size_t i) const { return members_[i]; }
    [[nodiscard]] const std::vector<Monomial>& members() const noexcept { return members_; }
    [[nodiscard]] std::vector<Mask> supports() const;

    [[nodiscard]] bool contains(const Monomial& m) const;
    [[nodiscard]] bool contains(Mask support) const;
    /// Every member of this set is in `other`.
    [[nodiscard]] bool is_subset_of(const MonomialSet& other) const;

    [[nodiscard]] bool is_homogeneous() const noexcept;
    /// Smallest and largest member degree; (0, 0) for the empty set.
    [[nodiscard]] std::pair<int, int> degree_range() const noexcept;
    /// Ascending distinct member degrees.
    [[nodiscard]] std::vector<int> degrees() const;
    [[nodiscard]] MonomialSet of_degree(int d) const;

    friend bool operator==(const MonomialSet&, const MonomialSet&) = default;

private:
    int n_;
    std::vector<Monomial> members_;
};

[[nodiscard]] MonomialSet set_union(const MonomialSet& a, const MonomialSet& b);
[[nodiscard]] MonomialSet set_difference(const MonomialSet& a, const MonomialSet& b);
[[nodiscard]] MonomialSet set_intersection(const MonomialSet& a, const MonomialSet& b);

/// Comma-joined monomials, e.g. "1.2,2.3,3.4".
[[nodiscard]] std::string to_string(const MonomialSet& s);
/// Accepts "1.2, 2.3" with whitespace around separators. An all-blank string is the empty set.
[[nodiscard]] MonomialSet parse_monomial_set(std::string_view text, int n);

/// sm(S)_d: all C(n, d) square-free monomials of degree d.
[[nodiscard]] MonomialSet degree_slice(int n, int d);

enum class Direction { up, down };

/// {g x_i : g in A, x_i not dividing g}.
[[nodiscard]] MonomialSet upper_shadow(const MonomialSet& a);
/// {g / x_i : g in A, x_i | g} with the unit monomial left out.
[[nodiscard]] MonomialSet lower_shadow(const MonomialSet& a);
[[nodiscard]] MonomialSet shadow(const MonomialSet& a, Direction dir);
/// k-fold shadow, k >= 1.
[[nodiscard]] MonomialSet iterated_shadow(const MonomialSet& a, Direction dir, int k);
/// Union of all iterated shadows of order >= 1.
[[nodiscard]] MonomialSet shadow_closure(const MonomialSet& a, Direction dir);

/// A square-free monomial ideal, held as its minimal generating set G(I).
class Ideal {
public:
    /// Rejects an empty set, the unit monomial, and non-antichains
    /// (the message names the offending divisibility pair).
    explicit Ideal(MonomialSet generators);

    [[nodiscard]] static Ideal parse(std::string_view text, int n) {
        return Ideal(parse_monomial_set(text, n));
    }

    [[nodiscard]] int ambient() const noexcept { return gens_.ambient(); }
    [[nodiscard]] const MonomialSet& generators() const noexcept { return gens_; }
    /// deg(I): largest generator degree.
    [[nodiscard]] int degree() const noexcept { return gens_.degree_range().second; }
    /// ldeg(I): smallest generator degree.
    [[nodiscard]] int lower_degree() const noexcept { return gens_.degree_range().first; }
    [[nodiscard]] bool is_homogeneous() const noexcept { return gens_.is_homogeneous(); }
    /// G_l, the generators of degree l (possibly empty).
    [[nodiscard]] MonomialSet generators_of_degree(int l) const { return gens_.of_degree(l); }

    friend bool operator==(const Ideal&, const Ideal&) = default;

private:
    MonomialSet gens_;
};

[[nodiscard]] std::string to_string(const Ideal& ideal);

/// Reduces arbitrary supports to their minimal elements under inclusion.
[[nodiscard]] std::vector<Mask> minimal_elements(std::vector<Mask> supports);
/// Reduces arbitrary supports to their maximal elements under inclusion.
[[nodiscard]] std::vector<Mask> maximal_elements(std::vector<Mask> supports);

}  // namespace fideal
