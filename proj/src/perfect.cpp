#include "fideal/perfect.hpp"

#include <algorithm>
#include <vector>

#include "fideal/binomial.hpp"
#include "fideal/error.hpp"
#include "slice_search.hpp"

namespace fideal {

namespace {

void check_homogeneous(const MonomialSet& a, int d) {
    const int n = a.ambient();
    if (d < 1 || d > n) {
        throw InputError("degree " + std::to_string(d) + " outside [1, " + std::to_string(n) + "]");
    }
    for (const auto& m : a) {
        if (m.degree() != d) {
            throw InputError("set is not homogeneous of degree " + std::to_string(d) + ": " + to_string(m) +
                             " has degree " + std::to_string(m.degree()));
        }
    }
}

std::uint64_t ceil_div(std::uint64_t a, std::uint64_t b) { return (a + b - 1) / b; }

}  // namespace

bool is_upper_perfect(const MonomialSet& a, int d) {
    check_homogeneous(a, d);
    if (d == a.ambient()) return true;
    return upper_shadow(a) == degree_slice(a.ambient(), d + 1);
}

bool is_lower_perfect(const MonomialSet& a, int d) {
    check_homogeneous(a, d);
    if (d == 1) return true;
    return lower_shadow(a) == degree_slice(a.ambient(), d - 1);
}

bool is_perfect(const MonomialSet& a, int d) { return is_upper_perfect(a, d) && is_lower_perfect(a, d); }

PerfectNumber perfect_number(int n, int d, PerfectMethod method, const SearchOptions& options) {
    check_ambient(n);
    if (method == PerfectMethod::formula) {
        if (d != 2) throw InputError("the perfect-number formula covers d = 2 only");
        if (n < 4) throw InputError("the perfect-number formula needs n >= 4");
        const std::uint64_t k = static_cast<std::uint64_t>(n / 2);
        return {n, d, method, n % 2 == 0 ? k * k - k : k * k, std::nullopt};
    }

    if (d < 2 || d >= n) throw InputError("brute perfect-number search needs 2 <= d < n");
    const std::uint64_t slice_size = binomial(n, d);
    // Each member covers d faces below and n - d faces above.
    const std::uint64_t lower_bound =
        std::max(ceil_div(binomial(n, d - 1), static_cast<std::uint64_t>(d)),
                 ceil_div(binomial(n, d + 1), static_cast<std::uint64_t>(n - d)));

    detail::SliceSearch search(n, d);
    for (std::uint64_t size = lower_bound; size <= slice_size; ++size) {
        if (big_binomial(static_cast<long long>(slice_size), static_cast<long long>(size)) > options.max_candidates) {
            std::string note = size > lower_bound ? "; no perfect set of size " + std::to_string(lower_bound) + ".." +
                                                        std::to_string(size - 1) + " exists"
                                                  : "";
            throw BudgetExceeded("perfect-number search at size " + std::to_string(size) + " exceeds " +
                                 std::to_string(options.max_candidates) + " candidates" + note);
        }
        auto found = search.collect(size, options.workers, true);
        if (!found.empty()) {
            std::vector<Mask> members;
            for (std::uint32_t p : found.front()) members.push_back(search.slice()[p]);
            return {n, d, method, size, MonomialSet(n, std::span<const Mask>(members))};
        }
    }
    throw InconsistencyError("the full degree slice is always perfect, search found nothing");
}

MonomialSet two_part_construction(int n, Mask b) {
    check_ambient(n);
    const Mask all = full_mask(n);
    if (b == 0 || (b & all) == all || (b & ~all)) {
        throw InputError("two-part construction needs a nonempty proper subset of [n]");
    }
    std::vector<Mask> members;
    for (Mask pair : degree_slice(n, 2).supports()) {
        if ((pair & b) == pair || (pair & ~b) == pair) members.push_back(pair);
    }
    return MonomialSet(n, std::span<const Mask>(members));
}

MonomialSet staircase_construction(int n) {
    check_ambient(n);
    if (n < 4) throw InputError("staircase construction needs n >= 4");
    // plus[j] = A_{j+}, the partners t > j of j.
    std::vector<Mask> plus(static_cast<std::size_t>(n) + 1, 0);
    for (int j = n - 2; j >= 1; --j) plus[j] = (Mask{1} << (j + 1)) | plus[j + 2];

    std::vector<Mask> members;
    for (int j = 1; j <= n; ++j) {
        for (int t : mask_indices(plus[j])) members.push_back((Mask{1} << (j - 1)) | (Mask{1} << (t - 1)));
    }
    MonomialSet a(n, std::span<const Mask>(members));
    if (!is_perfect(a, 2)) throw InconsistencyError("staircase construction is not perfect for n = " + std::to_string(n));
    return a;
}

}  // namespace fideal
