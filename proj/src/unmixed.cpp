#include "fideal/unmixed.hpp"

#include <algorithm>

#include "fideal/engine.hpp"
#include "fideal/error.hpp"
#include "fideal/perfect.hpp"

namespace fideal {

std::vector<PrimeCover> minimal_primes(const Ideal& ideal, int max_scan_bits) {
    const int n = ideal.ambient();
    if (n > max_scan_bits || n > 30) {
        throw BudgetExceeded("vertex-cover scan over 2^" + std::to_string(n) + " subsets exceeds the limit");
    }
    const auto supports = ideal.generators().supports();
    auto covers = [&](Mask s) {
        return std::all_of(supports.begin(), supports.end(), [s](Mask g) { return (g & s) != 0; });
    };

    std::vector<PrimeCover> out;
    const Mask total = Mask{1} << n;
    for (Mask s = 1; s < total; ++s) {
        if (!covers(s)) continue;
        // Covering is upward closed, so testing single-vertex removals decides minimality.
        bool minimal = true;
        for (Mask rest = s; rest; rest &= rest - 1) {
            if (covers(s & ~(rest & (~rest + 1)))) {
                minimal = false;
                break;
            }
        }
        if (minimal) out.push_back({s});
    }
    return out;
}

bool is_unmixed(const Ideal& ideal, UnmixedRoute route, int max_scan_bits) {
    auto by_covers = [&] {
        const auto primes = minimal_primes(ideal, max_scan_bits);
        return std::all_of(primes.begin(), primes.end(),
                           [&](const PrimeCover& p) { return p.size() == primes.front().size(); });
    };
    auto by_purity = [&] { return is_pure(nonface_complex(ideal, max_scan_bits)); };

    switch (route) {
        case UnmixedRoute::covers: return by_covers();
        case UnmixedRoute::purity: return by_purity();
        case UnmixedRoute::both: break;
    }
    const bool a = by_covers();
    const bool b = by_purity();
    if (a != b) throw InconsistencyError("minimal-prime and purity routes disagree on " + to_string(ideal));
    return a;
}

bool complement_criterion(const Ideal& ideal) {
    if (!ideal.is_homogeneous()) throw InputError("the complement criterion needs a homogeneous ideal");
    if (!is_f_ideal(ideal).is_f_ideal) throw InputError("the complement criterion is stated for f-ideals only");
    const int d = ideal.degree();
    return is_lower_perfect(set_difference(degree_slice(ideal.ambient(), d), ideal.generators()), d);
}

UnmixedReport unmixed_report(const Ideal& ideal, int max_scan_bits) {
    UnmixedReport r;
    r.minimal_primes = minimal_primes(ideal, max_scan_bits);
    r.pure = is_pure(nonface_complex(ideal, max_scan_bits));
    r.unmixed = is_unmixed(ideal, UnmixedRoute::both, max_scan_bits);
    r.codim = r.minimal_primes.empty() ? 0 : r.minimal_primes.front().size();
    for (const auto& p : r.minimal_primes) r.codim = std::min(r.codim, p.size());
    return r;
}

}  // namespace fideal
