#include "fideal/engine.hpp"

#include <algorithm>
#include <array>
#include <numeric>

#include "fideal/error.hpp"
#include "fideal/perfect.hpp"
#include "slice_search.hpp"

namespace fideal {

namespace {

std::string join_faults(const std::vector<std::string>& faults) {
    std::string out;
    for (const auto& f : faults) {
        if (!out.empty()) out += "; ";
        out += f;
    }
    return out;
}

// Monomials of degree l lying under (dir = down) or over (dir = up) generators
// of other degrees, as the union of iterated shadows of each degree class.
MonomialSet shifted_union(const Ideal& ideal, int l, Direction dir) {
    MonomialSet acc(ideal.ambient());
    for (int di : ideal.generators().degrees()) {
        const bool wanted = dir == Direction::down ? di > l : di < l;
        if (!wanted) continue;
        const int steps = dir == Direction::down ? di - l : l - di;
        acc = set_union(acc, iterated_shadow(ideal.generators_of_degree(di), dir, steps));
    }
    return acc;
}

void check_mod4(int n) {
    if (n < 4 || (n % 4 != 0 && n % 4 != 1)) {
        throw InputError("needs n >= 4 with n = 0 or 1 (mod 4), got " + std::to_string(n));
    }
}

}  // namespace

FIdealVerdict is_f_ideal(const Ideal& ideal, int max_scan_bits) {
    const int n = ideal.ambient();
    FIdealVerdict v;
    v.f_facet = f_vector(facet_complex(ideal));
    v.f_nonface = f_vector(nonface_complex(ideal, max_scan_bits));
    const bool by_definition = v.f_facet == v.f_nonface;

    std::vector<std::string> faults;
    bool by_degrees = true;
    for (int l = 1; l <= n; ++l) {
        DegreeBalance b = degree_balance(ideal, l);
        if (!b.holds()) {
            by_degrees = false;
            faults.push_back("degree balance fails at l = " + std::to_string(l) + ": 2|G_l| = " +
                             std::to_string(2 * b.generators) + ", bracket = " + std::to_string(b.twice_rhs()));
            break;
        }
    }
    if (by_definition != by_degrees) {
        throw InconsistencyError("f-vector route and degree-balance route disagree on " + to_string(ideal));
    }

    if (ideal.is_homogeneous()) {
        v.route = VerdictRoute::homogeneous;
        const int d = ideal.degree();
        const auto& g = ideal.generators();
        const bool upper = is_upper_perfect(g, d);
        const bool lower = is_lower_perfect(g, d);
        const bool half = 2 * static_cast<std::uint64_t>(g.size()) == binomial(n, d);
        if (!upper) faults.push_back("generators are not upper perfect");
        if (!lower) faults.push_back("generators are not lower perfect");
        if (!half) faults.push_back("|G(I)| = " + std::to_string(g.size()) + " differs from C(n,d)/2");
        if ((upper && lower && half) != by_definition) {
            throw InconsistencyError("f-vector route and perfect-set route disagree on " + to_string(ideal));
        }
    } else {
        v.route = VerdictRoute::general_degreewise;
    }

    v.is_f_ideal = by_definition;
    if (!v.is_f_ideal) v.failure_detail = join_faults(faults);
    return v;
}

DegreeBalance degree_balance(const Ideal& ideal, int l) {
    const int n = ideal.ambient();
    if (l < 1 || l > n) throw InputError("degree l must lie in [1, " + std::to_string(n) + "]");
    DegreeBalance b;
    b.l = l;
    b.generators = ideal.generators_of_degree(l).size();
    b.slice_size = binomial(n, l);
    b.below_larger = shifted_union(ideal, l, Direction::down).size();
    b.above_smaller = shifted_union(ideal, l, Direction::up).size();
    return b;
}

bool shadow_closure_identities(const Ideal& ideal, int max_scan_bits) {
    const auto f_faces = nonempty_faces(facet_complex(ideal));
    const auto n_faces = nonempty_faces(nonface_complex(ideal, max_scan_bits));
    std::vector<Mask> shared;
    std::set_intersection(f_faces.begin(), f_faces.end(), n_faces.begin(), n_faces.end(), std::back_inserter(shared));

    const auto down = shadow_closure(ideal.generators(), Direction::down).supports();
    if (down != shared) return false;

    for (Mask m : shadow_closure(ideal.generators(), Direction::up).supports()) {
        if (std::binary_search(f_faces.begin(), f_faces.end(), m)) return false;
        if (std::binary_search(n_faces.begin(), n_faces.end(), m)) return false;
    }
    return true;
}

void enumerate_f_ideals(int n, int d, const SearchOptions& options, const std::function<void(const Ideal&)>& visit) {
    check_ambient(n);
    if (d < 1 || d > n) throw InputError("degree d must lie in [1, " + std::to_string(n) + "]");
    const std::uint64_t slice_size = binomial(n, d);
    if (slice_size % 2 != 0) return;
    const std::uint64_t half = slice_size / 2;
    const BigInt nominal = big_binomial(static_cast<long long>(slice_size), static_cast<long long>(half));
    if (nominal > options.max_candidates) {
        throw BudgetExceeded("enumeration over C(" + std::to_string(slice_size) + ", " + std::to_string(half) + ") = " +
                             nominal.str() + " candidates exceeds the limit of " +
                             std::to_string(options.max_candidates));
    }

    detail::SliceSearch search(n, d);
    auto emit = [&](const std::vector<std::uint32_t>& positions) {
        std::vector<Mask> members;
        members.reserve(positions.size());
        for (std::uint32_t p : positions) members.push_back(search.slice()[p]);
        visit(Ideal(MonomialSet(n, std::span<const Mask>(members))));
    };
    if (options.workers <= 1) {
        search.run(half, [&](const std::vector<std::uint32_t>& positions) {
            emit(positions);
            return true;
        });
    } else {
        for (const auto& positions : search.collect(half, options.workers, false)) emit(positions);
    }
}

std::vector<Ideal> list_f_ideals(int n, int d, const SearchOptions& options) {
    std::vector<Ideal> out;
    enumerate_f_ideals(n, d, options, [&](const Ideal& ideal) { out.push_back(ideal); });
    return out;
}

CountResult count_U(int n) {
    if (n < 4) throw InputError("count_U needs n >= 4");
    CountResult r{n, 2, 0, CountMethod::formula};
    const long long k = n / 4;
    if (n % 4 == 0) {
        r.value = big_binomial(4 * k, 2 * k) * big_binomial(4 * k * k, k) / 2;
    } else if (n % 4 == 1) {
        r.value = big_binomial(4 * k + 1, 2 * k) * big_binomial(4 * k * k + 2 * k, k);
    }
    return r;
}

std::vector<CountTerm> count_V_terms(int n) {
    if (n < 4) throw InputError("count_V needs n >= 4");
    std::vector<CountTerm> terms;
    const long long k = n / 4;
    if (n % 4 == 0) {
        terms.push_back({static_cast<int>(2 * k), big_binomial(4 * k, 2 * k) * big_binomial(4 * k * k, k) / 2});
        for (long long i = 1; i * i <= k; ++i) {
            terms.push_back({static_cast<int>(2 * k - i),
                             big_binomial(4 * k, 2 * k - i) * big_binomial(4 * k * k - i * i, k - i * i)});
        }
    } else if (n == 5) {
        terms.push_back({2, count_U(5).value});
        terms.push_back({0, 12});
    } else if (n % 4 == 1) {
        for (long long i = 0; i * i + i <= k; ++i) {
            terms.push_back({static_cast<int>(2 * k - i), big_binomial(4 * k + 1, 2 * k - i) *
                                                              big_binomial(4 * k * k + 2 * k - i - i * i, k - i - i * i)});
        }
    }
    return terms;
}

CountResult count_V(int n) {
    CountResult r{n, 2, 0, CountMethod::formula};
    if (n == 5) {
        r.value = 72;
        return r;
    }
    for (const auto& t : count_V_terms(n)) r.value += t.value;
    return r;
}

CountResult count_by_enumeration(int n, int d, const SearchOptions& options) {
    CountResult r{n, d, 0, CountMethod::enumeration};
    std::uint64_t count = 0;
    enumerate_f_ideals(n, d, options, [&](const Ideal&) { ++count; });
    r.value = count;
    return r;
}

bool w_l_nonempty(int n, int l) {
    check_mod4(n);
    if (l < 1 || l > n / 2) throw InputError("l must lie in [1, " + std::to_string(n / 2) + "]");
    const long long k = n / 4;
    const long long i = 2 * k - l;
    return n % 4 == 0 ? i * i <= k : i * i + i <= k;
}

Ideal construct_f_ideal(int n, Mask b, const MonomialSet& extra) {
    check_mod4(n);
    if (extra.ambient() != n) throw InputError("extra monomials live in a different ambient ring");
    const MonomialSet w = two_part_construction(n, b);
    for (const auto& m : extra) {
        if (m.degree() != 2) throw InputError("extra monomial " + to_string(m) + " is not of degree 2");
        if (w.contains(m)) throw InputError("extra monomial " + to_string(m) + " already lies in W_B");
    }
    const long long half = static_cast<long long>(binomial(n, 2) / 2);
    const long long need = half - static_cast<long long>(w.size());
    if (static_cast<long long>(extra.size()) != need) {
        throw InputError("extra must have C(n,2)/2 - |W_B| = " + std::to_string(need) + " members, got " +
                         std::to_string(extra.size()));
    }
    Ideal ideal(set_union(w, extra));
    const FIdealVerdict v = is_f_ideal(ideal);
    if (!v.is_f_ideal) {
        throw ConstructionError("W_B u extra = " + to_string(ideal) +
                                " meets the size preconditions but is not an f-ideal: " + v.failure_detail.value_or(""));
    }
    return ideal;
}

MonomialSet auto_extra(int n, Mask b) {
    check_mod4(n);
    const MonomialSet w = two_part_construction(n, b);
    const MonomialSet cross = set_difference(degree_slice(n, 2), w);
    const long long half = static_cast<long long>(binomial(n, 2) / 2);
    const long long need = half - static_cast<long long>(w.size());
    if (need < 0) {
        throw ConstructionError("|W_B| = " + std::to_string(w.size()) + " already exceeds C(n,2)/2 = " +
                                std::to_string(half));
    }
    const std::size_t m = cross.size();
    const auto k = static_cast<std::size_t>(need);
    constexpr std::uint64_t max_tries = 1'000'000;

    std::vector<std::size_t> pick(k);
    std::iota(pick.begin(), pick.end(), 0);
    for (std::uint64_t tries = 0; tries < max_tries; ++tries) {
        std::vector<Monomial> chosen;
        for (std::size_t p : pick) chosen.push_back(cross[p]);
        MonomialSet extra(n, std::move(chosen));
        if (is_perfect(set_union(w, extra), 2)) return extra;

        // Next k-combination of [0, m) in lexicographic order.
        std::size_t i = k;
        while (i > 0 && pick[i - 1] == m - k + i - 1) --i;
        if (i == 0) {
            throw ConstructionError("no extra set of size " + std::to_string(need) +
                                    " completes W_B to an f-ideal");
        }
        ++pick[i - 1];
        for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
    throw BudgetExceeded("automatic extra selection tried " + std::to_string(max_tries) + " sets");
}

std::vector<Ideal> c5_family() {
    constexpr int n = 5;
    std::vector<Ideal> out;
    std::array<int, 4> rest{2, 3, 4, 5};
    do {
        // Fix vertex 1 and drop the mirror image of each cycle.
        if (rest.front() > rest.back()) continue;
        std::array<int, 5> cyc{1, rest[0], rest[1], rest[2], rest[3]};
        std::vector<Mask> edges;
        for (std::size_t i = 0; i < cyc.size(); ++i) {
            edges.push_back((Mask{1} << (cyc[i] - 1)) | (Mask{1} << (cyc[(i + 1) % cyc.size()] - 1)));
        }
        out.emplace_back(MonomialSet(n, std::span<const Mask>(edges)));
    } while (std::next_permutation(rest.begin(), rest.end()));
    std::sort(out.begin(), out.end(), [](const Ideal& a, const Ideal& b) {
        return a.generators().members() < b.generators().members();
    });
    return out;
}

std::string to_string(VerdictRoute r) {
    switch (r) {
        case VerdictRoute::definition: return "definition";
        case VerdictRoute::homogeneous: return "homogeneous";
        case VerdictRoute::general_degreewise: return "general_degreewise";
    }
    return "unknown";
}

std::string to_string(CountMethod m) { return m == CountMethod::formula ? "formula" : "enumeration"; }

}  // namespace fideal
