#include "fideal/complex.hpp"

#include <algorithm>
#include <bit>
#include <unordered_set>

#include "fideal/error.hpp"

namespace fideal {

namespace {

void check_scan(int n, int max_scan_bits) {
    if (n > max_scan_bits || n > 30) {
        throw BudgetExceeded("face scan over 2^" + std::to_string(n) + " subsets exceeds the limit of 2^" +
                             std::to_string(std::min(max_scan_bits, 30)));
    }
}

// Downward closure without the empty face, visiting each face once.
template <class Visit>
void for_each_face(const SimplicialComplex& c, Visit&& visit) {
    const int n = c.ambient();
    std::vector<Mask> stack;
    auto walk = [&](auto&& seen, auto&& mark) {
        for (Mask f : c.facets()) {
            if (f == 0 || seen(f)) continue;
            mark(f);
            stack.push_back(f);
            while (!stack.empty()) {
                Mask face = stack.back();
                stack.pop_back();
                visit(face);
                for (Mask rest = face; rest; rest &= rest - 1) {
                    Mask sub = face & ~(rest & (~rest + 1));
                    if (sub != 0 && !seen(sub)) {
                        mark(sub);
                        stack.push_back(sub);
                    }
                }
            }
        }
    };
    if (n <= 26) {
        std::vector<bool> seen(std::size_t{1} << n, false);
        walk([&](Mask m) { return static_cast<bool>(seen[m]); }, [&](Mask m) { seen[m] = true; });
    } else {
        std::unordered_set<Mask> seen;
        walk([&](Mask m) { return seen.count(m) != 0; }, [&](Mask m) { seen.insert(m); });
    }
}

}  // namespace

SimplicialComplex::SimplicialComplex(int n) : n_(n) { check_ambient(n); }

SimplicialComplex::SimplicialComplex(int n, std::vector<Mask> faces) : n_(n) {
    check_ambient(n);
    for (Mask f : faces) {
        if (f & ~full_mask(n)) throw InputError("face outside the vertex set [n]");
    }
    facets_ = maximal_elements(std::move(faces));
}

bool SimplicialComplex::has_face(Mask face) const noexcept {
    return std::any_of(facets_.begin(), facets_.end(), [face](Mask f) { return (face & ~f) == 0; });
}

SimplicialComplex facet_complex(const Ideal& ideal) {
    return SimplicialComplex(ideal.ambient(), ideal.generators().supports());
}

SimplicialComplex nonface_complex(const Ideal& ideal, int max_scan_bits) {
    const int n = ideal.ambient();
    check_scan(n, max_scan_bits);
    const std::size_t total = std::size_t{1} << n;

    // contains_generator[s] iff some generator support is a subset of s.
    std::vector<bool> contains_generator(total, false);
    for (const auto& g : ideal.generators()) contains_generator[g.support()] = true;
    for (std::size_t s = 1; s < total; ++s) {
        if (contains_generator[s]) continue;
        for (std::size_t rest = s; rest; rest &= rest - 1) {
            if (contains_generator[s & ~(rest & (~rest + 1))]) {
                contains_generator[s] = true;
                break;
            }
        }
    }

    const Mask all = full_mask(n);
    std::vector<Mask> facets;
    for (std::size_t s = 0; s < total; ++s) {
        if (contains_generator[s]) continue;
        bool maximal = true;
        for (Mask free = all & ~Mask{s}; free; free &= free - 1) {
            if (!contains_generator[s | (free & (~free + 1))]) {
                maximal = false;
                break;
            }
        }
        if (maximal) facets.push_back(s);
    }
    return SimplicialComplex(n, std::move(facets));
}

FVector f_vector(const SimplicialComplex& c) {
    FVector counts(static_cast<std::size_t>(c.ambient()), 0);
    for_each_face(c, [&](Mask face) { ++counts[static_cast<std::size_t>(std::popcount(face)) - 1]; });
    while (!counts.empty() && counts.back() == 0) counts.pop_back();
    return counts;
}

int dimension(const SimplicialComplex& c) noexcept {
    int best = 0;
    for (Mask f : c.facets()) best = std::max(best, std::popcount(f));
    return best - 1;
}

bool is_pure(const SimplicialComplex& c) noexcept {
    const auto& f = c.facets();
    return std::all_of(f.begin(), f.end(),
                       [&](Mask m) { return std::popcount(m) == std::popcount(f.front()); });
}

std::vector<Mask> nonempty_faces(const SimplicialComplex& c) {
    std::vector<Mask> out;
    for_each_face(c, [&](Mask face) { out.push_back(face); });
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Mask> minimal_nonfaces(const SimplicialComplex& c, int max_scan_bits) {
    const int n = c.ambient();
    check_scan(n, max_scan_bits);
    std::vector<Mask> out;
    const std::size_t total = std::size_t{1} << n;
    for (std::size_t s = 1; s < total; ++s) {
        if (c.has_face(s)) continue;
        bool minimal = true;
        for (Mask rest = s; rest; rest &= rest - 1) {
            if (!c.has_face(s & ~(rest & (~rest + 1)))) {
                minimal = false;
                break;
            }
        }
        if (minimal) out.push_back(s);
    }
    return out;
}

}  // namespace fideal
