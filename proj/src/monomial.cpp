#include "fideal/monomial.hpp"

#include <algorithm>
#include <bit>
#include <cctype>

#include "fideal/binomial.hpp"
#include "fideal/error.hpp"

namespace fideal {

namespace {

constexpr std::uint64_t max_slice_size = std::uint64_t{1} << 28;

std::string_view trim(std::string_view s, std::size_t& offset) {
    std::size_t b = 0;
    while (b < s.size() && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    std::size_t e = s.size();
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    offset += b;
    return s.substr(b, e - b);
}

Monomial parse_monomial_at(std::string_view text, int n, std::size_t base) {
    std::size_t offset = base;
    std::string_view t = trim(text, offset);
    if (t == "@") return Monomial::unit(n);
    if (t.empty()) throw InputError("empty monomial", offset);

    Mask bits = 0;
    std::size_t pos = 0;
    while (pos <= t.size()) {
        std::size_t dot = t.find('.', pos);
        if (dot == std::string_view::npos) dot = t.size();
        std::size_t field_offset = offset + pos;
        std::string_view field = trim(t.substr(pos, dot - pos), field_offset);
        if (field.empty()) throw InputError("missing variable index", field_offset);
        long long value = 0;
        for (char c : field) {
            if (!std::isdigit(static_cast<unsigned char>(c))) {
                throw InputError("invalid character '" + std::string(1, c) + "' in monomial",
                                 field_offset);
            }
            value = value * 10 + (c - '0');
            if (value > max_variables) break;
        }
        if (value < 1 || value > n) {
            throw InputError("variable index " + std::string(field) + " outside [1, " +
                                 std::to_string(n) + "]",
                             field_offset);
        }
        Mask bit = Mask{1} << (value - 1);
        if (bits & bit) {
            throw InputError("duplicate variable index " + std::string(field), field_offset);
        }
        bits |= bit;
        pos = dot + 1;
    }
    return Monomial(n, bits);
}

}  // namespace

int popcount(Mask m) noexcept { return std::popcount(m); }

std::vector<int> mask_indices(Mask m) {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(std::popcount(m)));
    while (m) {
        out.push_back(std::countr_zero(m) + 1);
        m &= m - 1;
    }
    return out;
}

Mask mask_from_indices(int n, std::span<const int> indices) {
    Mask bits = 0;
    for (int i : indices) {
        if (i < 1 || i > n) {
            throw InputError("variable index " + std::to_string(i) + " outside [1, " +
                             std::to_string(n) + "]");
        }
        Mask bit = Mask{1} << (i - 1);
        if (bits & bit) throw InputError("duplicate variable index " + std::to_string(i));
        bits |= bit;
    }
    return bits;
}

void check_ambient(int n) {
    if (n < 1 || n > max_variables) {
        throw InputError("ambient variable count must lie in [1, 64], got " + std::to_string(n));
    }
}

Monomial::Monomial(int n, Mask support) : n_(n), bits_(support) {
    check_ambient(n);
    if (support & ~full_mask(n)) throw InputError("monomial support outside [n]");
}

Monomial::Monomial(int n, std::initializer_list<int> indices)
    : Monomial(n, mask_from_indices(n, std::span<const int>(indices.begin(), indices.size()))) {}

std::string to_string(const Monomial& m) {
    if (m.is_unit()) return "@";
    std::string out;
    for (int i : m.indices()) {
        if (!out.empty()) out += '.';
        out += std::to_string(i);
    }
    return out;
}

Monomial parse_monomial(std::string_view text, int n) {
    check_ambient(n);
    return parse_monomial_at(text, n, 0);
}

// MonomialSet

MonomialSet::MonomialSet(int n) : n_(n) { check_ambient(n); }

MonomialSet::MonomialSet(int n, std::vector<Monomial> members) : n_(n), members_(std::move(members)) {
    check_ambient(n);
    for (const auto& m : members_) {
        if (m.ambient() != n) throw InputError("monomial ambient count differs from set ambient count");
    }
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

MonomialSet::MonomialSet(int n, std::span<const Mask> supports) : n_(n) {
    check_ambient(n);
    members_.reserve(supports.size());
    for (Mask s : supports) members_.emplace_back(n, s);
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

MonomialSet::MonomialSet(int n, std::initializer_list<std::initializer_list<int>> members) : n_(n) {
    check_ambient(n);
    for (const auto& m : members) members_.emplace_back(n, m);
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

std::vector<Mask> MonomialSet::supports() const {
    std::vector<Mask> out;
    out.reserve(members_.size());
    for (const auto& m : members_) out.push_back(m.support());
    return out;
}

bool MonomialSet::contains(Mask support) const {
    auto it = std::lower_bound(members_.begin(), members_.end(), support,
                               [](const Monomial& m, Mask s) { return m.support() < s; });
    return it != members_.end() && it->support() == support;
}

bool MonomialSet::contains(const Monomial& m) const {
    return m.ambient() == n_ && contains(m.support());
}

bool MonomialSet::is_subset_of(const MonomialSet& other) const {
    return n_ == other.n_ &&
           std::includes(other.members_.begin(), other.members_.end(), members_.begin(), members_.end());
}

bool MonomialSet::is_homogeneous() const noexcept {
    auto [lo, hi] = degree_range();
    return lo == hi;
}

std::pair<int, int> MonomialSet::degree_range() const noexcept {
    if (members_.empty()) return {0, 0};
    int lo = max_variables + 1, hi = -1;
    for (const auto& m : members_) {
        lo = std::min(lo, m.degree());
        hi = std::max(hi, m.degree());
    }
    return {lo, hi};
}

std::vector<int> MonomialSet::degrees() const {
    std::vector<int> out;
    for (const auto& m : members_) out.push_back(m.degree());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

MonomialSet MonomialSet::of_degree(int d) const {
    MonomialSet out(n_);
    for (const auto& m : members_) {
        if (m.degree() == d) out.members_.push_back(m);
    }
    return out;
}

MonomialSet set_union(const MonomialSet& a, const MonomialSet& b) {
    if (a.ambient() != b.ambient()) throw InputError("set union across different ambient counts");
    std::vector<Monomial> out;
    out.reserve(a.size() + b.size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return MonomialSet(a.ambient(), std::move(out));
}

MonomialSet set_difference(const MonomialSet& a, const MonomialSet& b) {
    if (a.ambient() != b.ambient()) throw InputError("set difference across different ambient counts");
    std::vector<Monomial> out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return MonomialSet(a.ambient(), std::move(out));
}

MonomialSet set_intersection(const MonomialSet& a, const MonomialSet& b) {
    if (a.ambient() != b.ambient()) throw InputError("set intersection across different ambient counts");
    std::vector<Monomial> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return MonomialSet(a.ambient(), std::move(out));
}

std::string to_string(const MonomialSet& s) {
    std::string out;
    for (const auto& m : s) {
        if (!out.empty()) out += ',';
        out += to_string(m);
    }
    return out;
}

MonomialSet parse_monomial_set(std::string_view text, int n) {
    check_ambient(n);
    std::size_t probe = 0;
    if (trim(text, probe).empty()) return MonomialSet(n);

    std::vector<Monomial> members;
    std::vector<Mask> seen;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string_view::npos) comma = text.size();
        Monomial m = parse_monomial_at(text.substr(pos, comma - pos), n, pos);
        if (std::find(seen.begin(), seen.end(), m.support()) != seen.end()) {
            throw InputError("duplicate monomial " + to_string(m), pos);
        }
        seen.push_back(m.support());
        members.push_back(m);
        pos = comma + 1;
    }
    return MonomialSet(n, std::move(members));
}

MonomialSet degree_slice(int n, int d) {
    check_ambient(n);
    if (d < 0 || d > n) {
        throw InputError("degree " + std::to_string(d) + " outside [0, " + std::to_string(n) + "]");
    }
    if (big_binomial(n, d) > max_slice_size) {
        throw BudgetExceeded("degree slice C(" + std::to_string(n) + ", " + std::to_string(d) +
                             ") is too large to materialize");
    }
    std::vector<Mask> out;
    if (d == 0) {
        out.push_back(0);
    } else {
        // Gosper's hack walks the d-subsets in ascending numeric order.
        const Mask limit = full_mask(n);
        Mask v = full_mask(d);
        while (true) {
            out.push_back(v);
            if (v == (limit & ~full_mask(n - d))) break;
            Mask c = v & (~v + 1);
            Mask r = v + c;
            v = (((r ^ v) >> 2) / c) | r;
        }
    }
    return MonomialSet(n, std::span<const Mask>(out));
}

MonomialSet upper_shadow(const MonomialSet& a) {
    const int n = a.ambient();
    const Mask all = full_mask(n);
    std::vector<Mask> out;
    for (const auto& g : a) {
        Mask free = all & ~g.support();
        while (free) {
            Mask bit = free & (~free + 1);
            out.push_back(g.support() | bit);
            free &= free - 1;
        }
    }
    return MonomialSet(n, std::span<const Mask>(out));
}

MonomialSet lower_shadow(const MonomialSet& a) {
    std::vector<Mask> out;
    for (const auto& g : a) {
        Mask rest = g.support();
        while (rest) {
            Mask bit = rest & (~rest + 1);
            Mask h = g.support() & ~bit;
            if (h != 0) out.push_back(h);
            rest &= rest - 1;
        }
    }
    return MonomialSet(a.ambient(), std::span<const Mask>(out));
}

MonomialSet shadow(const MonomialSet& a, Direction dir) {
    return dir == Direction::up ? upper_shadow(a) : lower_shadow(a);
}

MonomialSet iterated_shadow(const MonomialSet& a, Direction dir, int k) {
    if (k < 1) throw InputError("iterated shadow needs k >= 1, got " + std::to_string(k));
    MonomialSet cur = shadow(a, dir);
    for (int i = 1; i < k && !cur.empty(); ++i) cur = shadow(cur, dir);
    return cur;
}

MonomialSet shadow_closure(const MonomialSet& a, Direction dir) {
    MonomialSet acc(a.ambient());
    MonomialSet cur = shadow(a, dir);
    // Each step moves every member one degree, so at most n steps are non-empty.
    for (int step = 0; !cur.empty() && step <= a.ambient(); ++step) {
        acc = set_union(acc, cur);
        cur = shadow(cur, dir);
    }
    return acc;
}

// Ideal

Ideal::Ideal(MonomialSet generators) : gens_(std::move(generators)) {
    if (gens_.empty()) throw InputError("an ideal needs at least one generator");
    for (const auto& g : gens_) {
        if (g.is_unit()) throw InputError("the unit monomial @ cannot be a generator");
    }
    for (std::size_t i = 0; i < gens_.size(); ++i) {
        for (std::size_t j = 0; j < gens_.size(); ++j) {
            if (i != j && gens_[i].divides(gens_[j])) {
                throw InputError("generators are not an antichain: " + to_string(gens_[i]) +
                                 " divides " + to_string(gens_[j]));
            }
        }
    }
}

std::string to_string(const Ideal& ideal) { return to_string(ideal.generators()); }

std::vector<Mask> minimal_elements(std::vector<Mask> supports) {
    std::sort(supports.begin(), supports.end(),
              [](Mask a, Mask b) { return std::popcount(a) != std::popcount(b) ? std::popcount(a) < std::popcount(b) : a < b; });
    supports.erase(std::unique(supports.begin(), supports.end()), supports.end());
    std::vector<Mask> keep;
    for (Mask s : supports) {
        bool dominated = std::any_of(keep.begin(), keep.end(), [s](Mask k) { return (k & ~s) == 0; });
        if (!dominated) keep.push_back(s);
    }
    std::sort(keep.begin(), keep.end());
    return keep;
}

std::vector<Mask> maximal_elements(std::vector<Mask> supports) {
    std::sort(supports.begin(), supports.end(),
              [](Mask a, Mask b) { return std::popcount(a) != std::popcount(b) ? std::popcount(a) > std::popcount(b) : a < b; });
    supports.erase(std::unique(supports.begin(), supports.end()), supports.end());
    std::vector<Mask> keep;
    for (Mask s : supports) {
        bool dominated = std::any_of(keep.begin(), keep.end(), [s](Mask k) { return (s & ~k) == 0; });
        if (!dominated) keep.push_back(s);
    }
    std::sort(keep.begin(), keep.end());
    return keep;
}

}  // namespace fideal
