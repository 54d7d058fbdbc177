#include "slice_search.hpp"

#include <algorithm>
#include <atomic>
#include <future>
#include <limits>
#include <thread>

namespace fideal::detail {

namespace {

std::uint32_t face_id(const std::vector<Mask>& sorted_faces, Mask f) {
    auto it = std::lower_bound(sorted_faces.begin(), sorted_faces.end(), f);
    return static_cast<std::uint32_t>(it - sorted_faces.begin());
}

}  // namespace

class Walker {
public:
    using Visit = std::function<bool(const std::vector<std::uint32_t>&)>;

    Walker(const SliceSearch& s, std::size_t size) : s_(s), size_(size), possible_(s.initial_possible_) {}

    /// Walks the subtree below the current state starting at slice position pos.
    /// Returns false once the visitor asked to stop.
    bool walk(std::size_t pos, const Visit& visit) {
        const std::size_t m = s_.slice_.size();
        if (chosen_.size() == size_) {
            std::size_t q = pos;
            bool ok = true;
            for (; q < m; ++q) {
                if (!exclude(q)) {
                    ++q;
                    ok = false;
                    break;
                }
            }
            bool keep_going = ok ? visit(chosen_) : true;
            while (q > pos) restore(--q);
            return keep_going;
        }
        if (m - pos < size_ - chosen_.size()) return true;

        chosen_.push_back(static_cast<std::uint32_t>(pos));
        bool keep_going = walk(pos + 1, visit);
        chosen_.pop_back();
        if (!keep_going) return false;

        if (exclude(pos)) keep_going = walk(pos + 1, visit);
        restore(pos);
        return keep_going;
    }

    /// Decided prefixes of length depth that survive pruning, lexicographic.
    void frontier(std::size_t pos, std::size_t depth, std::vector<Walker>& out) {
        const std::size_t m = s_.slice_.size();
        if (pos == depth || chosen_.size() == size_) {
            out.push_back(*this);
            out.back().start_ = pos;
            return;
        }
        if (m - pos < size_ - chosen_.size()) return;
        chosen_.push_back(static_cast<std::uint32_t>(pos));
        frontier(pos + 1, depth, out);
        chosen_.pop_back();
        if (exclude(pos)) frontier(pos + 1, depth, out);
        restore(pos);
    }

    [[nodiscard]] std::size_t start() const noexcept { return start_; }

private:
    // Decrements every face the position covers; false if one becomes uncoverable.
    // Always paired with restore(pos).
    bool exclude(std::size_t pos) {
        bool ok = true;
        for (std::uint32_t f : s_.covers_[pos]) {
            if (--possible_[f] == 0) ok = false;
        }
        return ok;
    }

    void restore(std::size_t pos) {
        for (std::uint32_t f : s_.covers_[pos]) ++possible_[f];
    }

    const SliceSearch& s_;
    std::size_t size_;
    std::vector<int> possible_;
    std::vector<std::uint32_t> chosen_;
    std::size_t start_ = 0;
};

SliceSearch::SliceSearch(int n, int d) : n_(n), d_(d) {
    slice_ = degree_slice(n, d).supports();
    std::vector<Mask> lower = (d >= 2) ? degree_slice(n, d - 1).supports() : std::vector<Mask>{};
    std::vector<Mask> upper = (d + 1 <= n) ? degree_slice(n, d + 1).supports() : std::vector<Mask>{};
    const auto lower_count = static_cast<std::uint32_t>(lower.size());

    initial_possible_.assign(lower.size() + upper.size(), 0);
    covers_.resize(slice_.size());
    const Mask all = full_mask(n);
    for (std::size_t p = 0; p < slice_.size(); ++p) {
        const Mask g = slice_[p];
        if (d >= 2) {
            for (Mask rest = g; rest; rest &= rest - 1) {
                covers_[p].push_back(face_id(lower, g & ~(rest & (~rest + 1))));
            }
        }
        for (Mask free = all & ~g; free; free &= free - 1) {
            covers_[p].push_back(lower_count + face_id(upper, g | (free & (~free + 1))));
        }
        for (std::uint32_t f : covers_[p]) ++initial_possible_[f];
    }
}

void SliceSearch::run(std::size_t size, const std::function<bool(const std::vector<std::uint32_t>&)>& visit) const {
    if (size > slice_.size()) return;
    Walker w(*this, size);
    w.walk(0, visit);
}

std::vector<std::vector<std::uint32_t>> SliceSearch::collect(std::size_t size, unsigned workers,
                                                             bool first_only) const {
    std::vector<std::vector<std::uint32_t>> out;
    if (size > slice_.size()) return out;
    if (workers <= 1) {
        run(size, [&](const std::vector<std::uint32_t>& c) {
            out.push_back(c);
            return !first_only;
        });
        return out;
    }

    std::vector<Walker> tasks;
    Walker root(*this, size);
    root.frontier(0, std::min<std::size_t>(slice_.size(), 12), tasks);

    std::vector<std::vector<std::vector<std::uint32_t>>> results(tasks.size());
    std::atomic<std::size_t> next{0};
    std::atomic<std::size_t> first_hit{std::numeric_limits<std::size_t>::max()};
    auto worker = [&] {
        for (std::size_t t = next++; t < tasks.size(); t = next++) {
            if (first_only && t > first_hit.load()) continue;
            tasks[t].walk(tasks[t].start(), [&](const std::vector<std::uint32_t>& c) {
                results[t].push_back(c);
                if (!first_only) return true;
                std::size_t cur = first_hit.load();
                while (t < cur && !first_hit.compare_exchange_weak(cur, t)) {
                }
                return false;
            });
        }
    };
    const unsigned count = std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(tasks.size(), 1)));
    std::vector<std::future<void>> pool;
    for (unsigned i = 0; i < count; ++i) pool.push_back(std::async(std::launch::async, worker));
    for (auto& f : pool) f.get();

    for (auto& r : results) {
        for (auto& c : r) {
            out.push_back(std::move(c));
            if (first_only) return out;
        }
    }
    return out;
}

}  // namespace fideal::detail
