#pragma once

// Depth-first search over fixed-size subsets of sm(S)_d that are perfect,
// in lexicographic order of slice positions. A candidate branch is cut as
// soon as some face of degree d-1 or d+1 has lost every slice member that
// could still cover it.

#include <cstdint>
#include <functional>
#include <vector>

#include "fideal/monomial.hpp"
#include "fideal/search.hpp"

namespace fideal::detail {

class SliceSearch {
public:
    SliceSearch(int n, int d);

    [[nodiscard]] const std::vector<Mask>& slice() const noexcept { return slice_; }

    /// Calls visit(positions) for each perfect subset of the given size in
    /// lexicographic order; visit returns false to stop.
    void run(std::size_t size, const std::function<bool(const std::vector<std::uint32_t>&)>& visit) const;

    /// All perfect subsets of the given size, lexicographic; with first_only
    /// at most the lexicographically least one. Work is split over workers.
    [[nodiscard]] std::vector<std::vector<std::uint32_t>> collect(std::size_t size, unsigned workers,
                                                                  bool first_only) const;

private:
    friend class Walker;

    int n_;
    int d_;
    std::vector<Mask> slice_;
    // For each slice position: ids of covered faces in one combined id space
    // (lower faces first, then upper faces).
    std::vector<std::vector<std::uint32_t>> covers_;
    std::vector<int> initial_possible_;
};

}  // namespace fideal::detail
