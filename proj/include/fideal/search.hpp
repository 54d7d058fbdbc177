#pragma once

#include <cstdint>

namespace fideal {

/// Limits and parallelism for exhaustive searches over subsets of a degree slice.
struct SearchOptions {
    /// Upper bound on the nominal number of candidate subsets, C(|slice|, size), per searched size.
    std::uint64_t max_candidates = std::uint64_t{1} << 32;
    /// Worker threads; 1 runs inline. Output order never depends on this.
    unsigned workers = 1;
};

}  // namespace fideal
