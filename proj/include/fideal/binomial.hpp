#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

namespace fideal {

using BigInt = boost::multiprecision::cpp_int;

/// Exact C(n, k) as a big integer; zero when k < 0 or k > n.
[[nodiscard]] inline BigInt big_binomial(long long n, long long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt r = 1;
    for (long long i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

/// Exact C(n, k) in 64 bits; throws std::overflow_error if it does not fit.
[[nodiscard]] inline std::uint64_t binomial(long long n, long long k) {
    BigInt r = big_binomial(n, k);
    if (r > std::numeric_limits<std::uint64_t>::max()) {
        throw std::overflow_error("binomial coefficient exceeds 64 bits");
    }
    return r.convert_to<std::uint64_t>();
}

}  // namespace fideal
