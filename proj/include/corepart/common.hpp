#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace corepart {

/// Raised when a query has no derivable finite search bound (e.g. a
/// non-coprime pair of forbidden hook lengths names an infinite family).
class UnboundedQueryError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Raised when two enumeration engines that must agree return different
/// partition sets. This is always a bug, never a data condition.
class EngineMismatchError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Counting arithmetic is 64-bit and checked: anything that would wrap
// raises instead of returning garbage. Desk-scale inputs fit comfortably.

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r = 0;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("integer overflow: " + std::to_string(a) + " + " + std::to_string(b));
    return r;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
    std::int64_t r = 0;
    if (__builtin_sub_overflow(a, b, &r))
        throw std::overflow_error("integer overflow: " + std::to_string(a) + " - " + std::to_string(b));
    return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r = 0;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("integer overflow: " + std::to_string(a) + " * " + std::to_string(b));
    return r;
}

/// Binomial coefficient C(n, k), exact. The running product of i consecutive
/// integers is divisible by i!, so the division at each step is exact.
inline std::int64_t binomial(std::int64_t n, std::int64_t k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    std::int64_t r = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        r = checked_mul(r, n - k + i);
        r /= i;
    }
    return r;
}

inline std::int64_t gcd64(std::int64_t a, std::int64_t b) {
    return std::gcd(a, b);
}

} // namespace corepart
