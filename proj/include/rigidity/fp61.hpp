#pragma once

#include <cstdint>

namespace rigidity::fp61 {

// Arithmetic modulo the Mersenne prime 2^61 - 1. All values are kept reduced
// to [0, p); products fold the 122-bit intermediate back with shifts instead
// of a hardware division.
inline constexpr std::uint64_t prime = (std::uint64_t{1} << 61) - 1;

inline std::uint64_t add(std::uint64_t a, std::uint64_t b) {
    std::uint64_t s = a + b;
    if (s >= prime) s -= prime;
    return s;
}

inline std::uint64_t sub(std::uint64_t a, std::uint64_t b) {
    return a >= b ? a - b : a + prime - b;
}

inline std::uint64_t mul(std::uint64_t a, std::uint64_t b) {
    const unsigned __int128 wide = static_cast<unsigned __int128>(a) * b;
    const std::uint64_t lo = static_cast<std::uint64_t>(wide) & prime;
    const std::uint64_t hi = static_cast<std::uint64_t>(wide >> 61);
    return add(lo, hi);
}

inline std::uint64_t pow(std::uint64_t base, std::uint64_t exponent) {
    std::uint64_t result = 1;
    while (exponent > 0) {
        if (exponent & 1) result = mul(result, base);
        base = mul(base, base);
        exponent >>= 1;
    }
    return result;
}

// Multiplicative inverse by Fermat's little theorem; nonzero input required.
inline std::uint64_t inv(std::uint64_t a) {
    return pow(a, prime - 2);
}

} // namespace rigidity::fp61
