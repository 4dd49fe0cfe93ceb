#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace ugc {

// Data/corruption errors (bad files, malformed streams). Precondition
// violations use std::invalid_argument / std::out_of_range instead.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Binary entropy in bits, with h(0) = h(1) = 0 by continuity.
inline double binary_entropy(double p) {
    if (p <= 0.0 || p >= 1.0) return 0.0;
    return -p * std::log2(p) - (1.0 - p) * std::log2(1.0 - p);
}

// Smallest w with 2^w >= x (x >= 1). ceil_log2(1) = 0.
inline std::uint32_t ceil_log2(std::uint64_t x) {
    std::uint32_t w = 0;
    while ((std::uint64_t{1} << w) < x) ++w;
    return w;
}

inline std::uint64_t pair_count(std::uint64_t n) { return n * (n - 1) / 2; }

// Deterministic uniform [0,1) from a 64-bit generator draw; keeps sampling
// reproducible across standard libraries (std distributions are not pinned).
template <typename Rng>
double uniform01(Rng& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

} // namespace ugc
