#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace lowbw {

// Input / precondition failures.
inline void check_input(bool cond, const std::string& msg) {
    if (!cond) throw std::invalid_argument(msg);
}

// Internal consistency failures: these signal an implementation bug,
// never a bad input.
inline void check_internal(bool cond, const std::string& msg) {
    if (!cond) throw std::logic_error("internal invariant violated: " + msg);
}

// d^e as a real threshold. Counts are compared against these values in
// double precision; guarantees are asserted with a ceiling on the
// guarantee side.
inline double pow_d(int d, double e) { return std::pow(static_cast<double>(d), e); }

// Smallest integer ruled in by a real lower bound.
inline std::int64_t ceil_count(double bound) {
    return static_cast<std::int64_t>(std::ceil(bound - 1e-9));
}

// Deterministic seed derivation (splitmix64 step over a mixed key).
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (salt + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace lowbw
