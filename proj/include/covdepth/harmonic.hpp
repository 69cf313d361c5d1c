#pragma once

#include <cstdint>
#include <vector>

#include "covdepth/rational.hpp"

namespace covdepth {

// Largest m for which the exact rational H_m is offered; beyond this only the
// double-precision variant is available.
inline constexpr std::uint32_t kHarmonicExactLimit = 1'000'000;

// H_m = sum_{i=1..m} 1/i as an exact rational (H_0 = 0). Binary splitting,
// so single large queries stay cheap. Throws std::domain_error above
// kHarmonicExactLimit.
Rational harmonic_exact(std::uint32_t m);

// H_0..H_max as exact rationals, computed incrementally.
std::vector<Rational> harmonic_prefix(std::uint32_t max_m);

// Double-precision H_m: compensated descending sum for small m, Euler
// asymptotic expansion beyond. Accurate to ~1 ulp everywhere.
double harmonic_real(std::uint64_t m);

}  // namespace covdepth
