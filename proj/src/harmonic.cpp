#include "covdepth/harmonic.hpp"

#include <cmath>
#include <stdexcept>

namespace covdepth {

namespace {

// sum_{i=a..b} 1/i as (num, den), divide and conquer so the bignum work is
// balanced instead of one long chain of canonicalizations.
void harmonic_range(std::uint32_t a, std::uint32_t b, BigInt& num, BigInt& den) {
    if (a == b) {
        num = 1;
        den = a;
        return;
    }
    const std::uint32_t mid = a + (b - a) / 2;
    BigInt n1, d1, n2, d2;
    harmonic_range(a, mid, n1, d1);
    harmonic_range(mid + 1, b, n2, d2);
    num = n1 * d2 + n2 * d1;
    den = d1 * d2;
}

}  // namespace

Rational harmonic_exact(std::uint32_t m) {
    if (m > kHarmonicExactLimit)
        throw std::domain_error("harmonic_exact: m exceeds the exact-rational limit of 1e6");
    if (m == 0) return Rational(0);
    BigInt num, den;
    harmonic_range(1, m, num, den);
    Rational q(num, den);
    q.canonicalize();
    return q;
}

std::vector<Rational> harmonic_prefix(std::uint32_t max_m) {
    std::vector<Rational> h(static_cast<std::size_t>(max_m) + 1);
    h[0] = 0;
    for (std::uint32_t i = 1; i <= max_m; ++i) {
        h[i] = h[i - 1] + make_rational(1, i);
    }
    return h;
}

double harmonic_real(std::uint64_t m) {
    if (m <= 512) {
        long double acc = 0.0L;
        for (std::uint64_t i = m; i >= 1; --i) acc += 1.0L / static_cast<long double>(i);
        return static_cast<double>(acc);
    }
    // Euler-Maclaurin: H_m = ln m + gamma + 1/2m - 1/12m^2 + 1/120m^4 - ...
    constexpr long double kGamma = 0.57721566490153286060651209008240L;
    const long double x = static_cast<long double>(m);
    const long double inv = 1.0L / x;
    const long double inv2 = inv * inv;
    long double h = std::log(x) + kGamma + 0.5L * inv;
    h -= inv2 * (1.0L / 12.0L - inv2 * (1.0L / 120.0L - inv2 / 252.0L));
    return static_cast<double>(h);
}

}  // namespace covdepth
