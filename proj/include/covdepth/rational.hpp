#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace covdepth {

// Exact arithmetic for every quantity the closed forms produce as a rational
// (harmonic sums, enumeration expectations, tail probabilities of the uncoded
// channel). Backed by GMP; values are always kept in canonical form.
using BigInt = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline BigInt binomial_exact(unsigned long n, unsigned long k) {
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

// "403/105" for proper fractions, "5" for integers.
inline std::string rational_to_string(const Rational& q) {
    return q.get_str();
}

inline double rational_to_double(const Rational& q) {
    return q.get_d();
}

}  // namespace covdepth
