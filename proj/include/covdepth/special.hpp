#pragma once

#include <cstdint>

namespace covdepth {

// P[Poisson(lambda) <= j], evaluated without under/overflow for any lambda.
double poisson_cdf_lower(int j, double lambda);

// Regularized upper incomplete gamma Q(a, x) = Gamma(a, x) / Gamma(a).
// Used for chi-square p-values: p = Q(df/2, stat/2).
double regularized_gamma_q(double a, double x);

// log C(r, j) for potentially huge r (log-gamma based).
double log_binomial(std::uint64_t r, std::uint64_t j);

}  // namespace covdepth
