#include "covdepth/special.hpp"

#include <cmath>
#include <stdexcept>

namespace covdepth {

double poisson_cdf_lower(int j, double lambda) {
    if (j < 0) return 0.0;
    if (lambda <= 0.0) return 1.0;
    double sum;
    if (lambda < 30.0) {
        double term = std::exp(-lambda);
        sum = term;
        for (int i = 1; i <= j; ++i) {
            term *= lambda / i;
            sum += term;
        }
    } else {
        sum = 0.0;
        const double ll = std::log(lambda);
        for (int i = 0; i <= j; ++i) {
            sum += std::exp(i * ll - lambda - std::lgamma(i + 1.0));
        }
    }
    return sum < 1.0 ? sum : 1.0;
}

namespace {

// Lower regularized gamma P(a, x) by series (x < a + 1).
double gamma_p_series(double a, double x) {
    double term = 1.0 / a;
    double sum = term;
    double ap = a;
    for (int i = 0; i < 500; ++i) {
        ap += 1.0;
        term *= x / ap;
        sum += term;
        if (std::abs(term) < std::abs(sum) * 1e-16) break;
    }
    return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

// Upper regularized gamma Q(a, x) by Lentz continued fraction (x >= a + 1).
double gamma_q_cf(double a, double x) {
    constexpr double kTiny = 1e-300;
    double b = x + 1.0 - a;
    double c = 1.0 / kTiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i <= 500; ++i) {
        const double an = -i * (i - a);
        b += 2.0;
        d = an * d + b;
        if (std::abs(d) < kTiny) d = kTiny;
        c = b + an / c;
        if (std::abs(c) < kTiny) c = kTiny;
        d = 1.0 / d;
        const double delta = d * c;
        h *= delta;
        if (std::abs(delta - 1.0) < 1e-16) break;
    }
    return h * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

}  // namespace

double regularized_gamma_q(double a, double x) {
    if (a <= 0.0) throw std::invalid_argument("regularized_gamma_q: a must be positive");
    if (x < 0.0) throw std::invalid_argument("regularized_gamma_q: x must be non-negative");
    if (x == 0.0) return 1.0;
    if (x < a + 1.0) return 1.0 - gamma_p_series(a, x);
    return gamma_q_cf(a, x);
}

double log_binomial(std::uint64_t r, std::uint64_t j) {
    if (j > r) return -1.0 / 0.0;
    return std::lgamma(static_cast<double>(r) + 1.0) - std::lgamma(static_cast<double>(j) + 1.0) -
           std::lgamma(static_cast<double>(r - j) + 1.0);
}

}  // namespace covdepth
