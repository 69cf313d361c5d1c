#include "covdepth/analytic.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "covdepth/special.hpp"

namespace covdepth::analytic {

Rational expected_coverage_uniform_t1(int n, int k) {
    if (n < 1 || k < 1 || k > n)
        throw std::invalid_argument("expected_coverage_uniform_t1: need 1 <= k <= n");
    Rational sum(0);
    for (int i = 0; i < k; ++i) {
        sum += make_rational(n, n - i);
    }
    return sum;
}

double rx_threshold(int n, int k, int t, double x) {
    if (n < 3) throw std::invalid_argument("rx_threshold: need n >= 3 so ln(ln n) > 0");
    if (k < 1 || k >= n)
        throw std::invalid_argument("rx_threshold: need 1 <= k < n (k = n diverges)");
    if (t < 1) throw std::invalid_argument("rx_threshold: need t >= 1");
    const double nn = n;
    return nn * std::log(nn / (n - k)) + nn * t * std::log(std::log(nn)) +
           2.0 * nn * std::log(t + 1.0) + nn * x;
}

double failure_probability_bound(double x, int t) {
    if (t < 1) throw std::invalid_argument("failure_probability_bound: need t >= 1");
    const double factorial = std::tgamma(static_cast<double>(t));  // (t-1)!
    return -std::expm1(-std::exp(-x) / factorial);
}

double x_for_epsilon(double eps, int t) {
    if (!(eps > 0.0 && eps < 1.0))
        throw std::invalid_argument("x_for_epsilon: need 0 < eps < 1");
    if (t < 1) throw std::invalid_argument("x_for_epsilon: need t >= 1");
    const double factorial = std::tgamma(static_cast<double>(t));
    return -std::log(factorial * (-std::log1p(-eps)));
}

double expected_unfilled_exact(int n, std::uint64_t r, int t) {
    if (n < 1) throw std::invalid_argument("expected_unfilled_exact: need n >= 1");
    if (t < 0) throw std::invalid_argument("expected_unfilled_exact: need t >= 0");
    if (n == 1) return r <= static_cast<std::uint64_t>(t) ? 1.0 : 0.0;
    const double log_n = std::log(static_cast<double>(n));
    const double log_q = std::log1p(-1.0 / n);
    double sum = 0.0;
    for (int j = 0; j <= t && static_cast<std::uint64_t>(j) <= r; ++j) {
        const double lg = log_binomial(r, j) - j * log_n + static_cast<double>(r - j) * log_q;
        sum += std::exp(lg);
    }
    return n * sum;
}

double expected_unfilled_chernoff(int n, std::uint64_t r, int t) {
    if (n < 1 || t < 1) throw std::invalid_argument("expected_unfilled_chernoff: need n, t >= 1");
    if (r < static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(t))
        throw std::invalid_argument("expected_unfilled_chernoff: bound requires r >= n*t");
    const double a = static_cast<double>(t) / static_cast<double>(r);
    const double p = 1.0 / n;
    double d = 0.0;
    if (a > 0.0) d += a * std::log2(a / p);
    if (a < 1.0) d += (1.0 - a) * std::log2((1.0 - a) / (1.0 - p));
    return n * std::exp2(-static_cast<double>(r) * d);
}

double reads_for_expected_success(int n, int k, int t) {
    if (k < 1 || k >= n)
        throw std::invalid_argument("reads_for_expected_success: need 1 <= k < n");
    if (t < 1) throw std::invalid_argument("reads_for_expected_success: need t >= 1");
    const double R = static_cast<double>(k) / n;
    const double log1mR = std::log1p(-R);  // negative
    const double nn = n;
    return nn * t - nn * std::numbers::ln2 * log1mR +
           nn * t * std::sqrt(-(2.0 * std::numbers::ln2 / t) * log1mR);
}

Wm1Bracket lambert_wm1_bracket(double u) {
    if (!(u > 0.0)) throw std::invalid_argument("lambert_wm1_bracket: need u > 0");
    const double s = std::sqrt(2.0 * u);
    return Wm1Bracket{-1.0 - s - u, -1.0 - s - (2.0 / 3.0) * u};
}

double expected_coverage_noisy_alpha(int n, int k, double alpha) {
    if (n < 1 || k < 1 || k > n)
        throw std::invalid_argument("expected_coverage_noisy_alpha: need 1 <= k <= n");
    if (!(alpha > 0.0 && alpha <= 1.0))
        throw std::invalid_argument("expected_coverage_noisy_alpha: need 0 < alpha <= 1");
    return rational_to_double(expected_coverage_uniform_t1(n, k)) / alpha;
}

double asymptotic_liminf_coverage(int k, AsymptoticRegime regime) {
    if (k < 2) throw std::invalid_argument("asymptotic_liminf_coverage: need k >= 2");
    if (regime == AsymptoticRegime::proportional) {
        return k * std::log2(std::numbers::e);  // ~1.4427 k
    }
    return static_cast<double>(k);
}

}  // namespace covdepth::analytic
