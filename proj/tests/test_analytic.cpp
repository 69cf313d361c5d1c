#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "covdepth/analytic.hpp"
#include "covdepth/harmonic.hpp"
#include "covdepth/random.hpp"

using namespace covdepth;
using namespace covdepth::analytic;

TEST_CASE("uniform t=1 expectation closed form") {
    CHECK(expected_coverage_uniform_t1(5, 1) == Rational(1));
    CHECK(expected_coverage_uniform_t1(2, 2) == Rational(3));
    CHECK(expected_coverage_uniform_t1(8, 4) == make_rational(533, 105));
    // Equals n (H_n - H_{n-k}).
    const auto h = harmonic_prefix(40);
    CHECK(expected_coverage_uniform_t1(40, 17) == Rational(40) * (h[40] - h[23]));
    CHECK_THROWS_AS((void)expected_coverage_uniform_t1(4, 5), std::invalid_argument);
}

TEST_CASE("monotone decrease in n at fixed k (exact, small grid)") {
    const auto h = harmonic_prefix(61);
    for (int k = 2; k <= 40; ++k) {
        for (int n = k; n <= 60; ++n) {
            CHECK(expected_coverage_uniform_t1(n, k) > expected_coverage_uniform_t1(n + 1, k));
        }
    }
    (void)h;
}

TEST_CASE("log approximation within 2% for n >= 200, n-k >= 50") {
    for (auto [n, k] : std::vector<std::pair<int, int>>{{200, 150}, {250, 125}, {400, 300},
                                                        {1000, 900}}) {
        const double exact = rational_to_double(expected_coverage_uniform_t1(n, k));
        const double approx = n * std::log(static_cast<double>(n) / (n - k));
        CHECK(std::abs(exact - approx) / exact <= 0.02);
    }
}

TEST_CASE("rx threshold") {
    CHECK(rx_threshold(1000, 900, 2, 0.0) == doctest::Approx(8365.099138162395).epsilon(1e-12));
    CHECK(rx_threshold(1000, 900, 2, 1.0) - rx_threshold(1000, 900, 2, 0.0) ==
          doctest::Approx(1000.0).epsilon(1e-12));
    CHECK(rx_threshold(100, 50, 1, 0.0) == doctest::Approx(360.66211674877366).epsilon(1e-12));
    CHECK_THROWS_AS((void)rx_threshold(1000, 1000, 2, 0.0), std::invalid_argument);
    CHECK_THROWS_AS((void)rx_threshold(2, 1, 1, 0.0), std::invalid_argument);
}

TEST_CASE("failure probability bound") {
    CHECK(failure_probability_bound(50.0, 1) == doctest::Approx(0.0).epsilon(1e-20));
    CHECK(failure_probability_bound(0.0, 1) == doctest::Approx(1.0 - std::exp(-1.0)).epsilon(1e-15));
    CHECK(failure_probability_bound(0.0, 3) == doctest::Approx(1.0 - std::exp(-0.5)).epsilon(1e-15));

    // Strictly decreasing in x; non-increasing in t for x >= 0.
    for (int t = 1; t <= 5; ++t) {
        double prev = failure_probability_bound(-1.0, t);
        for (double x = -0.5; x <= 5.0; x += 0.5) {
            const double cur = failure_probability_bound(x, t);
            CHECK(cur < prev);
            prev = cur;
        }
    }
    for (double x = 0.0; x <= 5.0; x += 1.0) {
        for (int t = 1; t < 5; ++t) {
            CHECK(failure_probability_bound(x, t + 1) <= failure_probability_bound(x, t) + 1e-15);
        }
    }
}

TEST_CASE("x for epsilon inverts the bound") {
    for (double eps : {0.01, 0.05, 0.25, 0.9}) {
        for (int t : {1, 2, 4}) {
            const double x = x_for_epsilon(eps, t);
            CHECK(failure_probability_bound(x, t) == doctest::Approx(eps).epsilon(1e-12));
        }
    }
    CHECK(x_for_epsilon(0.01, 2) == doctest::Approx(4.600149226776574).epsilon(1e-12));
    CHECK(x_for_epsilon(1.0 - std::exp(-1.0), 1) == doctest::Approx(0.0).scale(1.0).epsilon(1e-12));
}

TEST_CASE("expected unfilled exact") {
    CHECK(expected_unfilled_exact(5, 0, 0) == doctest::Approx(5.0));
    // Two urns, two balls, empty urns: both balls land together w.p. 1/2,
    // so each urn is empty w.p. 1/4 and the expectation is 1/2.
    CHECK(expected_unfilled_exact(2, 2, 0) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(expected_unfilled_exact(1, 3, 3) == 1.0);
    CHECK(expected_unfilled_exact(1, 4, 3) == 0.0);
    // Log-space evaluation stays finite at huge r.
    const double big = expected_unfilled_exact(100, 1'000'000, 2);
    CHECK(std::isfinite(big));
    CHECK(big >= 0.0);
    CHECK(big < 1e-300);
}

TEST_CASE("expected unfilled exact matches Monte Carlo") {
    const int n = 10, t = 1;
    const std::uint64_t r = 30;
    const std::uint64_t trials = 100'000;
    double sum = 0.0, sumsq = 0.0;
    for (std::uint64_t trial = 0; trial < trials; ++trial) {
        RandomStream s = derive_stream(31337, trial);
        int counts[10] = {};
        for (std::uint64_t d = 0; d < r; ++d) ++counts[s.next_below(n)];
        int unfilled = 0;
        for (int c : counts) unfilled += (c <= t);
        sum += unfilled;
        sumsq += static_cast<double>(unfilled) * unfilled;
    }
    const double mean = sum / static_cast<double>(trials);
    const double var = (sumsq - sum * mean) / static_cast<double>(trials - 1);
    const double stderr_mc = std::sqrt(var / static_cast<double>(trials));
    CHECK(std::abs(mean - expected_unfilled_exact(n, r, t)) <= 3.0 * stderr_mc);
}

TEST_CASE("Chernoff bound dominates the exact expectation") {
    CHECK(expected_unfilled_chernoff(10, 10, 1) == doctest::Approx(10.0));  // D(a||a) = 0
    CHECK_THROWS_AS((void)expected_unfilled_chernoff(10, 9, 1), std::invalid_argument);
    for (int n : {10, 100}) {
        for (int t : {1, 2, 3}) {
            const std::uint64_t nt = static_cast<std::uint64_t>(n) * t;
            for (std::uint64_t r = nt; r <= 8 * nt; ++r) {
                const double bound = expected_unfilled_chernoff(n, r, t);
                const double exact = expected_unfilled_exact(n, r, t);
                if (bound < exact - 1e-9) {
                    FAIL("dominance fails at n=", n, " t=", t, " r=", r);
                }
            }
        }
    }
}

TEST_CASE("Chernoff bound monotone decreasing beyond r = nt") {
    for (int n : {10, 100}) {
        for (int t : {1, 2, 3}) {
            const std::uint64_t nt = static_cast<std::uint64_t>(n) * t;
            double prev = expected_unfilled_chernoff(n, nt, t);
            for (std::uint64_t r = nt + 1; r <= 8 * nt; ++r) {
                const double cur = expected_unfilled_chernoff(n, r, t);
                CHECK(cur <= prev + 1e-12);
                prev = cur;
            }
        }
    }
}

TEST_CASE("read budget guarantees expected unfilled <= n-k") {
    // 3000 + 1000 ln2 ln2 + 3000 sqrt((2 ln2 / 3) ln 2)
    CHECK(reads_for_expected_success(1000, 500, 3) ==
          doctest::Approx(5178.309922938867).epsilon(1e-10));
    CHECK_THROWS_AS((void)reads_for_expected_success(10, 10, 1), std::invalid_argument);

    for (int n : {50, 100, 1000}) {
        for (int R10 = 1; R10 <= 9; R10 += 2) {
            const int k = n * R10 / 10;
            for (int t : {1, 2, 3, 5}) {
                const double r = reads_for_expected_success(n, k, t);
                CHECK(r >= static_cast<double>(n) * t);
                const auto rc = static_cast<std::uint64_t>(std::ceil(r));
                CHECK(expected_unfilled_exact(n, rc, t) <= static_cast<double>(n - k) + 1e-9);
            }
        }
    }

    // R -> 0+: the relative excess over nt vanishes.
    CHECK(reads_for_expected_success(100'000'000, 1, 2) ==
          doctest::Approx(2e8).epsilon(1e-3));
}

TEST_CASE("Lambert W_{-1} bracket") {
    for (double u : {0.1, 1.0, 5.0}) {
        const auto [low, high] = lambert_wm1_bracket(u);
        CHECK(high - low == doctest::Approx(u / 3.0).epsilon(1e-12));
        // Bisection oracle on y e^y = -e^{-u-1}.
        const double rhs = -std::exp(-u - 1.0);
        auto f = [&](double y) { return y * std::exp(y) - rhs; };
        // y e^y decreases on (-inf, -1], so f is positive at the low end of
        // the bracket and negative at the high end.
        CHECK(f(low) > 0.0);
        CHECK(f(high) < 0.0);
        double a = low, b = high;
        for (int i = 0; i < 200; ++i) {
            const double mid = 0.5 * (a + b);
            (f(mid) > 0.0 ? a : b) = mid;
        }
        const double root = 0.5 * (a + b);
        CHECK(root > low);
        CHECK(root < high);
        CHECK(root * std::exp(root) == doctest::Approx(rhs).epsilon(1e-9));
    }
    const auto [low1, high1] = lambert_wm1_bracket(1.0);
    CHECK(low1 == doctest::Approx(-2.0 - std::sqrt(2.0)).epsilon(1e-12));
    CHECK(high1 == doctest::Approx(-1.0 - std::sqrt(2.0) - 2.0 / 3.0).epsilon(1e-12));
}

TEST_CASE("noisy-alpha expectation") {
    const double base = rational_to_double(expected_coverage_uniform_t1(8, 4));
    CHECK(expected_coverage_noisy_alpha(8, 4, 1.0) == doctest::Approx(base).epsilon(1e-15));
    CHECK(expected_coverage_noisy_alpha(8, 4, 0.5) == doctest::Approx(2.0 * base).epsilon(1e-15));
    CHECK(expected_coverage_noisy_alpha(8, 4, 0.25) ==
          doctest::Approx(20.304761904761904).epsilon(1e-12));
    CHECK_THROWS_AS((void)expected_coverage_noisy_alpha(8, 4, 0.0), std::invalid_argument);
}

TEST_CASE("asymptotic liminf values") {
    CHECK(asymptotic_liminf_coverage(10, AsymptoticRegime::vanishing) == 10.0);
    CHECK(asymptotic_liminf_coverage(10, AsymptoticRegime::proportional) ==
          doctest::Approx(14.426950408889634).epsilon(1e-12));
    CHECK_THROWS_AS((void)asymptotic_liminf_coverage(1, AsymptoticRegime::vanishing),
                    std::invalid_argument);
}

TEST_CASE("rate-held ratio approaches k from above as R shrinks") {
    const int k = 10;
    double prev_ratio = 1e9;
    for (double R : {0.1, 0.01}) {
        const int n = static_cast<int>(k / R);
        const double ratio = rational_to_double(expected_coverage_uniform_t1(n, k)) / k;
        CHECK(ratio > 1.0);
        CHECK(ratio < prev_ratio);
        prev_ratio = ratio;
    }
    CHECK(prev_ratio < 1.01);
}
