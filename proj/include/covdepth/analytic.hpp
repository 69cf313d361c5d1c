#pragma once

#include <cstdint>
#include <stdexcept>

#include "covdepth/distribution.hpp"
#include "covdepth/rational.hpp"

namespace covdepth::analytic {

// Full-information coverage depth: reads needed until k distinct strands out
// of n have each been seen at least t times, uniform channel unless stated.

// E[draws] for t = 1, uniform channel, as the exact rational
// sum_{i=0}^{k-1} n/(n-i) = n (H_n - H_{n-k}). Requires 1 <= k <= n.
Rational expected_coverage_uniform_t1(int n, int k);

// Read-count threshold r_x = n ln(n/(n-k)) + n t ln(ln n) + 2 n ln(t+1) + n x.
// Natural logarithms throughout. Requires n >= 3 and 1 <= k < n.
double rx_threshold(int n, int k, int t, double x);

// 1 - exp(-e^{-x} / (t-1)!) -- the large-n bound on P[draws > r_x] when each
// strand needs t+1 reads. Requires t >= 1.
double failure_probability_bound(double x, int t);

// The x with failure_probability_bound(x, t) == eps:
// x = -ln((t-1)! ln(1/(1-eps))). Requires 0 < eps < 1, t >= 1.
double x_for_epsilon(double eps, int t);

// E[number of strands with at most t reads after r uniform draws]
//   = n sum_{j=0}^{t} C(r,j) n^{-j} (1 - 1/n)^{r-j},
// evaluated in log space so r ~ 1e6 stays finite.
double expected_unfilled_exact(int n, std::uint64_t r, int t);

// Chernoff upper bound on the same quantity for r >= n*t:
// n * 2^{-r D(t/r || 1/n)} with D the base-2 Kullback-Leibler divergence.
double expected_unfilled_chernoff(int n, std::uint64_t r, int t);

// Smallest read budget guaranteed (via the Lambert W_{-1} bracket) to drive
// the expected number of under-read strands to at most n-k:
//   r = nt - n ln2 ln(1-R) + nt sqrt(-(2 ln2 / t) ln(1-R)),   R = k/n.
// Requires 1 <= k < n, t >= 1.
double reads_for_expected_success(int n, int k, int t);

// Open interval known to contain W_{-1}(-e^{-u-1}) for u > 0:
// (-1 - sqrt(2u) - u,  -1 - sqrt(2u) - 2u/3). Width is exactly u/3.
struct Wm1Bracket {
    double low;
    double high;
};
Wm1Bracket lambert_wm1_bracket(double u);

// E[draws] when each uniform read is independently clean with probability
// alpha and k distinct strands need one clean read each:
// (n / alpha) (H_n - H_{n-k}).
double expected_coverage_noisy_alpha(int n, int k, double alpha);

// liminf over n of E[draws] at t = 1: k*log2(e) when k/n is held at a
// positive constant, k when k/n vanishes. Requires k >= 2.
enum class AsymptoticRegime { proportional, vanishing };
double asymptotic_liminf_coverage(int k, AsymptoticRegime regime);

// --- General-distribution expectation (any channel, any t) ---

struct QuadratureError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class QuadratureMode {
    adaptive,        // adaptive Gauss-Kronrod 7/15 on [0, v_max]
    gauss_laguerre,  // fixed-order scaled Gauss-Laguerre rule (cross-check)
};

struct QuadratureOptions {
    QuadratureMode mode = QuadratureMode::adaptive;
    double rel_tol = 1e-9;
    double abs_tol = 1e-12;
    int max_segments = 20000;
    int laguerre_points = 96;
};

// E[draws until k distinct strands each seen >= t times] under `dist`.
// Poissonized integral: each factor is the Poisson(p_i v) lower CDF at t-1,
// folded into a degree-capped occupancy polynomial; the integrand is
// P[fewer than k strands filled at Poisson time v], integrated to a v_max
// whose exact residual tail bound is below 1e-10.
// Throws QuadratureError when the segment budget is exhausted.
double expected_coverage_general(const ChannelDistribution& dist, int k, int t,
                                 const QuadratureOptions& opts = {});

}  // namespace covdepth::analytic
