#include <algorithm>
#include <cmath>
#include <queue>
#include <vector>

#include "covdepth/analytic.hpp"
#include "covdepth/kernels.hpp"
#include "covdepth/special.hpp"

namespace covdepth::analytic {

namespace {

// P[fewer than k strands have >= t reads at Poisson time v]. Factors are the
// Poisson lower CDFs g_i = P[Pois(p_i v) <= t-1]; folding them into the
// occupancy polynomial keeps every intermediate in [0, 1]. Coefficients at or
// above k never feed back into lower ones, so the window is capped at k.
class CoverageIntegrand {
  public:
    CoverageIntegrand(const ChannelDistribution& dist, int k, int t)
        : probs_(dist.probs()), k_(k), t_(t), coef_(static_cast<std::size_t>(k)) {}

    double operator()(double v) {
        const auto& kern = kernels::active_table();
        std::fill(coef_.begin(), coef_.end(), 0.0);
        coef_[0] = 1.0;
        for (double p : probs_) {
            kern.pgf_fold_factor(coef_.data(), coef_.size(), poisson_cdf_lower(t_ - 1, p * v));
        }
        double sum = 0.0;
        for (double c : coef_) sum += c;
        return sum;
    }

    // Exact bound on the neglected tail integral(v..inf) of the integrand:
    // P[<k filled] <= sum_i g_i / (n-k+1) by Markov, and
    // integral(v..inf) of P[Pois(p s) <= j] ds = P[Pois(p v) <= j] / p summed
    // over j < t.
    double tail_integral_bound(double v) const {
        double total = 0.0;
        for (double p : probs_) {
            double inner = 0.0;
            for (int j = 0; j < t_; ++j) inner += poisson_cdf_lower(j, p * v);
            total += inner / p;
        }
        const int slack = static_cast<int>(probs_.size()) - k_ + 1;
        return total / std::max(1, slack);
    }

  private:
    const std::vector<double>& probs_;
    int k_;
    int t_;
    std::vector<double> coef_;
};

// Gauss-Kronrod 7/15 on [-1, 1]; odd-index abscissae carry the embedded
// 7-point Gauss rule.
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000,
};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714,
};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
};

struct Segment {
    double a, b, integral, error;
    bool operator<(const Segment& o) const { return error < o.error; }
};

template <typename F>
Segment gk15(F& f, double a, double b) {
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const double fc = f(center);
    double resk = kWgk[7] * fc;
    double resg = kWg[3] * fc;
    for (int i = 0; i < 7; ++i) {
        const double dx = half * kXgk[i];
        const double fsum = f(center - dx) + f(center + dx);
        resk += kWgk[i] * fsum;
        if (i % 2 == 1) resg += kWg[i / 2] * fsum;
    }
    return Segment{a, b, resk * half, std::abs((resk - resg) * half)};
}

template <typename F>
double adaptive_gk(F& f, double a, double b, const QuadratureOptions& opts) {
    // Seed with dyadic panels so nodes land at every scale of [a, b]; the
    // integrand's transition region can sit orders of magnitude below b.
    std::priority_queue<Segment> heap;
    double total = 0.0;
    double total_err = 0.0;
    int segments = 0;
    double lo = a;
    double hi = std::min(b, 1.0);
    while (lo < b) {
        const Segment seg = gk15(f, lo, hi);
        total += seg.integral;
        total_err += seg.error;
        heap.push(seg);
        ++segments;
        lo = hi;
        hi = std::min(b, hi * 2.0);
    }
    while (total_err > std::max(opts.abs_tol, opts.rel_tol * std::abs(total))) {
        if (segments >= opts.max_segments)
            throw QuadratureError(
                "expected_coverage_general: segment budget exhausted before convergence");
        const Segment worst = heap.top();
        heap.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        const Segment left = gk15(f, worst.a, mid);
        const Segment right = gk15(f, mid, worst.b);
        total += left.integral + right.integral - worst.integral;
        total_err += left.error + right.error - worst.error;
        heap.push(left);
        heap.push(right);
        ++segments;
    }
    return total;
}

// Nodes and weights of the N-point Gauss-Laguerre rule (weight e^{-x}),
// Newton iteration on the Laguerre recurrence. Returns modified weights
// w_i * e^{x_i} suitable for integrating plain functions on [0, inf).
void gauss_laguerre_modified(int n, std::vector<double>& x, std::vector<double>& wmod) {
    x.resize(n);
    wmod.resize(n);
    double z = 0.0;
    for (int i = 0; i < n; ++i) {
        if (i == 0) {
            z = 3.0 / (1.0 + 2.4 * n);
        } else if (i == 1) {
            z += 15.0 / (1.0 + 2.5 * n);
        } else {
            const double ai = i - 1;
            z += ((1.0 + 2.55 * ai) / (1.9 * ai)) * (z - x[i - 2]);
        }
        double pp = 0.0;
        for (int iter = 0; iter < 200; ++iter) {
            double p1 = 1.0, p2 = 0.0;
            for (int j = 1; j <= n; ++j) {
                const double p3 = p2;
                p2 = p1;
                p1 = ((2.0 * j - 1.0 - z) * p2 - (j - 1.0) * p3) / j;
            }
            pp = n * (p1 - p2) / z;
            const double z1 = z;
            z = z1 - p1 / pp;
            if (std::abs(z - z1) <= 1e-14 * std::abs(z)) break;
        }
        x[i] = z;
        // w = 1/(x * pp^2) for the e^{-x} weight; fold in e^{x} via logs.
        wmod[i] = std::exp(z - std::log(z) - 2.0 * std::log(std::abs(pp)));
    }
}

}  // namespace

double expected_coverage_general(const ChannelDistribution& dist, int k, int t,
                                 const QuadratureOptions& opts) {
    const int n = static_cast<int>(dist.size());
    if (k < 1 || k > n)
        throw std::invalid_argument("expected_coverage_general: need 1 <= k <= n");
    if (t < 1) throw std::invalid_argument("expected_coverage_general: need t >= 1");

    CoverageIntegrand f(dist, k, t);

    double v_max = 1.0;
    int doublings = 0;
    while (f.tail_integral_bound(v_max) > 1e-10) {
        v_max *= 2.0;
        if (++doublings > 200)
            throw QuadratureError("expected_coverage_general: could not bound the tail");
    }

    if (opts.mode == QuadratureMode::gauss_laguerre) {
        std::vector<double> x, w;
        gauss_laguerre_modified(opts.laguerre_points, x, w);
        const double scale = v_max / x.back();
        double sum = 0.0;
        for (int i = opts.laguerre_points - 1; i >= 0; --i) {
            sum += w[i] * f(scale * x[i]);
        }
        return scale * sum;
    }
    return adaptive_gk(f, 0.0, v_max, opts);
}

}  // namespace covdepth::analytic
