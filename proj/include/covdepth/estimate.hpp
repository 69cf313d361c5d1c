#pragma once

#include <cstdint>
#include <span>

namespace covdepth {

// Monte Carlo point estimate. ci95 = mean +/- 1.96 * std_error, with
// std_error = sample stddev / sqrt(trials).
struct Estimate {
    double mean = 0.0;
    double std_error = 0.0;
    double ci95_low = 0.0;
    double ci95_high = 0.0;
    std::uint64_t trials = 0;
    std::uint64_t master_seed = 0;
};

// Tail-probability estimate with a Wilson 95% interval (Wald misbehaves in
// the small-p regime the concentration checks live in).
struct TailEstimate {
    double p_hat = 0.0;
    double wilson_low = 0.0;
    double wilson_high = 0.0;
    std::uint64_t trials = 0;
    std::uint64_t master_seed = 0;

    double halfwidth() const { return (wilson_high - wilson_low) / 2.0; }
};

inline constexpr double kZ95 = 1.96;

// Pairwise (tree) sum keyed by index: deterministic regardless of how trials
// were scheduled across threads.
inline double pairwise_sum(std::span<const double> v) {
    if (v.size() <= 8) {
        double s = 0.0;
        for (double x : v) s += x;
        return s;
    }
    const std::size_t half = v.size() / 2;
    return pairwise_sum(v.first(half)) + pairwise_sum(v.subspan(half));
}

Estimate make_estimate(std::span<const double> samples, std::uint64_t master_seed);
TailEstimate make_tail_estimate(std::uint64_t exceed_count, std::uint64_t trials,
                                std::uint64_t master_seed);

}  // namespace covdepth
