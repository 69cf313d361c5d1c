#include "covdepth/sim.hpp"

#include <cmath>
#include <mutex>
#include <thread>
#include <vector>

namespace covdepth {

Estimate make_estimate(std::span<const double> samples, std::uint64_t master_seed) {
    const std::uint64_t trials = samples.size();
    if (trials < 2) throw std::invalid_argument("make_estimate: need at least 2 trials");
    Estimate e;
    e.trials = trials;
    e.master_seed = master_seed;
    e.mean = pairwise_sum(samples) / static_cast<double>(trials);

    std::vector<double> sq(samples.size());
    for (std::size_t i = 0; i < samples.size(); ++i) {
        const double d = samples[i] - e.mean;
        sq[i] = d * d;
    }
    const double var = pairwise_sum(sq) / static_cast<double>(trials - 1);
    e.std_error = std::sqrt(var / static_cast<double>(trials));
    e.ci95_low = e.mean - kZ95 * e.std_error;
    e.ci95_high = e.mean + kZ95 * e.std_error;
    return e;
}

TailEstimate make_tail_estimate(std::uint64_t exceed_count, std::uint64_t trials,
                                std::uint64_t master_seed) {
    if (trials == 0) throw std::invalid_argument("make_tail_estimate: need trials >= 1");
    TailEstimate t;
    t.trials = trials;
    t.master_seed = master_seed;
    const double nt = static_cast<double>(trials);
    t.p_hat = static_cast<double>(exceed_count) / nt;
    const double z2 = kZ95 * kZ95;
    const double denom = 1.0 + z2 / nt;
    const double center = (t.p_hat + z2 / (2.0 * nt)) / denom;
    const double half =
        kZ95 * std::sqrt(t.p_hat * (1.0 - t.p_hat) / nt + z2 / (4.0 * nt * nt)) / denom;
    t.wilson_low = center - half;
    t.wilson_high = center + half;
    return t;
}

}  // namespace covdepth

namespace covdepth::sim {

namespace {

// Per-thread scratch so a trial costs no allocations after warm-up.
thread_local std::vector<std::uint16_t> t_counts;

template <typename Step>
std::uint64_t run_until(std::uint64_t cap, Step step) {
    std::uint64_t draws = 0;
    while (true) {
        if (draws >= cap) {
            if (cap == kDrawCap)
                throw DrawCapError("trial exceeded the 1e9 draw cap; configuration degenerate");
            return cap + 1;
        }
        ++draws;
        if (step()) return draws;
    }
}

std::uint64_t coverage_core(const ChannelDistribution& dist, int k, int t, RandomStream& stream,
                            std::uint64_t cap) {
    const auto n = dist.size();
    if (k < 1 || static_cast<std::uint32_t>(k) > n)
        throw std::invalid_argument("simulate_coverage_trial: need 1 <= k <= n");
    if (t < 1 || t > 0xFFFF) throw std::invalid_argument("simulate_coverage_trial: bad t");
    t_counts.assign(n, 0);
    int filled = 0;
    const auto target = static_cast<std::uint16_t>(t);
    return run_until(cap, [&] {
        const std::uint32_t i = dist.sample(stream);
        if (t_counts[i] < target && ++t_counts[i] == target) ++filled;
        return filled >= k;
    });
}

std::uint64_t noisy_alpha_core(int n, int k, double alpha, RandomStream& stream,
                               std::uint64_t cap) {
    if (n < 1 || k < 1 || k > n)
        throw std::invalid_argument("simulate_noisy_alpha_trial: need 1 <= k <= n");
    if (!(alpha > 0.0 && alpha <= 1.0))
        throw std::invalid_argument("simulate_noisy_alpha_trial: need 0 < alpha <= 1");
    t_counts.assign(n, 0);
    int clean_distinct = 0;
    return run_until(cap, [&] {
        const std::uint32_t i = stream.next_below(static_cast<std::uint32_t>(n));
        const bool clean = stream.next_bernoulli(alpha);
        if (clean && t_counts[i] == 0) {
            t_counts[i] = 1;
            ++clean_distinct;
        }
        return clean_distinct >= k;
    });
}

// Static chunking over trial indices; chunk boundaries do not affect results
// because each trial's stream depends only on its index.
template <typename PerTrial>
void run_trials(std::uint64_t trials, std::uint64_t master_seed, unsigned threads,
                PerTrial per_trial) {
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, trials));
    if (threads <= 1) {
        for (std::uint64_t i = 0; i < trials; ++i) {
            RandomStream stream = derive_stream(master_seed, i);
            per_trial(i, stream);
        }
        return;
    }
    std::exception_ptr error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned w = 0; w < threads; ++w) {
        pool.emplace_back([&, w] {
            try {
                for (std::uint64_t i = w; i < trials; i += threads) {
                    RandomStream stream = derive_stream(master_seed, i);
                    per_trial(i, stream);
                }
            } catch (...) {
                const std::lock_guard lock(error_mutex);
                if (!error) error = std::current_exception();
            }
        });
    }
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
}

}  // namespace

TrialOutcome simulate_coverage_trial(const ChannelDistribution& dist, int k, int t,
                                     RandomStream& stream) {
    return TrialOutcome{coverage_core(dist, k, t, stream, kDrawCap)};
}

std::uint64_t simulate_coverage_trial_capped(const ChannelDistribution& dist, int k, int t,
                                             RandomStream& stream, std::uint64_t cap) {
    return coverage_core(dist, k, t, stream, cap);
}

TrialOutcome simulate_noisy_alpha_trial(int n, int k, double alpha, RandomStream& stream) {
    return TrialOutcome{noisy_alpha_core(n, k, alpha, stream, kDrawCap)};
}

std::uint64_t simulate_noisy_alpha_trial_capped(int n, int k, double alpha, RandomStream& stream,
                                                std::uint64_t cap) {
    return noisy_alpha_core(n, k, alpha, stream, cap);
}

Estimate estimate_expectation(const std::function<double(RandomStream&)>& trial,
                              std::uint64_t trials, std::uint64_t master_seed, unsigned threads) {
    if (trials < 2) throw std::invalid_argument("estimate_expectation: need trials >= 2");
    std::vector<double> outcomes(trials);
    run_trials(trials, master_seed, threads,
               [&](std::uint64_t i, RandomStream& stream) { outcomes[i] = trial(stream); });
    return make_estimate(outcomes, master_seed);
}

TailEstimate estimate_tail(const std::function<std::uint64_t(RandomStream&, std::uint64_t)>& trial,
                           std::uint64_t m, std::uint64_t trials, std::uint64_t master_seed,
                           unsigned threads) {
    if (trials < 100) throw std::invalid_argument("estimate_tail: need trials >= 100");
    std::vector<std::uint8_t> exceeded(trials, 0);
    run_trials(trials, master_seed, threads, [&](std::uint64_t i, RandomStream& stream) {
        exceeded[i] = trial(stream, m) > m ? 1 : 0;
    });
    std::uint64_t count = 0;
    for (std::uint8_t e : exceeded) count += e;
    return make_tail_estimate(count, trials, master_seed);
}

}  // namespace covdepth::sim
