#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>

#include "covdepth/distribution.hpp"
#include "covdepth/estimate.hpp"
#include "covdepth/random.hpp"

namespace covdepth::sim {

// Reads consumed until the trial's stopping family was reached.
struct TrialOutcome {
    std::uint64_t draws = 0;
};

// Termination is almost sure; the cap turns a degenerate configuration into
// an error instead of a hang.
inline constexpr std::uint64_t kDrawCap = 1'000'000'000;

struct DrawCapError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Sequential reads from `dist` until at least k distinct strands have each
// been drawn >= t times.
TrialOutcome simulate_coverage_trial(const ChannelDistribution& dist, int k, int t,
                                     RandomStream& stream);

// Same stopping rule, but stop consuming once `cap` draws are exceeded;
// returns cap+1 in that case. Tail estimation only needs the exceed bit.
std::uint64_t simulate_coverage_trial_capped(const ChannelDistribution& dist, int k, int t,
                                             RandomStream& stream, std::uint64_t cap);

// Uniform reads, each independently clean with probability alpha; stop when
// k distinct strands have one clean read each.
TrialOutcome simulate_noisy_alpha_trial(int n, int k, double alpha, RandomStream& stream);

std::uint64_t simulate_noisy_alpha_trial_capped(int n, int k, double alpha, RandomStream& stream,
                                                std::uint64_t cap);

// Runs `trials` independent trials on streams derived from (master_seed,
// trial index) and aggregates with an index-keyed pairwise sum: the result is
// bit-identical for any thread count, including one. threads = 0 picks the
// hardware default. The trial callable must be safe to invoke concurrently.
Estimate estimate_expectation(const std::function<double(RandomStream&)>& trial,
                              std::uint64_t trials, std::uint64_t master_seed,
                              unsigned threads = 0);

// Estimates P[outcome > m] with a Wilson 95% interval. The trial callable
// receives the cap m and must return a value > m iff the uncapped trial
// would have exceeded m.
TailEstimate estimate_tail(const std::function<std::uint64_t(RandomStream&, std::uint64_t)>& trial,
                           std::uint64_t m, std::uint64_t trials, std::uint64_t master_seed,
                           unsigned threads = 0);

}  // namespace covdepth::sim
