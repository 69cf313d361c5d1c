#pragma once

#include <cstdint>

namespace covdepth {

// Deterministic per-trial random stream (xoshiro256** core).
//
// Streams are derived counter-style from (master_seed, trial_index) so that
// serial and parallel runs consume identical randomness per trial. All draw
// primitives are pure integer/IEEE arithmetic and produce bit-identical
// sequences on every platform. Streams are cheap to create and single-owner;
// make one per trial.
class RandomStream {
  public:
    RandomStream(std::uint64_t master_seed, std::uint64_t trial_index) {
        // SplitMix64 walk from a per-trial seed; the golden-ratio multiply is
        // a bijection in trial_index, so distinct trials never collide.
        std::uint64_t x = master_seed ^ (0x9E3779B97F4A7C15ULL * (trial_index + 1));
        for (auto& word : state_) word = splitmix64(x);
        if ((state_[0] | state_[1] | state_[2] | state_[3]) == 0) state_[0] = 1;
    }

    std::uint64_t next_u64() {
        const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    // Unbiased integer in [0, n) via Lemire's widening-multiply rejection.
    std::uint32_t next_below(std::uint32_t n) {
        std::uint64_t x = next_u64();
        __uint128_t m = static_cast<__uint128_t>(x) * n;
        auto low = static_cast<std::uint64_t>(m);
        if (low < n) {
            const std::uint64_t threshold = (0 - static_cast<std::uint64_t>(n)) % n;
            while (low < threshold) {
                x = next_u64();
                m = static_cast<__uint128_t>(x) * n;
                low = static_cast<std::uint64_t>(m);
            }
        }
        return static_cast<std::uint32_t>(m >> 64);
    }

    // Uniform double in [0, 1), 53 random bits.
    double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    bool next_bernoulli(double p) { return next_unit() < p; }

  private:
    static std::uint64_t splitmix64(std::uint64_t& x) {
        std::uint64_t z = (x += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }
    static std::uint64_t rotl(std::uint64_t v, int s) { return (v << s) | (v >> (64 - s)); }

    std::uint64_t state_[4];
};

inline RandomStream derive_stream(std::uint64_t master_seed, std::uint64_t trial_index) {
    return RandomStream(master_seed, trial_index);
}

}  // namespace covdepth
