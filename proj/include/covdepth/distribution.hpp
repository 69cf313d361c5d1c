#pragma once

#include <cstdint>
#include <vector>

#include "covdepth/random.hpp"

namespace covdepth {

// The per-strand read probability vector p = (p_1, ..., p_n).
//
// Construction validates (every entry positive, entries within 1e-6 of
// summing to 1) and renormalizes so the stored vector sums to 1 within 1e-12.
// Entries below 1e-15 are rejected: the model assumes p_i > 0 everywhere.
// Immutable after construction and safe to share across threads; the uniform
// distribution samples by a direct integer draw, everything else through a
// Vose alias table built once here.
class ChannelDistribution {
  public:
    explicit ChannelDistribution(std::vector<double> probs);

    static ChannelDistribution uniform(std::uint32_t n);

    std::uint32_t size() const { return static_cast<std::uint32_t>(probs_.size()); }
    const std::vector<double>& probs() const { return probs_; }
    bool is_uniform() const { return uniform_; }

    // Index in [0, n) drawn with probability probs()[i]. O(1) per draw.
    std::uint32_t sample(RandomStream& stream) const {
        const auto n = size();
        if (uniform_) return stream.next_below(n);
        const std::uint32_t slot = stream.next_below(n);
        return stream.next_unit() < accept_[slot] ? slot : alias_[slot];
    }

  private:
    ChannelDistribution() = default;
    void build_alias_table();

    std::vector<double> probs_;
    bool uniform_ = false;
    std::vector<double> accept_;
    std::vector<std::uint32_t> alias_;
};

inline std::uint32_t sample_index(const ChannelDistribution& dist, RandomStream& stream) {
    return dist.sample(stream);
}

}  // namespace covdepth
