#include "covdepth/distribution.hpp"

#include <cmath>
#include <stdexcept>

namespace covdepth {

ChannelDistribution::ChannelDistribution(std::vector<double> probs) : probs_(std::move(probs)) {
    if (probs_.empty()) throw std::invalid_argument("ChannelDistribution: need at least one strand");
    double sum = 0.0;
    for (double p : probs_) {
        if (!(p > 0.0) || !std::isfinite(p))
            throw std::invalid_argument("ChannelDistribution: every probability must be positive");
        sum += p;
    }
    if (std::abs(sum - 1.0) > 1e-6)
        throw std::invalid_argument("ChannelDistribution: probabilities must sum to 1 within 1e-6");
    for (double& p : probs_) {
        p /= sum;
        if (p < 1e-15)
            throw std::invalid_argument("ChannelDistribution: entry below 1e-15 rejected");
    }

    uniform_ = true;
    for (double p : probs_) {
        if (p != probs_[0]) {
            uniform_ = false;
            break;
        }
    }
    if (!uniform_) build_alias_table();
}

ChannelDistribution ChannelDistribution::uniform(std::uint32_t n) {
    if (n == 0) throw std::invalid_argument("ChannelDistribution: need at least one strand");
    ChannelDistribution d;
    d.probs_.assign(n, 1.0 / n);
    d.uniform_ = true;
    return d;
}

void ChannelDistribution::build_alias_table() {
    const std::uint32_t n = size();
    accept_.assign(n, 1.0);
    alias_.assign(n, 0);

    std::vector<double> scaled(n);
    for (std::uint32_t i = 0; i < n; ++i) scaled[i] = probs_[i] * n;

    std::vector<std::uint32_t> small, large;
    small.reserve(n);
    large.reserve(n);
    for (std::uint32_t i = 0; i < n; ++i) {
        (scaled[i] < 1.0 ? small : large).push_back(i);
    }
    while (!small.empty() && !large.empty()) {
        const std::uint32_t s = small.back();
        small.pop_back();
        const std::uint32_t l = large.back();
        accept_[s] = scaled[s];
        alias_[s] = l;
        scaled[l] -= 1.0 - scaled[s];
        if (scaled[l] < 1.0) {
            large.pop_back();
            small.push_back(l);
        }
    }
    // Leftovers are exactly 1 up to rounding.
    for (std::uint32_t i : small) accept_[i] = 1.0;
    for (std::uint32_t i : large) accept_[i] = 1.0;
}

}  // namespace covdepth
