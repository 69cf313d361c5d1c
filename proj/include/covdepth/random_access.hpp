#pragma once

#include <cstdint>
#include <vector>

#include "covdepth/codes.hpp"
#include "covdepth/random.hpp"
#include "covdepth/rational.hpp"
#include "covdepth/sim.hpp"

namespace covdepth::ra {

// Exact enumeration cap: 2^24 subsets.
inline constexpr int kExactEnumerationMaxN = 24;

// E[uniform draws until the set of distinct drawn strands is decodable],
// exact. Sums, over every non-decodable subset S, the inclusion-exclusion
// weight sum_{m=0}^{|S|} (-1)^m C(|S|,m) n/(n-|S|+m); the weight depends on
// |S| only, so non-decodable subsets are counted per size over the closed
// lattice. Requires n <= 24 and a family that decodes at [n].
Rational expected_draws_until_family(int n, const DecodableFamily& family);

// Same expectation for information index `info_index` of a code, without
// materializing MDS retrieval families.
Rational expected_draws_for_code_index(const CodeSpec& code, int info_index);

// No code: a geometric wait for one specific strand.
// E = n, P[draws > r] = (1 - 1/n)^r.
Rational expectation_no_code(int n);
Rational tail_no_code(int n, std::uint64_t r);

// E[max over a rho-subset of per-strand first-arrival times] = n H_rho.
Rational expected_max_over_subset(int n, int rho);

// Mutually disjoint retrieval sets of the given sizes:
// n * sum_{s=1}^{v} (-1)^{s+1} sum_{j1<...<js} H_{size_{j1}+...+size_{js}}.
Rational expectation_disjoint_family(int n, const std::vector<int>& sizes);

// Systematic MDS single-index expectation: k. The identity is usually
// quoted under k > n/2; outside that regime the value is still returned,
// flagged (enumeration confirms it holds on both sides for n <= 24).
struct SystematicMdsExpectation {
    Rational value;
    bool within_stated_regime;
};
SystematicMdsExpectation expectation_systematic_mds(int n, int k);

// Worst information index: max_i E[draws for index i].
Rational t_max(const CodeSpec& code);

// Universal lower bound (k+1)/2 on t_max.
Rational t_max_lower_bound(int k);

// k = n with a unique smallest retrieval set of size rho_max: n H_{rho_max}.
Rational expectation_k_equals_n(int n, int rho_max);

// Uniform draws until the distinct-drawn set contains one of `minimal_sets`.
// Reusable across trials; run() is safe to call concurrently.
class RandomAccessSimulator {
  public:
    RandomAccessSimulator(int n, std::vector<StrandSet> minimal_sets);
    static RandomAccessSimulator for_code_index(const CodeSpec& code, int info_index);

    std::uint64_t run(RandomStream& stream) const;
    std::uint64_t run_capped(RandomStream& stream, std::uint64_t cap) const;

  private:
    enum class Mode { wait_for_strand, distinct_threshold, strand_or_threshold, minimal_sets };
    RandomAccessSimulator() = default;

    Mode mode_ = Mode::minimal_sets;
    int n_ = 0;
    int k_ = 0;           // threshold modes
    int strand_ = 0;      // wait modes
    std::vector<StrandSet> minimal_sets_;
    std::vector<std::vector<std::uint32_t>> sets_containing_;  // per strand
    std::vector<std::uint16_t> initial_remaining_;
};

sim::TrialOutcome simulate_random_access_trial(int n, const std::vector<StrandSet>& minimal_sets,
                                               RandomStream& stream);

}  // namespace covdepth::ra
