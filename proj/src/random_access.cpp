#include "covdepth/random_access.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

#include "covdepth/harmonic.hpp"
#include "covdepth/kernels.hpp"

namespace covdepth::ra {

namespace {

struct SubsetBitset {
    int n;
    std::vector<std::uint64_t> words;

    explicit SubsetBitset(int n_strands) : n(n_strands) {
        if (n < 1 || n > kExactEnumerationMaxN)
            throw ExactCapError("exact enumeration requires 1 <= n <= 24");
        const std::size_t total = std::size_t{1} << n;
        words.assign(std::max<std::size_t>(1, total / 64), 0);
        if (n < 6) {
            // Pad bits beyond 2^n as set so they never count as non-decodable.
            words[0] = ~((std::uint64_t{1} << total) - 1);
        }
    }

    void set(std::size_t s) { words[s >> 6] |= std::uint64_t{1} << (s & 63); }
    bool test(std::size_t s) const { return (words[s >> 6] >> (s & 63)) & 1; }

    void superset_closure() {
        const auto& kern = kernels::active_table();
        for (int b = 0; b < n; ++b) {
            kern.superset_or_pass(words.data(), words.size(), static_cast<unsigned>(b));
        }
    }

    // counts[s] = number of cleared (non-decodable) subsets of size s.
    std::vector<std::uint64_t> zero_counts_by_size() const {
        std::vector<std::uint64_t> hist(static_cast<std::size_t>(n) + 7, 0);
        kernels::active_table().zero_size_histogram(words.data(), words.size(), hist.data());
        hist.resize(static_cast<std::size_t>(n) + 1);
        return hist;
    }
};

// sum_{m=0}^{s} (-1)^m C(s,m) n/(n-s+m): the expected-draw mass contributed
// by each non-decodable subset of size s.
Rational subset_weight(int n, int s) {
    Rational w(0);
    for (int m = 0; m <= s; ++m) {
        Rational term(binomial_exact(s, m) * n, BigInt(n - s + m));
        term.canonicalize();
        if (m % 2 == 0)
            w += term;
        else
            w -= term;
    }
    return w;
}

Rational expectation_from_bitset(const SubsetBitset& dec) {
    const int n = dec.n;
    if (!dec.test((std::size_t{1} << n) - 1))
        throw std::invalid_argument("family is not decodable at the full strand set");
    const auto counts = dec.zero_counts_by_size();
    Rational e(0);
    for (int s = 0; s <= n; ++s) {
        if (counts[s] == 0) continue;
        e += Rational(BigInt(counts[s])) * subset_weight(n, s);
    }
    return e;
}

Rational expectation_from_minimal_sets(int n, const std::vector<StrandSet>& minimal_sets) {
    SubsetBitset dec(n);
    for (StrandSet m : minimal_sets) dec.set(static_cast<std::size_t>(m));
    dec.superset_closure();
    return expectation_from_bitset(dec);
}

void check_rho(int n, int rho, const char* who) {
    if (n < 1) throw std::invalid_argument(std::string(who) + ": need n >= 1");
    if (rho < 1 || rho > n) throw std::invalid_argument(std::string(who) + ": need 1 <= rho <= n");
}

}  // namespace

Rational expected_draws_until_family(int n, const DecodableFamily& family) {
    if (family.n != n) throw std::invalid_argument("expected_draws_until_family: n mismatch");
    return expectation_from_minimal_sets(n, family.minimal_sets);
}

Rational expected_draws_for_code_index(const CodeSpec& code, int info_index) {
    if (info_index < 0 || info_index >= code.k)
        throw std::invalid_argument("expected_draws_for_code_index: index out of range");
    const int n = code.n;
    switch (code.kind) {
        case CodeKind::Uncoded:
            return expectation_from_minimal_sets(n, {StrandSet{1} << info_index});
        case CodeKind::MdsSystematic:
        case CodeKind::MdsNonSystematic: {
            // Decodability is a predicate on (membership of i, subset size);
            // fill the lattice directly instead of materializing C(n,k) sets.
            SubsetBitset dec(n);
            const std::size_t total = std::size_t{1} << n;
            const bool systematic = code.kind == CodeKind::MdsSystematic;
            const std::uint64_t own = std::uint64_t{1} << info_index;
            for (std::size_t s = 0; s < total; ++s) {
                const bool ok = std::popcount(s) >= code.k || (systematic && (s & own));
                if (ok) dec.set(s);
            }
            return expectation_from_bitset(dec);
        }
        case CodeKind::XorLinear:
        case CodeKind::ExplicitRetrieval:
            return expectation_from_minimal_sets(n, minimal_retrieval_sets(code, info_index));
    }
    throw std::logic_error("expected_draws_for_code_index: unknown code kind");
}

Rational expectation_no_code(int n) {
    if (n < 1) throw std::invalid_argument("expectation_no_code: need n >= 1");
    return Rational(n);
}

Rational tail_no_code(int n, std::uint64_t r) {
    if (n < 1) throw std::invalid_argument("tail_no_code: need n >= 1");
    BigInt num, den;
    mpz_ui_pow_ui(num.get_mpz_t(), static_cast<unsigned long>(n - 1), r);
    mpz_ui_pow_ui(den.get_mpz_t(), static_cast<unsigned long>(n), r);
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Rational expected_max_over_subset(int n, int rho) {
    check_rho(n, rho, "expected_max_over_subset");
    return Rational(n) * harmonic_exact(static_cast<std::uint32_t>(rho));
}

Rational expectation_disjoint_family(int n, const std::vector<int>& sizes) {
    if (sizes.empty()) throw std::invalid_argument("expectation_disjoint_family: no sets");
    if (sizes.size() > 20)
        throw std::invalid_argument("expectation_disjoint_family: too many sets");
    long total = 0;
    for (int s : sizes) {
        if (s < 1) throw std::invalid_argument("expectation_disjoint_family: sizes must be >= 1");
        total += s;
    }
    if (total > n)
        throw std::invalid_argument("expectation_disjoint_family: sizes exceed n strands");

    const auto h = harmonic_prefix(static_cast<std::uint32_t>(total));
    const int v = static_cast<int>(sizes.size());
    Rational sum(0);
    for (std::uint32_t mask = 1; mask < (1u << v); ++mask) {
        int merged = 0;
        for (int j = 0; j < v; ++j)
            if (mask >> j & 1) merged += sizes[j];
        if (std::popcount(mask) % 2 == 1)
            sum += h[merged];
        else
            sum -= h[merged];
    }
    return Rational(n) * sum;
}

SystematicMdsExpectation expectation_systematic_mds(int n, int k) {
    if (n < 1 || k < 1 || k > n)
        throw std::invalid_argument("expectation_systematic_mds: need 1 <= k <= n");
    return SystematicMdsExpectation{Rational(k), 2 * k > n};
}

Rational t_max(const CodeSpec& code) {
    switch (code.kind) {
        case CodeKind::Uncoded:
        case CodeKind::MdsNonSystematic:
            // Every index sees the same family.
            return expected_draws_for_code_index(code, 0);
        default: {
            Rational best(0);
            for (int i = 0; i < code.k; ++i) {
                best = std::max(best, expected_draws_for_code_index(code, i));
            }
            return best;
        }
    }
}

Rational t_max_lower_bound(int k) {
    if (k < 1) throw std::invalid_argument("t_max_lower_bound: need k >= 1");
    return make_rational(k + 1, 2);
}

Rational expectation_k_equals_n(int n, int rho_max) {
    check_rho(n, rho_max, "expectation_k_equals_n");
    Rational value = Rational(n) * harmonic_exact(static_cast<std::uint32_t>(rho_max));
    if (value < Rational(n)) throw std::logic_error("expectation_k_equals_n: below n");
    return value;
}

RandomAccessSimulator::RandomAccessSimulator(int n, std::vector<StrandSet> minimal_sets) {
    if (n < 1 || n > 64) throw std::invalid_argument("RandomAccessSimulator: n must be in 1..64");
    if (minimal_sets.empty())
        throw std::invalid_argument("RandomAccessSimulator: need at least one retrieval set");
    const StrandSet universe = n == 64 ? ~StrandSet{0} : (StrandSet{1} << n) - 1;
    mode_ = Mode::minimal_sets;
    n_ = n;
    minimal_sets_ = std::move(minimal_sets);
    sets_containing_.assign(n, {});
    initial_remaining_.resize(minimal_sets_.size());
    for (std::uint32_t id = 0; id < minimal_sets_.size(); ++id) {
        const StrandSet s = minimal_sets_[id];
        if (s == 0 || (s & ~universe))
            throw std::invalid_argument("RandomAccessSimulator: bad retrieval set");
        initial_remaining_[id] = static_cast<std::uint16_t>(set_size(s));
        for (StrandSet rest = s; rest;) {
            const int j = std::countr_zero(rest);
            rest &= rest - 1;
            sets_containing_[j].push_back(id);
        }
    }
}

RandomAccessSimulator RandomAccessSimulator::for_code_index(const CodeSpec& code,
                                                            int info_index) {
    if (info_index < 0 || info_index >= code.k)
        throw std::invalid_argument("RandomAccessSimulator: index out of range");
    RandomAccessSimulator s;
    s.n_ = code.n;
    s.k_ = code.k;
    s.strand_ = info_index;
    switch (code.kind) {
        case CodeKind::Uncoded:
            s.mode_ = Mode::wait_for_strand;
            return s;
        case CodeKind::MdsSystematic:
            s.mode_ = Mode::strand_or_threshold;
            return s;
        case CodeKind::MdsNonSystematic:
            s.mode_ = Mode::distinct_threshold;
            return s;
        case CodeKind::XorLinear:
        case CodeKind::ExplicitRetrieval:
            return RandomAccessSimulator(code.n, minimal_retrieval_sets(code, info_index));
    }
    throw std::logic_error("RandomAccessSimulator: unknown code kind");
}

std::uint64_t RandomAccessSimulator::run_capped(RandomStream& stream, std::uint64_t cap) const {
    const auto n = static_cast<std::uint32_t>(n_);
    std::uint64_t draws = 0;
    const auto spend = [&]() -> std::uint32_t {
        ++draws;
        return stream.next_below(n);
    };
    switch (mode_) {
        case Mode::wait_for_strand: {
            while (draws < cap) {
                if (spend() == static_cast<std::uint32_t>(strand_)) return draws;
            }
            break;
        }
        case Mode::distinct_threshold:
        case Mode::strand_or_threshold: {
            StrandSet seen = 0;
            int distinct = 0;
            const bool own_counts = mode_ == Mode::strand_or_threshold;
            while (draws < cap) {
                const std::uint32_t i = spend();
                if (own_counts && i == static_cast<std::uint32_t>(strand_)) return draws;
                const StrandSet bit = StrandSet{1} << i;
                if (!(seen & bit)) {
                    seen |= bit;
                    if (++distinct >= k_) return draws;
                }
            }
            break;
        }
        case Mode::minimal_sets: {
            StrandSet seen = 0;
            std::vector<std::uint16_t> remaining = initial_remaining_;
            while (draws < cap) {
                const std::uint32_t i = spend();
                const StrandSet bit = StrandSet{1} << i;
                if (seen & bit) continue;
                seen |= bit;
                for (std::uint32_t id : sets_containing_[i]) {
                    if (--remaining[id] == 0) return draws;
                }
            }
            break;
        }
    }
    if (cap == sim::kDrawCap)
        throw sim::DrawCapError("random-access trial exceeded the 1e9 draw cap");
    return cap + 1;
}

std::uint64_t RandomAccessSimulator::run(RandomStream& stream) const {
    return run_capped(stream, sim::kDrawCap);
}

sim::TrialOutcome simulate_random_access_trial(int n, const std::vector<StrandSet>& minimal_sets,
                                               RandomStream& stream) {
    const RandomAccessSimulator simulator(n, minimal_sets);
    return sim::TrialOutcome{simulator.run(stream)};
}

}  // namespace covdepth::ra
