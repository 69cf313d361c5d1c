// Acceptance suite: every release gate in one binary, one PASS/FAIL line
// each. Exit status is the number of failed gates.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "cli_harness.hpp"
#include "covdepth/analytic.hpp"
#include "covdepth/harmonic.hpp"
#include "covdepth/random_access.hpp"
#include "covdepth/search.hpp"
#include "covdepth/sim.hpp"

using namespace covdepth;

namespace {

int g_failures = 0;

class Gate {
  public:
    Gate(int number, std::string title)
        : number_(number), title_(std::move(title)), start_(std::chrono::steady_clock::now()) {}

    void finish(bool pass, const std::string& detail) const {
        const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                                 std::chrono::steady_clock::now() - start_)
                                 .count();
        std::printf("%s criterion %2d (%s): %s [%lld ms]\n", pass ? "PASS" : "FAIL", number_,
                    title_.c_str(), detail.c_str(), static_cast<long long>(elapsed));
        std::fflush(stdout);
        if (!pass) ++g_failures;
    }

  private:
    int number_;
    std::string title_;
    std::chrono::steady_clock::time_point start_;
};

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

CodeSpec cyclic_pairs_code() {
    return CodeSpec::xor_linear(8, 4,
                                {0b10010001, 0b00110010, 0b01100100, 0b11001000});
}

ChannelDistribution random_distribution(int n, RandomStream& rng) {
    std::vector<double> w(n);
    double sum = 0.0;
    for (double& x : w) {
        x = 0.05 - std::log(1.0 - rng.next_unit());
        sum += x;
    }
    for (double& x : w) x /= sum;
    return ChannelDistribution(std::move(w));
}

// 1. The 8-strand cyclic-pairs code: exact 403/105 and Monte Carlo agreement.
void criterion_1() {
    const Gate gate(1, "cyclic-pairs code reproduction");
    const Rational exact = ra::expected_draws_for_code_index(cyclic_pairs_code(), 0);
    const bool exact_ok = exact == make_rational(403, 105);

    const auto simulator = ra::RandomAccessSimulator::for_code_index(cyclic_pairs_code(), 0);
    const Estimate e = sim::estimate_expectation(
        [&simulator](RandomStream& s) { return static_cast<double>(simulator.run(s)); },
        1'000'000, 20260809);
    const double target = 403.0 / 105.0;
    const bool mc_ok = std::abs(e.mean - target) <= 3.0 * e.std_error;
    gate.finish(exact_ok && mc_ok,
                "exact=" + rational_to_string(exact) + " mc=" + fmt(e.mean) + "+-" +
                    fmt(e.std_error));
}

// 2. Harmonic closed form vs quadrature, relative error <= 1e-6.
void criterion_2() {
    const Gate gate(2, "closed form vs quadrature");
    bool ok = true;
    double worst = 0.0;
    for (auto [n, k] : std::vector<std::pair<int, int>>{{5, 3}, {10, 6}, {50, 40}}) {
        const double exact = rational_to_double(analytic::expected_coverage_uniform_t1(n, k));
        const double quad = analytic::expected_coverage_general(ChannelDistribution::uniform(n), k, 1);
        const double rel = std::abs(quad - exact) / exact;
        worst = std::max(worst, rel);
        ok = ok && rel <= 1e-6;
    }
    gate.finish(ok, "worst rel err=" + fmt(worst));
}

// 3. Classic coupon collection at n = k = 100.
void criterion_3() {
    const Gate gate(3, "coupon-collector sanity");
    const auto dist = ChannelDistribution::uniform(100);
    const Estimate e = sim::estimate_expectation(
        [&dist](RandomStream& s) {
            return static_cast<double>(sim::simulate_coverage_trial(dist, 100, 1, s).draws);
        },
        100000, 3);
    const double expect = rational_to_double(analytic::expected_coverage_uniform_t1(100, 100));
    const bool ok = std::abs(e.mean - expect) <= 3.0 * e.std_error &&
                    std::abs(e.mean - expect) / expect <= 0.01;
    gate.finish(ok, "mean=" + fmt(e.mean) + " expect=" + fmt(expect) + " se=" + fmt(e.std_error));
}

// 4. Concentration: empirical exceed probability under the closed bound.
void criterion_4() {
    const Gate gate(4, "tail dominance at n=1e4");
    const int n = 10000, k = 9000;
    const auto dist = ChannelDistribution::uniform(n);
    bool ok = true;
    std::string detail;
    for (int t : {1, 2}) {
        for (double x : {0.0, 2.0}) {
            const double rx = analytic::rx_threshold(n, k, t, x);
            const double bound = analytic::failure_probability_bound(x, t);
            const TailEstimate tail = sim::estimate_tail(
                [&dist, k, t](RandomStream& s, std::uint64_t cap) {
                    return sim::simulate_coverage_trial_capped(dist, k, t + 1, s, cap);
                },
                static_cast<std::uint64_t>(std::ceil(rx)), 10000,
                40000 + t * 10 + static_cast<int>(x));
            const bool this_ok = tail.p_hat <= bound + 3.0 * tail.halfwidth();
            ok = ok && this_ok;
            detail += "t" + std::to_string(t) + "x" + fmt(x) + ":" + fmt(tail.p_hat) + "<=" +
                      fmt(bound) + " ";
        }
    }
    gate.finish(ok, detail);
}

// 5. Read-budget guarantee across the full grid.
void criterion_5() {
    const Gate gate(5, "read budget guarantee");
    int violations = 0, cases = 0;
    for (int n : {50, 100, 1000}) {
        for (int tenths = 1; tenths <= 9; tenths += 2) {
            const int k = n * tenths / 10;
            for (int t : {1, 2, 3, 5}) {
                ++cases;
                const double r = analytic::reads_for_expected_success(n, k, t);
                const auto rc = static_cast<std::uint64_t>(std::ceil(r));
                if (analytic::expected_unfilled_exact(n, rc, t) > static_cast<double>(n - k))
                    ++violations;
            }
        }
    }
    gate.finish(violations == 0,
                std::to_string(cases) + " cases, " + std::to_string(violations) + " violations");
}

// 6. Uniform channel minimizes the expectation over random distributions.
void criterion_6() {
    const Gate gate(6, "uniform optimality");
    RandomStream rng = derive_stream(6, 0);
    int violations = 0;
    double worst = 0.0;
    for (int round = 0; round < 200; ++round) {
        const int n = 2 + static_cast<int>(rng.next_below(11));
        const int k = 1 + static_cast<int>(rng.next_below(static_cast<std::uint32_t>(n)));
        const auto dist = random_distribution(n, rng);
        const double general = analytic::expected_coverage_general(dist, k, 1);
        const double uniform =
            analytic::expected_coverage_general(ChannelDistribution::uniform(n), k, 1);
        worst = std::min(worst, general - uniform);
        if (general < uniform - 1e-7) ++violations;
    }
    gate.finish(violations == 0, "200 dists, min(gap)=" + fmt(worst));
}

// 7. Strict decrease in n of the exact expectation, full grid to n = 200.
void criterion_7() {
    const Gate gate(7, "exact monotone decrease");
    const auto h = harmonic_prefix(201);
    bool ok = true;
    for (int k = 2; k <= 200 && ok; ++k) {
        for (int n = k; n <= 200; ++n) {
            const Rational cur = Rational(n) * (h[n] - h[n - k]);
            const Rational next = Rational(n + 1) * (h[n + 1] - h[n + 1 - k]);
            if (!(cur > next)) {
                ok = false;
                break;
            }
        }
    }
    gate.finish(ok, "all 2<=k<=n<=200 strict");
}

// 8. Threshold-at-k families beat any family with larger minimal sets.
void criterion_8() {
    const Gate gate(8, "k-threshold optimality");
    RandomStream rng = derive_stream(8, 0);
    int violations = 0;
    for (int round = 0; round < 100; ++round) {
        const int n = 4 + static_cast<int>(rng.next_below(9));
        const int k = 2 + static_cast<int>(rng.next_below(static_cast<std::uint32_t>(n - 1)));
        std::vector<StrandSet> sets;
        const int want = 1 + static_cast<int>(rng.next_below(6));
        for (int i = 0; i < want; ++i) {
            const int size =
                k + static_cast<int>(rng.next_below(static_cast<std::uint32_t>(n - k + 1)));
            StrandSet s = 0;
            while (set_size(s) < size)
                s |= StrandSet{1} << rng.next_below(static_cast<std::uint32_t>(n));
            sets.push_back(s);
        }
        std::vector<StrandSet> mins;
        for (StrandSet s : sets) {
            bool dominated = false;
            for (StrandSet t : sets)
                if (t != s && is_subset(t, s)) dominated = true;
            bool duplicate = false;
            for (StrandSet m : mins) duplicate |= (m == s);
            if (!dominated && !duplicate) mins.push_back(s);
        }
        const auto family = DecodableFamily::from_minimal_sets(n, mins);
        const auto mds = DecodableFamily::threshold(n, k);
        if (ra::expected_draws_until_family(n, family) < ra::expected_draws_until_family(n, mds))
            ++violations;
    }
    gate.finish(violations == 0, "100 families, " + std::to_string(violations) + " violations");
}

// 9. Single-index closed forms equal exact enumeration.
void criterion_9() {
    const Gate gate(9, "closed forms vs enumeration");
    bool ok = true;
    std::string failure;

    // Disjoint pairs.
    for (int n = 2; n <= 12 && ok; ++n) {
        for (int a = 1; a < n && ok; ++a) {
            for (int b = 1; a + b <= n && ok; ++b) {
                const StrandSet first = (StrandSet{1} << a) - 1;
                const StrandSet second = ((StrandSet{1} << b) - 1) << a;
                const auto family = DecodableFamily::from_minimal_sets(n, {first, second});
                if (ra::expected_draws_until_family(n, family) !=
                    ra::expectation_disjoint_family(n, {a, b})) {
                    ok = false;
                    failure = "disjoint pair n=" + std::to_string(n);
                }
            }
        }
    }

    // Simple parity: worst index costs exactly k.
    for (int k = 2; k <= 10 && ok; ++k) {
        const int n = k + 1;
        std::vector<std::uint64_t> rows(k);
        for (int i = 0; i < k; ++i) rows[i] = (std::uint64_t{1} << i) | (std::uint64_t{1} << k);
        if (ra::t_max(CodeSpec::xor_linear(n, k, rows)) != Rational(k)) {
            ok = false;
            failure = "simple parity k=" + std::to_string(k);
        }
    }

    // Systematic MDS in the stated regime: exactly k for every index.
    for (int n = 2; n <= 14 && ok; ++n) {
        for (int k = n / 2 + 1; k <= n && ok; ++k) {
            const auto code = CodeSpec::mds_systematic(n, k);
            for (int i = 0; i < k && ok; ++i) {
                if (ra::expected_draws_for_code_index(code, i) != Rational(k)) {
                    ok = false;
                    failure = "systematic mds n=" + std::to_string(n) + " k=" + std::to_string(k);
                }
            }
        }
    }

    // No code: worth exactly n by enumeration.
    for (int n = 1; n <= 16 && ok; ++n) {
        const auto family =
            DecodableFamily::from_minimal_sets(n, {StrandSet{1} << (n / 2)});
        if (ra::expected_draws_until_family(n, family) != Rational(n) ||
            ra::expectation_no_code(n) != Rational(n)) {
            ok = false;
            failure = "uncoded n=" + std::to_string(n);
        }
    }

    gate.finish(ok, ok ? "disjoint pairs, parity, systematic MDS, uncoded all exact" : failure);
}

// 10. Search floor and the cyclic-pairs code appearance.
void criterion_10() {
    const Gate gate(10, "search floor and cyclic code");
    const auto results = ra::search_codes(8, 4, 5000, ra::SearchMode::exhaustive);
    const Rational floor = ra::t_max_lower_bound(4);
    bool floor_ok = true;
    bool found_cyclic = false;
    for (const auto& r : results) {
        floor_ok = floor_ok && r.worst_expected >= floor;
        if (r.worst_expected == make_rational(403, 105)) found_cyclic = true;
    }
    const bool beats_k = found_cyclic && make_rational(403, 105) < Rational(4);
    gate.finish(floor_ok && found_cyclic && beats_k,
                std::to_string(results.size()) + " codes, floor 5/2 held, 403/105 present");
}

// 11. Noisy-alpha formula against simulation.
void criterion_11() {
    const Gate gate(11, "noisy-channel expectation");
    bool ok = true;
    std::string detail;
    const std::vector<std::tuple<int, int, double>> cases{{8, 4, 0.5}, {20, 10, 0.25}};
    int seed = 1100;
    for (auto [n, k, alpha] : cases) {
        const Estimate e = sim::estimate_expectation(
            [n = n, k = k, alpha = alpha](RandomStream& s) {
                return static_cast<double>(sim::simulate_noisy_alpha_trial(n, k, alpha, s).draws);
            },
            100000, seed++);
        const double expect = analytic::expected_coverage_noisy_alpha(n, k, alpha);
        ok = ok && std::abs(e.mean - expect) <= 3.0 * e.std_error;
        detail += fmt(e.mean) + "~" + fmt(expect) + " ";
    }
    gate.finish(ok, detail);
}

// 12. CLI determinism: an identical command script yields identical bytes.
void criterion_12() {
    const Gate gate(12, "CLI byte determinism");
    const std::string code_file = cli::write_file("cyclic.json", cli::cyclic_code_json());
    const std::string sweep_out = (cli::temp_dir() / "det.csv").string();

    const auto script = [&]() {
        std::string transcript;
        transcript += cli::run("coverage expected --n 8 --k 4 --t 1").out;
        transcript += cli::run("coverage expected --n 12 --k 7 --t 2").out;
        transcript += cli::run("coverage bound --n 1000 --k 900 --t 2 --epsilon 0.05").out;
        transcript += cli::run("simulate --n 50 --k 40 --t 1 --trials 5000 --seed 99").out;
        transcript += cli::run("simulate --n 8 --k 4 --alpha 0.5 --trials 5000 --seed 99").out;
        transcript +=
            cli::run("simulate --n 20 --k 20 --t 1 --trials 2000 --seed 99 --tail-m 90").out;
        transcript += cli::run("ra --code " + code_file + " --index 1 --method exact").out;
        transcript +=
            cli::run("ra --code " + code_file + " --index 2 --method simulate --trials 5000 --seed 99")
                .out;
        transcript += cli::run("search --n 6 --k 3 --budget 150 --seed 99").out;
        transcript += cli::run("sweep --var n --from 20 --to 40 --step 5 --k 10 --t 1 --trials "
                               "2000 --seed 99 --out " +
                               sweep_out)
                          .out;
        return transcript;
    };

    const std::string first = script();
    const std::string first_csv = cli::read_file(sweep_out);
    const std::string second = script();
    const std::string second_csv = cli::read_file(sweep_out);
    const bool stdout_ok = !first.empty() && first == second;
    const bool csv_ok = !first_csv.empty() && first_csv == second_csv;
    gate.finish(stdout_ok && csv_ok,
                std::string("stdout ") + (stdout_ok ? "identical" : "DIFFERS") + ", csv " +
                    (csv_ok ? "identical" : "DIFFERS"));
}

}  // namespace

int main() {
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    criterion_10();
    criterion_11();
    criterion_12();
    if (g_failures == 0) {
        std::printf("acceptance: all 12 criteria passed\n");
    } else {
        std::printf("acceptance: %d criteria FAILED\n", g_failures);
    }
    return g_failures;
}
