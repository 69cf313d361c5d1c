// covdepth -- coverage-depth calculator for coded storage channels.
//
// Subcommands: coverage expected | coverage bound | simulate | ra | sweep |
// search. Single results are JSON on stdout; sweeps write CSV files. Every
// record carries enough (command, params, seed, version) to reproduce its
// result bit-identically. Errors go to stderr only.

#include <CLI11.hpp>
#include <json.hpp>

#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "covdepth/analytic.hpp"
#include "covdepth/harmonic.hpp"
#include "covdepth/random_access.hpp"
#include "covdepth/search.hpp"
#include "covdepth/sim.hpp"

using json = nlohmann::json;
using namespace covdepth;

namespace {

constexpr const char* kVersion = "0.1.0";
constexpr const char* kSeedEnvVar = "COVDEPTH_SEED";
constexpr std::uint64_t kDefaultSeed = 42;

// exit codes
constexpr int kExitBadArgs = 2;
constexpr int kExitNoConvergence = 3;
constexpr int kExitDrawCap = 4;
constexpr int kExitExactCap = 5;
constexpr int kExitUnwritable = 6;

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::uint64_t default_seed() {
    if (const char* env = std::getenv(kSeedEnvVar)) {
        char* end = nullptr;
        const auto v = std::strtoull(env, &end, 10);
        if (end && *end == '\0') return v;
        throw std::invalid_argument(std::string(kSeedEnvVar) + " must be an unsigned integer");
    }
    return kDefaultSeed;
}

json rational_json(const Rational& q) {
    return json{{"rational", rational_to_string(q)}, {"value", rational_to_double(q)}};
}

json estimate_json(const Estimate& e) {
    return json{{"mean", e.mean},
                {"stderr", e.std_error},
                {"ci95", {e.ci95_low, e.ci95_high}},
                {"trials", e.trials}};
}

json tail_json(const TailEstimate& t) {
    return json{{"p_hat", t.p_hat},
                {"wilson95", {t.wilson_low, t.wilson_high}},
                {"trials", t.trials}};
}

void emit(const std::string& command, json params, json result, const std::string& method,
          std::optional<std::uint64_t> seed) {
    json record{{"command", command},
                {"params", std::move(params)},
                {"result", std::move(result)},
                {"method", method},
                {"seed", seed ? json(*seed) : json(nullptr)},
                {"version", kVersion}};
    std::cout << record.dump() << "\n";
}

ChannelDistribution load_distribution(const std::string& dist_spec, std::optional<int> n) {
    if (dist_spec == "uniform") {
        if (!n) throw std::invalid_argument("--n is required with the uniform distribution");
        return ChannelDistribution::uniform(static_cast<std::uint32_t>(*n));
    }
    std::ifstream in(dist_spec);
    if (!in) throw std::invalid_argument("cannot open distribution file: " + dist_spec);
    json data = json::parse(in);
    if (!data.is_array()) throw std::invalid_argument("distribution file must be a JSON array");
    std::vector<double> probs;
    probs.reserve(data.size());
    for (const auto& x : data) probs.push_back(x.get<double>());
    if (n && *n > 0 && static_cast<std::size_t>(*n) != probs.size())
        throw std::invalid_argument("--n disagrees with the distribution file length");
    return ChannelDistribution(std::move(probs));
}

CodeSpec load_code(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open code file: " + path);
    json data = json::parse(in);
    const int n = data.at("n").get<int>();
    const int k = data.at("k").get<int>();
    const std::string kind = data.at("kind").get<std::string>();
    if (kind == "uncoded") {
        if (k != n) throw std::invalid_argument("uncoded requires k = n");
        return CodeSpec::uncoded(n);
    }
    if (kind == "mds_systematic") return CodeSpec::mds_systematic(n, k);
    if (kind == "mds_nonsystematic") return CodeSpec::mds_nonsystematic(n, k);
    if (kind == "xor") {
        const auto& gen = data.at("generator");
        if (!gen.is_array() || gen.size() != static_cast<std::size_t>(k))
            throw std::invalid_argument("generator must be an array of k rows");
        std::vector<std::uint64_t> rows;
        rows.reserve(k);
        for (const auto& row : gen) {
            if (!row.is_array() || row.size() != static_cast<std::size_t>(n))
                throw std::invalid_argument("generator rows must hold n bits");
            std::uint64_t mask = 0;
            for (int j = 0; j < n; ++j) {
                const int bit = row[j].get<int>();
                if (bit != 0 && bit != 1)
                    throw std::invalid_argument("generator entries must be 0 or 1");
                if (bit) mask |= std::uint64_t{1} << j;
            }
            rows.push_back(mask);
        }
        return CodeSpec::xor_linear(n, k, std::move(rows));
    }
    if (kind == "explicit") {
        const auto& sets = data.at("retrieval_sets");
        std::vector<std::vector<StrandSet>> family(k);
        for (const auto& [key, lists] : sets.items()) {
            const int index = std::stoi(key);
            if (index < 1 || index > k)
                throw std::invalid_argument("retrieval_sets keys must be 1..k");
            for (const auto& list : lists) {
                StrandSet mask = 0;
                for (const auto& strand : list) {
                    const int s = strand.get<int>();
                    if (s < 1 || s > n)
                        throw std::invalid_argument("retrieval set strands must be 1..n");
                    mask |= StrandSet{1} << (s - 1);
                }
                family[index - 1].push_back(mask);
            }
        }
        return CodeSpec::explicit_retrieval(n, k, RetrievalFamily::validated(n, std::move(family)));
    }
    throw std::invalid_argument("unknown code kind: " + kind);
}

std::string hex_row(std::uint64_t row) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%" PRIx64, row);
    return buf;
}

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

// ---------------------------------------------------------------- coverage

struct CoverageExpectedArgs {
    int n = 0;
    int k = 0;
    int t = 1;
    std::string dist = "uniform";
};

void run_coverage_expected(const CoverageExpectedArgs& args) {
    const ChannelDistribution dist =
        load_distribution(args.dist, args.n > 0 ? std::optional<int>(args.n) : std::nullopt);
    const int n = static_cast<int>(dist.size());
    json params{{"n", n}, {"k", args.k}, {"t", args.t}, {"dist", args.dist}};
    // Only the literal "uniform" spec takes the closed form; a probability
    // file goes through quadrature even when its entries are equal, so the
    // two routes stay independently checkable.
    if (args.dist == "uniform" && args.t == 1) {
        const Rational exact = analytic::expected_coverage_uniform_t1(n, args.k);
        emit("coverage expected", params, rational_json(exact), "closed_form", std::nullopt);
        return;
    }
    const double value = analytic::expected_coverage_general(dist, args.k, args.t);
    emit("coverage expected", params, value, "quadrature", std::nullopt);
}

struct CoverageBoundArgs {
    int n = 0;
    int k = 0;
    int t = 1;
    double epsilon = 0.05;
};

void run_coverage_bound(const CoverageBoundArgs& args) {
    const double x = analytic::x_for_epsilon(args.epsilon, args.t);
    const double rx = analytic::rx_threshold(args.n, args.k, args.t, x);
    const double reads = analytic::reads_for_expected_success(args.n, args.k, args.t);
    json params{{"n", args.n}, {"k", args.k}, {"t", args.t}, {"epsilon", args.epsilon}};
    json result{{"x", x}, {"r_x", rx}, {"reads_expected_success", reads}};
    emit("coverage bound", params, result, "bound", std::nullopt);
}

// ---------------------------------------------------------------- simulate

struct SimulateArgs {
    int n = 0;
    int k = 0;
    int t = 1;
    double alpha = -1.0;  // <0: not set
    std::string dist = "uniform";
    std::uint64_t trials = 10000;
    std::uint64_t seed = 0;
    bool seed_set = false;
    std::int64_t tail_m = -1;  // <0: expectation mode
};

void run_simulate(const SimulateArgs& args) {
    if (args.trials < 100) throw std::invalid_argument("simulate needs --trials >= 100");
    const std::uint64_t seed = args.seed_set ? args.seed : default_seed();
    const bool noisy = args.alpha > 0.0;
    if (noisy && args.dist != "uniform")
        throw std::invalid_argument("--alpha requires the uniform distribution");

    const ChannelDistribution dist =
        load_distribution(args.dist, args.n > 0 ? std::optional<int>(args.n) : std::nullopt);
    const int n = static_cast<int>(dist.size());
    json params{{"n", n}, {"k", args.k}, {"dist", args.dist}, {"trials", args.trials}};
    if (noisy) {
        params["alpha"] = args.alpha;
    } else {
        params["t"] = args.t;
    }

    if (args.tail_m >= 0) {
        params["m"] = args.tail_m;
        const auto m = static_cast<std::uint64_t>(args.tail_m);
        const auto trial = [&](RandomStream& s, std::uint64_t cap) {
            return noisy ? sim::simulate_noisy_alpha_trial_capped(n, args.k, args.alpha, s, cap)
                         : sim::simulate_coverage_trial_capped(dist, args.k, args.t, s, cap);
        };
        const TailEstimate tail = sim::estimate_tail(trial, m, args.trials, seed);
        emit("simulate", params, tail_json(tail), "monte_carlo", seed);
        return;
    }

    const auto trial = [&](RandomStream& s) {
        return static_cast<double>(
            noisy ? sim::simulate_noisy_alpha_trial(n, args.k, args.alpha, s).draws
                  : sim::simulate_coverage_trial(dist, args.k, args.t, s).draws);
    };
    const Estimate estimate = sim::estimate_expectation(trial, args.trials, seed);
    emit("simulate", params, estimate_json(estimate), "monte_carlo", seed);
}

// ---------------------------------------------------------------- ra

struct RaArgs {
    std::string code_file;
    int index = 1;  // 1-based
    std::string method = "exact";
    std::uint64_t trials = 100000;
    std::uint64_t seed = 0;
    bool seed_set = false;
};

Rational ra_formula_value(const CodeSpec& code, int index0) {
    switch (code.kind) {
        case CodeKind::Uncoded:
            return ra::expectation_no_code(code.n);
        case CodeKind::MdsSystematic:
            return ra::expectation_systematic_mds(code.n, code.k).value;
        case CodeKind::MdsNonSystematic:
            return analytic::expected_coverage_uniform_t1(code.n, code.k);
        case CodeKind::XorLinear:
        case CodeKind::ExplicitRetrieval: {
            const auto sets = minimal_retrieval_sets(code, index0);
            StrandSet merged = 0;
            std::vector<int> sizes;
            sizes.reserve(sets.size());
            for (StrandSet s : sets) {
                if (merged & s)
                    throw std::invalid_argument(
                        "no closed formula applies: retrieval sets are not disjoint");
                merged |= s;
                sizes.push_back(set_size(s));
            }
            return ra::expectation_disjoint_family(code.n, sizes);
        }
    }
    throw std::logic_error("unreachable code kind");
}

void run_ra(const RaArgs& args) {
    const CodeSpec code = load_code(args.code_file);
    if (args.index < 1 || args.index > code.k)
        throw std::invalid_argument("--index must be in 1..k");
    const int index0 = args.index - 1;
    json params{{"code", args.code_file},
                {"n", code.n},
                {"k", code.k},
                {"kind", to_string(code.kind)},
                {"index", args.index},
                {"method", args.method}};

    if (args.method == "exact") {
        const Rational value = ra::expected_draws_for_code_index(code, index0);
        emit("ra", params, rational_json(value), "exact_enumeration", std::nullopt);
        return;
    }
    if (args.method == "formula") {
        const Rational value = ra_formula_value(code, index0);
        emit("ra", params, rational_json(value), "closed_form", std::nullopt);
        return;
    }
    if (args.method == "simulate") {
        const std::uint64_t seed = args.seed_set ? args.seed : default_seed();
        params["trials"] = args.trials;
        const auto simulator = ra::RandomAccessSimulator::for_code_index(code, index0);
        const Estimate estimate = sim::estimate_expectation(
            [&simulator](RandomStream& s) { return static_cast<double>(simulator.run(s)); },
            args.trials, seed);
        emit("ra", params, estimate_json(estimate), "monte_carlo", seed);
        return;
    }
    throw std::invalid_argument("--method must be exact, formula, or simulate");
}

// ---------------------------------------------------------------- sweep

struct SweepArgs {
    std::string var;
    double from = 0.0;
    double to = 0.0;
    double step = 1.0;
    int n = 0;
    int k = 0;
    int t = 1;
    double alpha = 0.5;
    double x = 0.0;
    std::uint64_t trials = 0;  // 0: analytic only
    std::uint64_t seed = 0;
    bool seed_set = false;
    std::string out;
};

void run_sweep(const SweepArgs& args) {
    if (args.step <= 0.0) throw std::invalid_argument("--step must be positive");
    std::vector<double> grid;
    for (double v = args.from; v <= args.to + 1e-12; v += args.step) grid.push_back(v);
    if (grid.empty()) throw std::invalid_argument("sweep range is empty");

    const std::uint64_t seed = args.seed_set ? args.seed : default_seed();

    std::ofstream out(args.out, std::ios::binary);
    if (!out) throw IoError("cannot open output path: " + args.out);
    out << "param,value,method,result,stderr,r_x,reads_lambert,failure_bound\n";

    const auto bound_cells = [&](int n, int k, int t) -> std::pair<std::string, std::string> {
        if (k >= 1 && k < n && n >= 3) {
            return {format_double(analytic::rx_threshold(n, k, t, args.x)),
                    format_double(analytic::reads_for_expected_success(n, k, t))};
        }
        return {"", ""};
    };

    for (const double value : grid) {
        int n = args.n, k = args.k, t = args.t;
        double alpha = args.alpha, x = args.x;
        if (args.var == "n") n = static_cast<int>(value);
        else if (args.var == "k") k = static_cast<int>(value);
        else if (args.var == "t") t = static_cast<int>(value);
        else if (args.var == "alpha") alpha = value;
        else if (args.var == "x") x = value;
        else throw std::invalid_argument("--var must be one of n, k, t, alpha, x");

        const std::string value_str =
            (args.var == "alpha" || args.var == "x") ? format_double(value)
                                                     : std::to_string(static_cast<long>(value));

        if (args.var == "alpha") {
            const double analytic_value = analytic::expected_coverage_noisy_alpha(n, k, alpha);
            out << args.var << ',' << value_str << ",closed_form,"
                << format_double(analytic_value) << ",,,,\n";
            if (args.trials > 0) {
                const Estimate e = sim::estimate_expectation(
                    [n, k, alpha](RandomStream& s) {
                        return static_cast<double>(
                            sim::simulate_noisy_alpha_trial(n, k, alpha, s).draws);
                    },
                    args.trials, seed);
                out << args.var << ',' << value_str << ",monte_carlo," << format_double(e.mean)
                    << ',' << format_double(e.std_error) << ",,,\n";
            }
            continue;
        }

        const auto [rx_cell, reads_cell] = bound_cells(n, k, t);

        if (args.var == "x") {
            const double rx = analytic::rx_threshold(n, k, t, x);
            const double fail = analytic::failure_probability_bound(x, t);
            out << args.var << ',' << value_str << ",bound," << format_double(rx) << ",,"
                << format_double(rx) << ',' << reads_cell << ',' << format_double(fail) << "\n";
            if (args.trials > 0) {
                const ChannelDistribution dist = ChannelDistribution::uniform(n);
                const auto m = static_cast<std::uint64_t>(std::ceil(rx));
                const TailEstimate tail = sim::estimate_tail(
                    [&dist, k, t](RandomStream& s, std::uint64_t cap) {
                        return sim::simulate_coverage_trial_capped(dist, k, t + 1, s, cap);
                    },
                    m, args.trials, seed);
                out << args.var << ',' << value_str << ",monte_carlo,"
                    << format_double(tail.p_hat) << ',' << format_double(tail.halfwidth()) << ','
                    << format_double(rx) << ',' << reads_cell << ',' << format_double(fail)
                    << "\n";
            }
            continue;
        }

        // n / k / t sweeps: expected coverage of the uniform channel.
        const ChannelDistribution dist = ChannelDistribution::uniform(n);
        std::string method = "closed_form";
        double analytic_value;
        if (t == 1) {
            analytic_value = rational_to_double(analytic::expected_coverage_uniform_t1(n, k));
        } else {
            method = "quadrature";
            analytic_value = analytic::expected_coverage_general(dist, k, t);
        }
        out << args.var << ',' << value_str << ',' << method << ','
            << format_double(analytic_value) << ",," << rx_cell << ',' << reads_cell << ",\n";
        if (args.trials > 0) {
            const Estimate e = sim::estimate_expectation(
                [&dist, k, t](RandomStream& s) {
                    return static_cast<double>(sim::simulate_coverage_trial(dist, k, t, s).draws);
                },
                args.trials, seed);
            out << args.var << ',' << value_str << ",monte_carlo," << format_double(e.mean) << ','
                << format_double(e.std_error) << ',' << rx_cell << ',' << reads_cell << ",\n";
        }
    }
    out.flush();
    if (!out) throw IoError("failed while writing: " + args.out);

    json params{{"var", args.var}, {"from", args.from}, {"to", args.to},
                {"step", args.step}, {"n", args.n},     {"k", args.k},
                {"t", args.t},      {"alpha", args.alpha}, {"x", args.x},
                {"trials", args.trials}, {"out", args.out}};
    json result{{"rows", grid.size()}, {"path", args.out}};
    emit("sweep", params, result, args.trials > 0 ? "monte_carlo" : "closed_form",
         args.trials > 0 ? std::optional<std::uint64_t>(seed) : std::nullopt);
}

// ---------------------------------------------------------------- search

struct SearchArgs {
    int n = 0;
    int k = 0;
    std::uint64_t budget = 10000;
    std::string mode = "exhaustive";
    std::uint64_t seed = 0;
    bool seed_set = false;
    std::uint64_t limit = 0;  // 0: all rows
};

void run_search(const SearchArgs& args) {
    ra::SearchMode mode;
    if (args.mode == "exhaustive") mode = ra::SearchMode::exhaustive;
    else if (args.mode == "random") mode = ra::SearchMode::random;
    else throw std::invalid_argument("--mode must be exhaustive or random");

    const std::uint64_t seed = args.seed_set ? args.seed : default_seed();
    const auto results = ra::search_codes(args.n, args.k, args.budget, mode, seed);

    json table = json::array();
    std::uint64_t emitted = 0;
    for (const auto& r : results) {
        if (args.limit > 0 && emitted >= args.limit) break;
        json row{{"kind", to_string(r.code.kind)},
                 {"t_max", rational_to_string(r.worst_expected)},
                 {"value", rational_to_double(r.worst_expected)}};
        json rows_hex = json::array();
        for (std::uint64_t g : r.code.generator_rows) rows_hex.push_back(hex_row(g));
        row["generator_rows_hex"] = rows_hex;
        table.push_back(std::move(row));
        ++emitted;
    }
    json params{{"n", args.n},       {"k", args.k},   {"budget", args.budget},
                {"mode", args.mode}, {"limit", args.limit}};
    emit("search", params, json{{"codes", std::move(table)}, {"evaluated", results.size()}},
         "exact_enumeration", mode == ra::SearchMode::random ? std::optional(seed) : std::nullopt);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"coverage-depth calculator: expected reads, concentration bounds,\n"
                 "Monte Carlo validation, and random-access analysis for coded storage.\n"
                 "Set " +
                 std::string(kSeedEnvVar) + " to change the default Monte Carlo seed."};
    app.require_subcommand(1);

    // coverage
    auto* coverage = app.add_subcommand("coverage", "expected reads and read-count bounds");
    coverage->require_subcommand(1);

    CoverageExpectedArgs cov_args;
    auto* cov_expected =
        coverage->add_subcommand("expected", "E[reads] until k of n strands have t reads each");
    cov_expected->add_option("--n", cov_args.n, "number of encoded strands");
    cov_expected->add_option("--k", cov_args.k, "number of information strands")->required();
    cov_expected->add_option("--t", cov_args.t, "reads required per strand");
    cov_expected->add_option("--dist", cov_args.dist,
                             "'uniform' or a JSON file with the probability vector");

    CoverageBoundArgs bound_args;
    auto* cov_bound =
        coverage->add_subcommand("bound", "read thresholds meeting a target failure probability");
    cov_bound->add_option("--n", bound_args.n, "number of encoded strands")->required();
    cov_bound->add_option("--k", bound_args.k, "number of information strands")->required();
    cov_bound->add_option("--t", bound_args.t, "reads required per strand");
    cov_bound->add_option("--epsilon", bound_args.epsilon, "target failure probability")
        ->required();

    // simulate
    SimulateArgs sim_args;
    auto* simulate = app.add_subcommand("simulate", "Monte Carlo estimate of the read count");
    simulate->add_option("--n", sim_args.n, "number of encoded strands");
    simulate->add_option("--k", sim_args.k, "number of information strands")->required();
    simulate->add_option("--t", sim_args.t, "reads required per strand");
    simulate->add_option("--alpha", sim_args.alpha, "clean-read probability (noisy channel)");
    simulate->add_option("--dist", sim_args.dist,
                         "'uniform' or a JSON file with the probability vector");
    simulate->add_option("--trials", sim_args.trials, "number of Monte Carlo trials");
    auto* sim_seed = simulate->add_option("--seed", sim_args.seed, "master seed");
    simulate->add_option("--tail-m", sim_args.tail_m, "estimate P[reads > m] instead of E[reads]");

    // ra
    RaArgs ra_args;
    auto* ra_cmd = app.add_subcommand("ra", "reads needed to recover one information strand");
    ra_cmd->add_option("--code", ra_args.code_file, "code description JSON file")->required();
    ra_cmd->add_option("--index", ra_args.index, "information strand index (1-based)");
    ra_cmd->add_option("--method", ra_args.method, "exact | formula | simulate");
    ra_cmd->add_option("--trials", ra_args.trials, "Monte Carlo trials (simulate)");
    auto* ra_seed = ra_cmd->add_option("--seed", ra_args.seed, "master seed");

    // sweep
    SweepArgs sweep_args;
    auto* sweep = app.add_subcommand("sweep", "write a CSV across a parameter grid");
    sweep->add_option("--var", sweep_args.var, "grid variable: n, k, t, alpha, or x")->required();
    sweep->add_option("--from", sweep_args.from, "grid start")->required();
    sweep->add_option("--to", sweep_args.to, "grid end (inclusive)")->required();
    sweep->add_option("--step", sweep_args.step, "grid step");
    sweep->add_option("--n", sweep_args.n, "fixed n");
    sweep->add_option("--k", sweep_args.k, "fixed k");
    sweep->add_option("--t", sweep_args.t, "fixed t");
    sweep->add_option("--alpha", sweep_args.alpha, "fixed alpha");
    sweep->add_option("--x", sweep_args.x, "fixed x offset for the r_x column");
    sweep->add_option("--trials", sweep_args.trials, "Monte Carlo trials per grid point");
    auto* sweep_seed = sweep->add_option("--seed", sweep_args.seed, "master seed");
    sweep->add_option("--out", sweep_args.out, "output CSV path")->required();

    // search
    SearchArgs search_args;
    auto* search = app.add_subcommand("search", "rank systematic XOR codes by worst-index reads");
    search->add_option("--n", search_args.n, "number of encoded strands")->required();
    search->add_option("--k", search_args.k, "number of information strands")->required();
    search->add_option("--budget", search_args.budget, "max codes to evaluate");
    search->add_option("--mode", search_args.mode, "exhaustive | random");
    auto* search_seed = search->add_option("--seed", search_args.seed, "master seed");
    search->add_option("--limit", search_args.limit, "max rows to emit (0 = all)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e, std::cerr, std::cerr);
        return kExitBadArgs;
    }

    sim_args.seed_set = sim_seed->count() > 0;
    ra_args.seed_set = ra_seed->count() > 0;
    sweep_args.seed_set = sweep_seed->count() > 0;
    search_args.seed_set = search_seed->count() > 0;

    try {
        if (cov_expected->parsed()) run_coverage_expected(cov_args);
        else if (cov_bound->parsed()) run_coverage_bound(bound_args);
        else if (simulate->parsed()) run_simulate(sim_args);
        else if (ra_cmd->parsed()) run_ra(ra_args);
        else if (sweep->parsed()) run_sweep(sweep_args);
        else if (search->parsed()) run_search(search_args);
    } catch (const analytic::QuadratureError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNoConvergence;
    } catch (const sim::DrawCapError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDrawCap;
    } catch (const ExactCapError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitExactCap;
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUnwritable;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadArgs;
    }
    return 0;
}
