#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>

#include <CLI11.hpp>

#include "segdp/additive.hpp"
#include "segdp/exact_dp.hpp"
#include "segdp/io.hpp"
#include "segdp/multiscale.hpp"

namespace {

using namespace segdp;

void add_gen_options(CLI::App* app, GenSpec& gen) {
    app->add_option("--gen-segments", gen.segments, "number of constant segments");
    app->add_option("--gen-length", gen.length, "total signal length");
    app->add_option("--gen-jump", gen.jump, "minimum level separation");
    app->add_option("--gen-noise", gen.noise, "gaussian noise stddev");
}

int cmd_fit(const RunSpec& spec, const std::string& output) {
    RunReport rep = run(spec);
    const std::string doc = serialize_report(rep);
    if (output.empty() || output == "-") {
        std::cout << doc;
    } else {
        std::ofstream out(output);
        if (!out) throw RunError(2, "cannot open output file: " + output);
        out << doc;
    }
    return 0;
}

int cmd_gen(const GenSpec& gen, const std::string& output) {
    Generated g = gen_signal(gen);
    std::ostream* out = &std::cout;
    std::ofstream file;
    if (!output.empty() && output != "-") {
        file.open(output);
        if (!file) throw RunError(2, "cannot open output file: " + output);
        out = &file;
    }
    char buf[32];
    for (double v : g.signal.values()) {
        std::snprintf(buf, sizeof buf, "%.17g\n", v);
        *out << buf;
    }
    return 0;
}

int cmd_bench(std::size_t max_n, double penalty, double epsilon, std::uint64_t seed) {
    std::printf("%-12s %8s %12s %14s %12s\n", "solver", "n", "time_ms", "value", "ratio");
    for (std::size_t n = 256; n <= max_n; n *= 2) {
        GenSpec gen;
        gen.segments = 8;
        gen.length = n;
        gen.jump = 5.0;
        gen.noise = 1.0;
        gen.seed = seed + n;
        Signal sig = gen_signal(gen).signal;
        SolverConfig cfg;
        cfg.penalty = penalty;
        cfg.epsilon = epsilon;

        double exact_value = 0.0;
        const bool exact_affordable = n <= 16384;
        auto run_one = [&](const char* name, auto&& solve) {
            const auto t0 = std::chrono::steady_clock::now();
            SegmentationResult res = solve(sig, cfg);
            const auto t1 = std::chrono::steady_clock::now();
            const double ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
            if (std::string(name) == "exact") exact_value = res.value;
            if (exact_affordable && exact_value > 0)
                std::printf("%-12s %8zu %12.3f %14.6f %12.6f\n", name, n, ms, res.value,
                            res.value / exact_value);
            else
                std::printf("%-12s %8zu %12.3f %14.6f %12s\n", name, n, ms, res.value, "-");
        };
        if (exact_affordable)
            run_one("exact", [](const Signal& s, const SolverConfig& c) {
                return solve_exact(s, c);
            });
        run_one("exact-pruned", [](const Signal& s, const SolverConfig& c) {
            return solve_exact_pruned(s, c);
        });
        run_one("monge", [](const Signal& s, const SolverConfig& c) {
            return solve_multiscale(s, c);
        });
        if (n <= 2048)
            run_one("halfspace", [](const Signal& s, const SolverConfig& c) {
                return solve_additive(s, c, HalfspaceBackend::Tree);
            });
    }
    return 0;
}

int cmd_selftest(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> value(-5.0, 5.0);
    std::uniform_int_distribution<std::size_t> len(1, 12);
    const double penalties[] = {0.1, 1.0, 10.0};
    std::size_t trials = 0;
    for (int t = 0; t < 300; ++t) {
        std::vector<double> vals(len(rng));
        for (double& v : vals) v = value(rng);
        Signal sig(vals);
        for (double c : penalties) {
            SolverConfig cfg;
            cfg.penalty = c;
            cfg.epsilon = 0.01;
            const double exact = solve_exact(sig, cfg).value;
            const double brute = solve_bruteforce(sig, cfg).value;
            const double pruned = solve_exact_pruned(sig, cfg).value;
            const double tol = 1e-9 * std::max(1.0, std::fabs(brute));
            if (std::fabs(exact - brute) > tol || std::fabs(pruned - brute) > tol) {
                std::fprintf(stderr, "selftest: solver disagreement at trial %d\n", t);
                return 1;
            }
            ++trials;
        }
    }
    std::printf("selftest: %zu oracle comparisons passed\n", trials);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Piecewise-constant segmentation: exact, additive-eps and "
                 "multiplicative-(1+eps) solvers"};
    app.require_subcommand(1);

    RunSpec spec;
    GenSpec fit_gen;
    std::string input, output;
    bool use_gen = false;

    CLI::App* fit = app.add_subcommand("fit", "segment a signal");
    fit->add_option("--input", input, "signal file, one value per line");
    fit->add_flag("--gen", use_gen, "use the synthetic generator instead of --input");
    add_gen_options(fit, fit_gen);
    fit->add_option("--algo", spec.solver,
                    "exact | exact-pruned | brute | monge | halfspace");
    fit->add_option("--penalty", spec.penalty, "per-segment cost C");
    double eps = 0.0;
    CLI::Option* eps_opt = fit->add_option("--epsilon", eps, "tolerance");
    fit->add_option("--seed", spec.seed, "generator seed");
    fit->add_option("--output", output, "report path (default stdout)");

    GenSpec gen;
    std::string gen_output;
    CLI::App* gen_cmd = app.add_subcommand("gen", "write a synthetic signal");
    add_gen_options(gen_cmd, gen);
    gen_cmd->add_option("--seed", gen.seed, "generator seed");
    gen_cmd->add_option("--output", gen_output, "signal path (default stdout)");

    std::size_t bench_max_n = 4096;
    double bench_penalty = 1.0, bench_epsilon = 0.1;
    std::uint64_t bench_seed = 1;
    CLI::App* bench = app.add_subcommand("bench", "solver scaling table");
    bench->add_option("--max-n", bench_max_n, "largest size (ladder starts at 256)");
    bench->add_option("--penalty", bench_penalty, "per-segment cost C");
    bench->add_option("--epsilon", bench_epsilon, "tolerance for approximate solvers");
    bench->add_option("--seed", bench_seed, "generator seed");

    std::uint64_t selftest_seed = 7;
    CLI::App* selftest = app.add_subcommand("selftest", "oracle-equivalence suite");
    selftest->add_option("--seed", selftest_seed, "trial seed");

    CLI11_PARSE(app, argc, argv);

    try {
        if (fit->parsed()) {
            if (!input.empty()) spec.input_path = input;
            if (use_gen) {
                fit_gen.seed = spec.seed;
                spec.gen = fit_gen;
            }
            if (*eps_opt) spec.epsilon = eps;
            return cmd_fit(spec, output);
        }
        if (gen_cmd->parsed()) return cmd_gen(gen, gen_output);
        if (bench->parsed())
            return cmd_bench(bench_max_n, bench_penalty, bench_epsilon, bench_seed);
        if (selftest->parsed()) return cmd_selftest(selftest_seed);
    } catch (const segdp::RunError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return e.exit_code;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 0;
}
