// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Runs the full property checks at their stated tolerances.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <vector>

#include "segdp/additive.hpp"
#include "segdp/exact_dp.hpp"
#include "segdp/halfspace.hpp"
#include "segdp/io.hpp"
#include "segdp/monge_engine.hpp"
#include "segdp/multiscale.hpp"
#include "test_util.hpp"

using namespace segdp;
using namespace segdp::testutil;

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

bool report(int id, const char* name, bool pass, const std::string& detail) {
    std::printf("[%s] criterion %d: %s%s%s\n", pass ? "PASS" : "FAIL", id, name,
                detail.empty() ? "" : " — ", detail.c_str());
    std::fflush(stdout);
    return pass;
}

// ---------------------------------------------------------------- criterion 1
bool exactness() {
    const auto t0 = std::chrono::steady_clock::now();
    std::mt19937_64 rng(101);
    std::uniform_int_distribution<std::size_t> len(1, 12);
    const double penalties[] = {0.1, 1.0, 10.0};
    std::size_t instances = 0, mismatches = 0;
    for (int trial = 0; trial < 350; ++trial) {
        Signal sig = random_signal(rng, len(rng));
        for (double c : penalties) {
            SolverConfig cfg;
            cfg.penalty = c;
            const double exact = solve_exact(sig, cfg).value;
            const double brute = solve_bruteforce(sig, cfg).value;
            if (!close_rel(exact, brute)) ++mismatches;
            ++instances;
        }
    }
    const double secs = seconds_since(t0);
    char buf[128];
    std::snprintf(buf, sizeof buf, "%zu instances, %zu mismatches, %.1f s", instances,
                  mismatches, secs);
    return report(1, "exact = brute force within 1e-9 relative",
                  mismatches == 0 && instances >= 1000 && secs < 30.0, buf);
}

// ---------------------------------------------------------------- criterion 2
bool additive_guarantee() {
    const auto t0 = std::chrono::steady_clock::now();
    std::mt19937_64 rng(102);
    std::uniform_int_distribution<std::size_t> len(2, 500);
    std::size_t instances = 0, value_fails = 0, state_fails = 0;
    for (double eps : {0.01, 0.001}) {
        for (int trial = 0; trial < 50; ++trial) {
            Signal sig = random_signal(rng, len(rng));
            const std::size_t n = sig.size();
            SolverConfig cfg;
            cfg.penalty = 1.0;
            cfg.epsilon = eps;
            AdditiveState trace;
            const SegmentationResult res =
                solve_additive(sig, cfg, HalfspaceBackend::LinearScan, &trace);
            const DPTable exact = exact_dp_table(sig, cfg);
            if (std::fabs(res.value - exact.opt[n]) > eps) ++value_fails;
            for (std::size_t i = 1; i <= n; ++i) {
                const double dp_exact = exact.opt[i] - sig.prefix_sq(i);
                const double budget = eps * static_cast<double>(i) / static_cast<double>(n);
                if (std::fabs(trace.dp_tilde[i] - dp_exact) > budget + 1e-12) {
                    ++state_fails;
                    break;
                }
            }
            ++instances;
        }
    }
    const double secs = seconds_since(t0);
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "%zu instances, %zu endpoint misses, %zu per-state misses, %.1f s",
                  instances, value_fails, state_fails, secs);
    return report(2, "|additive - exact| <= eps and per-state budget i*eps/n",
                  instances >= 100 && value_fails == 0 && state_fails == 0 && secs < 120.0,
                  buf);
}

// ---------------------------------------------------------------- criterion 3
bool multiplicative_guarantee() {
    const auto t0 = std::chrono::steady_clock::now();
    std::mt19937_64 rng(103);
    std::uniform_int_distribution<std::size_t> len(1, 500);
    std::size_t instances = 0, fails = 0;
    for (double eps : {0.5, 0.1}) {
        for (int trial = 0; trial < 50; ++trial) {
            Signal sig = random_signal(rng, len(rng));
            SolverConfig cfg;
            cfg.penalty = 1.0;
            cfg.epsilon = eps;
            const double exact = solve_exact(sig, cfg).value;
            const double approx = solve_multiscale(sig, cfg).value;
            const double slack = 1e-9 * std::max(1.0, exact);
            if (approx < exact - slack || approx > (1.0 + eps) * exact + slack) ++fails;
            ++instances;
        }
    }
    const double secs = seconds_since(t0);
    char buf[128];
    std::snprintf(buf, sizeof buf, "%zu instances, %zu envelope misses, %.1f s", instances,
                  fails, secs);
    return report(3, "exact <= multiscale <= (1+eps) * exact",
                  instances >= 100 && fails == 0 && secs < 60.0, buf);
}

// ---------------------------------------------------------------- criterion 4
bool monge_properties() {
    std::mt19937_64 rng(104);
    std::size_t violations = 0, tuples = 0;

    // quadrangle inequality for w': exhaustive for n <= 12
    for (std::size_t n = 4; n <= 12; ++n) {
        Signal sig = random_signal(rng, n);
        for (std::size_t i1 = 0; i1 + 3 <= n; ++i1)
            for (std::size_t i2 = i1 + 1; i2 + 2 <= n; ++i2)
                for (std::size_t i3 = i2 + 1; i3 + 1 <= n; ++i3)
                    for (std::size_t i4 = i3 + 1; i4 <= n; ++i4) {
                        const double lhs =
                            weight_wprime(sig, i1, i4) + weight_wprime(sig, i2, i3);
                        const double rhs =
                            weight_wprime(sig, i1, i3) + weight_wprime(sig, i2, i4);
                        if (lhs < rhs - 1e-9) ++violations;
                        ++tuples;
                    }
    }
    // quadrangle inequality for w' sampled at n = 200
    {
        const std::size_t n = 200;
        Signal sig = random_signal(rng, n);
        std::uniform_int_distribution<std::size_t> idx(0, n);
        std::size_t sampled = 0;
        while (sampled < 100000) {
            std::size_t q[4] = {idx(rng), idx(rng), idx(rng), idx(rng)};
            std::sort(q, q + 4);
            if (q[0] == q[1] || q[1] == q[2] || q[2] == q[3]) continue;
            const double lhs = weight_wprime(sig, q[0], q[3]) + weight_wprime(sig, q[1], q[2]);
            const double rhs = weight_wprime(sig, q[0], q[2]) + weight_wprime(sig, q[1], q[3]);
            if (lhs < rhs - 1e-9) ++violations;
            ++sampled;
            ++tuples;
        }
    }
    // quadrangle inequality per band in ExtendedCost order: exhaustive small, sampled mid
    for (double eps : {0.5, 0.2}) {
        for (std::size_t n : {10u, 12u}) {
            Signal sig = random_signal(rng, n);
            for (std::size_t k = 1; k <= band_count(n, eps); ++k) {
                BandedWeight bw(sig, k, eps);
                for (std::size_t i1 = 0; i1 + 3 <= n; ++i1)
                    for (std::size_t i2 = i1 + 1; i2 + 2 <= n; ++i2)
                        for (std::size_t i3 = i2 + 1; i3 + 1 <= n; ++i3)
                            for (std::size_t i4 = i3 + 1; i4 <= n; ++i4) {
                                if (bw(i1, i4) + bw(i2, i3) < bw(i1, i3) + bw(i2, i4))
                                    ++violations;
                                ++tuples;
                            }
            }
        }
        const std::size_t n = 120;
        Signal sig = random_signal(rng, n);
        std::uniform_int_distribution<std::size_t> idx(0, n);
        for (std::size_t k = 1; k <= band_count(n, eps); ++k) {
            BandedWeight bw(sig, k, eps);
            std::size_t sampled = 0;
            while (sampled < 1000) {
                std::size_t q[4] = {idx(rng), idx(rng), idx(rng), idx(rng)};
                std::sort(q, q + 4);
                if (q[0] == q[1] || q[1] == q[2] || q[2] == q[3]) continue;
                if (bw(q[0], q[3]) + bw(q[1], q[2]) < bw(q[0], q[2]) + bw(q[1], q[3]))
                    ++violations;
                ++sampled;
                ++tuples;
            }
        }
    }
    char buf[96];
    std::snprintf(buf, sizeof buf, "%zu tuples, %zu violations", tuples, violations);
    return report(4, "quadrangle inequality for w' and every band weight", violations == 0,
                  buf);
}

// ---------------------------------------------------------------- criterion 5
bool engine_equivalence() {
    std::mt19937_64 rng(105);
    std::uniform_int_distribution<std::size_t> len(1, 300);
    std::uniform_real_distribution<double> a_val(-20.0, 20.0);
    std::uniform_real_distribution<double> curve(0.0, 2.0);
    std::size_t oracles = 0, mismatches = 0;
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = len(rng);
        // w(j,i) = g(i-j) + r_j + s_i with convex g
        std::vector<double> g(n + 1, 0.0), r(n), s(n + 1);
        double slope = a_val(rng);
        g[1] = a_val(rng);
        for (std::size_t l = 2; l <= n; ++l) {
            slope += curve(rng);
            g[l] = g[l - 1] + slope;
        }
        for (double& v : r) v = a_val(rng);
        for (double& v : s) v = a_val(rng);
        MongeOracle w = [&](std::size_t j, std::size_t i) {
            return ExtendedCost::finite(g[i - j] + r[j] + s[i]);
        };

        MongeEngine eng(w, n);
        std::vector<ExtendedCost> a;
        bool ok = true;
        for (std::size_t i = 1; i <= n && ok; ++i) {
            a.push_back(ExtendedCost::finite(a_val(rng)));
            eng.push_a(i - 1, a.back());
            auto [val, arg] = eng.query_min(i);
            ExtendedCost nval;
            std::size_t narg = 0;
            for (std::size_t j = 0; j < i; ++j) {
                const ExtendedCost c = a[j] + w(j, i);
                if (j == 0 || c <= nval) {
                    nval = c;
                    narg = j;
                }
            }
            ok = val == nval && arg == narg;
        }
        if (!ok) ++mismatches;
        ++oracles;
    }
    char buf[96];
    std::snprintf(buf, sizeof buf, "%zu oracles, %zu mismatches", oracles, mismatches);
    return report(5, "monge engine matches the naive scan (values and argmins)",
                  oracles >= 200 && mismatches == 0, buf);
}

// ---------------------------------------------------------------- criterion 6
bool oracle_equivalence() {
    std::mt19937_64 rng(106);
    std::uniform_real_distribution<double> coord(-10.0, 10.0);
    std::size_t queries = 0, decision_mismatches = 0;
    for (int trial = 0; trial < 25; ++trial) {
        PointSet4D linear(HalfspaceBackend::LinearScan);
        PointSet4D tree(HalfspaceBackend::Tree);
        std::uint64_t next_tag = 0;
        for (int step = 0; step < 800; ++step) {
            if (step % 2 == 0) {
                Point4 p;
                for (double& c : p.coords) c = coord(rng);
                p.tag = next_tag++;
                linear.insert(p);
                tree.insert(p);
            } else {
                Halfspace4 h;
                do {
                    for (double& c : h.normal) c = coord(rng);
                } while (h.normal == std::array<double, 4>{});
                h.threshold = 3.0 * coord(rng);
                if (linear.query(h).has_value() != tree.query(h).has_value())
                    ++decision_mismatches;
                ++queries;
            }
        }
    }

    // pruned exact solver over the full random suite
    std::uniform_int_distribution<std::size_t> len(1, 12);
    const double penalties[] = {0.1, 1.0, 10.0};
    std::size_t prune_fails = 0, prune_trials = 0;
    for (int trial = 0; trial < 350; ++trial) {
        Signal sig = random_signal(rng, len(rng));
        for (double c : penalties) {
            SolverConfig cfg;
            cfg.penalty = c;
            if (!close_rel(solve_exact(sig, cfg).value, solve_exact_pruned(sig, cfg).value))
                ++prune_fails;
            ++prune_trials;
        }
    }
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "%zu interleaved queries, %zu backend mismatches; %zu pruned trials, %zu "
                  "mismatches",
                  queries, decision_mismatches, prune_trials, prune_fails);
    return report(6, "tree backend = linear scan; pruned solver = exact solver",
                  queries >= 10000 && decision_mismatches == 0 && prune_fails == 0, buf);
}

// ---------------------------------------------------------------- criterion 7
bool scaling_smoke() {
    auto make_signal = [](std::size_t n) {
        GenSpec gen;
        gen.segments = 16;
        gen.length = n;
        gen.jump = 6.0;
        gen.noise = 1.0;
        gen.seed = 77;
        return gen_signal(gen).signal;
    };
    const Signal small = make_signal(4096);
    const Signal large = make_signal(8192);
    SolverConfig cfg;
    cfg.penalty = 1.0;
    cfg.epsilon = 0.2;

    auto timed = [](auto&& fn) {
        const auto t0 = std::chrono::steady_clock::now();
        fn();
        return seconds_since(t0);
    };

    double exact_small = 0, exact_large = 0, ms_small = 0, ms_large = 0;
    double exact_val_small = 0, exact_val_large = 0, ms_val_small = 0, ms_val_large = 0;
    for (int rep = 0; rep < 5; ++rep) {
        exact_small += timed([&] { exact_val_small = solve_exact(small, cfg).value; });
        exact_large += timed([&] { exact_val_large = solve_exact(large, cfg).value; });
        ms_small += timed([&] { ms_val_small = solve_multiscale(small, cfg).value; });
        ms_large += timed([&] { ms_val_large = solve_multiscale(large, cfg).value; });
    }
    const double exact_factor = exact_large / exact_small;
    const double ms_factor = ms_large / ms_small;
    const bool envelope = ms_val_small >= exact_val_small - 1e-9 &&
                          ms_val_small <= 1.2 * exact_val_small + 1e-9 &&
                          ms_val_large >= exact_val_large - 1e-9 &&
                          ms_val_large <= 1.2 * exact_val_large + 1e-9;
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "doubling factors: exact %.2f (need >= 3.4), multiscale %.2f (need <= 3.0)",
                  exact_factor, ms_factor);
    return report(7, "multiscale scales subquadratically, exact quadratically",
                  exact_factor >= 3.4 && ms_factor <= 3.0 && envelope, buf);
}

// ---------------------------------------------------------------- criterion 8
bool recovery_sanity() {
    std::size_t fails = 0, trials = 0;
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        GenSpec gen;
        gen.segments = 1 + seed % 5;
        gen.length = 40 + 13 * seed;
        gen.jump = 10.0; // C = 1, jump >= 10 sqrt(C)
        gen.noise = 0.0;
        gen.seed = seed;
        Generated g = gen_signal(gen);
        SolverConfig cfg;
        cfg.penalty = 1.0;
        if (solve_exact(g.signal, cfg).boundaries != g.true_boundaries) ++fails;
        ++trials;
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "%zu fixtures, %zu misses", trials, fails);
    return report(8, "exact boundaries equal ground truth on zero-noise steps", fails == 0,
                  buf);
}

} // namespace

int main() {
    bool all = true;
    all &= exactness();
    all &= additive_guarantee();
    all &= multiplicative_guarantee();
    all &= monge_properties();
    all &= engine_equivalence();
    all &= oracle_equivalence();
    all &= scaling_smoke();
    all &= recovery_sanity();
    std::printf("%s\n", all ? "acceptance: all criteria passed"
                            : "acceptance: FAILURES present");
    return all ? 0 : 1;
}
