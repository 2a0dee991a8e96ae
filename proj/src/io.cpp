#include "segdp/io.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstring>
#include <fstream>
#include <random>
#include <sstream>

#include "segdp/additive.hpp"
#include "segdp/exact_dp.hpp"
#include "segdp/multiscale.hpp"

namespace segdp {

namespace {

bool parse_double(const std::string& field, double& out) {
    const char* s = field.c_str();
    char* end = nullptr;
    out = std::strtod(s, &end);
    if (end == s) return false;
    while (*end == ' ' || *end == '\t' || *end == '\r') ++end;
    return *end == '\0';
}

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

} // namespace

Signal parse_signal(std::istream& in, const std::string& origin) {
    std::vector<double> values;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        // take the first CSV field; blank lines at the end are tolerated
        std::string field = line.substr(0, line.find(','));
        while (!field.empty() && (field.back() == '\r' || field.back() == ' '))
            field.pop_back();
        if (field.empty()) continue;
        double v;
        if (!parse_double(field, v)) {
            if (lineno == 1 && values.empty()) continue; // header line
            throw RunError(2, origin + ": non-numeric value at line " +
                                  std::to_string(lineno));
        }
        if (!std::isfinite(v))
            throw RunError(2, origin + ": non-finite value at line " + std::to_string(lineno));
        values.push_back(v);
    }
    if (values.empty()) throw RunError(2, origin + ": empty signal");
    return Signal(std::move(values));
}

Signal read_signal(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw RunError(2, "cannot open input file: " + path);
    return parse_signal(in, path);
}

Generated gen_signal(const GenSpec& spec) {
    if (spec.segments < 1) throw RunError(3, "gen: segments must be >= 1");
    if (spec.length < spec.segments) throw RunError(3, "gen: need length >= segments");
    if (spec.noise < 0) throw RunError(3, "gen: noise must be nonnegative");

    std::mt19937_64 rng(spec.seed);
    const std::size_t n = spec.length;

    // distinct cut positions in 1..n-1
    std::vector<std::size_t> cuts;
    std::uniform_int_distribution<std::size_t> cut_dist(1, n - 1);
    while (cuts.size() + 1 < spec.segments) {
        const std::size_t c = cut_dist(rng);
        if (std::find(cuts.begin(), cuts.end(), c) == cuts.end()) cuts.push_back(c);
    }
    std::sort(cuts.begin(), cuts.end());
    cuts.push_back(n);

    std::uniform_real_distribution<double> stretch(1.0, 1.25);
    std::normal_distribution<double> noise(0.0, spec.noise > 0 ? spec.noise : 1.0);
    std::vector<double> values;
    values.reserve(n);
    double level = 0.0;
    double sign = 1.0;
    std::size_t prev = 0;
    for (std::size_t b : cuts) {
        for (std::size_t k = prev; k < b; ++k)
            values.push_back(level + (spec.noise > 0 ? noise(rng) : 0.0));
        level += sign * spec.jump * stretch(rng);
        sign = -sign;
        prev = b;
    }
    return {Signal(std::move(values)), std::move(cuts)};
}

std::uint64_t signal_checksum(const Signal& sig) {
    std::uint64_t h = 14695981039346656037ull; // FNV-1a
    for (double v : sig.values()) {
        std::uint64_t bits;
        std::memcpy(&bits, &v, sizeof bits);
        for (int b = 0; b < 8; ++b) {
            h ^= (bits >> (8 * b)) & 0xffu;
            h *= 1099511628211ull;
        }
    }
    return h;
}

RunReport run_on_signal(const Signal& sig, const RunSpec& spec) {
    SolverConfig cfg;
    cfg.penalty = spec.penalty;
    const bool approximate = spec.solver == "monge" || spec.solver == "halfspace";
    if (approximate) {
        if (!spec.epsilon) throw RunError(3, spec.solver + ": --epsilon is required");
        cfg.epsilon = *spec.epsilon;
    } else if (spec.epsilon) {
        cfg.epsilon = *spec.epsilon;
    }
    if (cfg.penalty < 0) throw RunError(3, "penalty must be nonnegative");
    if (approximate && !(cfg.epsilon > 0)) throw RunError(3, "epsilon must be positive");

    RunReport rep;
    rep.solver = spec.solver;
    rep.n = sig.size();
    rep.penalty = cfg.penalty;
    rep.epsilon = approximate ? cfg.epsilon : 0.0;
    rep.seed = spec.seed;
    rep.input_checksum = signal_checksum(sig);

    const auto t0 = std::chrono::steady_clock::now();
    try {
        if (spec.solver == "exact")
            rep.result = solve_exact(sig, cfg);
        else if (spec.solver == "exact-pruned")
            rep.result = solve_exact_pruned(sig, cfg);
        else if (spec.solver == "brute")
            rep.result = solve_bruteforce(sig, cfg);
        else if (spec.solver == "monge")
            rep.result = solve_multiscale(sig, cfg);
        else if (spec.solver == "halfspace")
            rep.result = solve_additive(sig, cfg, HalfspaceBackend::Tree);
        else
            throw RunError(3, "unknown solver: " + spec.solver);
    } catch (const std::invalid_argument& e) {
        throw RunError(4, e.what());
    }
    const auto t1 = std::chrono::steady_clock::now();
    rep.wall_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    return rep;
}

RunReport run(const RunSpec& spec) {
    if (spec.input_path.has_value() == spec.gen.has_value())
        throw RunError(3, "exactly one of --input and --gen must be given");
    Signal sig = spec.input_path ? read_signal(*spec.input_path) : gen_signal(*spec.gen).signal;
    return run_on_signal(sig, spec);
}

std::string serialize_report(const RunReport& r) {
    std::ostringstream out;
    out << "solver: " << r.solver << "\n";
    out << "n: " << r.n << "\n";
    out << "penalty: " << fmt(r.penalty) << "\n";
    out << "epsilon: " << fmt(r.epsilon) << "\n";
    out << "seed: " << r.seed << "\n";
    out << "checksum: " << r.input_checksum << "\n";
    out << "value: " << fmt(r.result.value) << "\n";
    out << "segments: " << r.result.num_segments() << "\n";
    out << "boundaries:";
    for (std::size_t b : r.result.boundaries) out << ' ' << b;
    out << "\n";
    out << "levels:";
    for (double l : r.result.levels) out << ' ' << fmt(l);
    out << "\n";
    out << "transitions: " << r.result.stats.transitions << "\n";
    out << "queries: " << r.result.stats.queries << "\n";
    out << "wall_ms: " << fmt(r.wall_ms) << "\n";
    return out.str();
}

RunReport parse_report(std::istream& in) {
    RunReport r;
    std::string line;
    while (std::getline(in, line)) {
        const auto colon = line.find(':');
        if (colon == std::string::npos) continue;
        const std::string key = line.substr(0, colon);
        std::istringstream rest(line.substr(colon + 1));
        if (key == "solver")
            rest >> r.solver;
        else if (key == "n")
            rest >> r.n;
        else if (key == "penalty")
            rest >> r.penalty;
        else if (key == "epsilon")
            rest >> r.epsilon;
        else if (key == "seed")
            rest >> r.seed;
        else if (key == "checksum")
            rest >> r.input_checksum;
        else if (key == "value")
            rest >> r.result.value;
        else if (key == "boundaries") {
            std::size_t b;
            while (rest >> b) r.result.boundaries.push_back(b);
        } else if (key == "levels") {
            double l;
            while (rest >> l) r.result.levels.push_back(l);
        } else if (key == "transitions")
            rest >> r.result.stats.transitions;
        else if (key == "queries")
            rest >> r.result.stats.queries;
        else if (key == "wall_ms")
            rest >> r.wall_ms;
    }
    r.result.solver_name = r.solver;
    return r;
}

} // namespace segdp
