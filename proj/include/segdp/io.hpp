#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>

#include "segdp/result.hpp"
#include "segdp/signal.hpp"

namespace segdp {

// exit codes: 0 success, 2 input error, 3 config error, 4 solver precondition
struct RunError : std::runtime_error {
    int exit_code;
    RunError(int code, const std::string& msg) : std::runtime_error(msg), exit_code(code) {}
};

// One decimal real per line; a single CSV column is accepted (first field),
// and a non-numeric header line is skipped.
Signal read_signal(const std::string& path);
Signal parse_signal(std::istream& in, const std::string& origin);

struct GenSpec {
    std::size_t segments = 1;
    std::size_t length = 0;
    double jump = 10.0;
    double noise = 0.0;
    std::uint64_t seed = 0;
};

struct Generated {
    Signal signal;
    std::vector<std::size_t> true_boundaries; // segment end indices, last = n
};

// Piecewise-constant fixture: adjacent levels separated by >= jump, additive
// gaussian noise, deterministic for a fixed seed.
Generated gen_signal(const GenSpec& spec);

struct RunSpec {
    std::optional<std::string> input_path;
    std::optional<GenSpec> gen;
    std::string solver = "exact"; // exact | exact-pruned | brute | monge | halfspace
    double penalty = 1.0;
    std::optional<double> epsilon;
    std::uint64_t seed = 0;
};

struct RunReport {
    std::string solver;
    std::size_t n = 0;
    double penalty = 0.0;
    double epsilon = 0.0;
    std::uint64_t seed = 0;
    std::uint64_t input_checksum = 0;
    SegmentationResult result;
    double wall_ms = 0.0;
};

RunReport run(const RunSpec& spec);
RunReport run_on_signal(const Signal& sig, const RunSpec& spec);

// Stable key/value serialization; byte-identical for identical runs apart
// from the wall_ms line.
std::string serialize_report(const RunReport& report);
RunReport parse_report(std::istream& in);

std::uint64_t signal_checksum(const Signal& sig);

} // namespace segdp
