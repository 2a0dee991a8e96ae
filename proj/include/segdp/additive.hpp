#pragma once

#include <optional>

#include "segdp/halfspace.hpp"
#include "segdp/result.hpp"
#include "segdp/signal.hpp"

namespace segdp {

// Upper bound n * U^2 on the objective, U = max(sqrt(C), max |P_i|).
double value_cap(const Signal& sig, const SolverConfig& cfg);

// Per-state record of the value binary searches.
struct AdditiveState {
    std::vector<double> dp_tilde;  // shifted approximations, dp_tilde[0] = 0
    std::vector<double> opt_tilde; // dp_tilde[i] + Q_i (the searched quantity)
    std::vector<std::size_t> witness;
    std::vector<std::pair<double, double>> bounds; // final (low, high) per state
};

// Lifted point for DP state j: (j, DP~_j, 2 S_j, S_j^2 + j DP~_j).
Point4 lift_state(const Signal& sig, std::size_t j, double dp_tilde_j);

// Decision: is there a j < i with DP~_j + w~(j,i) + Q_i <= v? Candidate v is
// in objective units; the halfspace normal is (x, i, S_i, -1) with
// x = v - Q_i - C and threshold x*i + S_i^2.
std::optional<std::uint64_t> feasibility_query(const PointSet4D& pts, const Signal& sig,
                                               const SolverConfig& cfg, std::size_t i,
                                               double v);

// Additive-epsilon solver: per-state binary search over [0, n U^2] with
// emptiness queries, |value - exact| <= epsilon.
SegmentationResult solve_additive(const Signal& sig, const SolverConfig& cfg,
                                  HalfspaceBackend backend = HalfspaceBackend::LinearScan,
                                  AdditiveState* trace = nullptr);

} // namespace segdp
