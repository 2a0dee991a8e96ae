#pragma once

#include "segdp/result.hpp"
#include "segdp/signal.hpp"

namespace segdp {

// Exact DP table: opt[i] is the optimal objective for the prefix P_1..P_i
// (opt[0] = 0), arg[i] the tie-broken predecessor (largest j among minima).
struct DPTable {
    std::vector<double> opt;
    std::vector<std::size_t> arg;
};

DPTable exact_dp_table(const Signal& sig, const SolverConfig& cfg,
                       SolveStats* stats = nullptr);

// Exact O(n^2) solver.
SegmentationResult solve_exact(const Signal& sig, const SolverConfig& cfg);

// Exhaustive enumeration of all 2^(n-1) breakpoint subsets. Verification
// oracle only; refuses n > 20.
SegmentationResult solve_bruteforce(const Signal& sig, const SolverConfig& cfg);

// Incremental lower bound on the admissible predecessor j for each state i:
// a pair i1 < i2 <= i with |P_{i1} - P_{i2}| > 2 sqrt(2C) cannot share a
// segment, so the last segment (j, i] must have j >= i1.
class SplitWindow {
public:
    SplitWindow(const Signal& sig, double penalty);

    // Processes the next position (1, 2, ...) and returns the lower bound for
    // transitions into it.
    std::size_t advance();

private:
    const Signal& sig_;
    double threshold_;
    std::size_t next_ = 1;
    std::size_t bound_ = 0;
    // Monotone stacks over processed indices: max_stack_ holds strictly
    // decreasing P values (suffix maxima), min_stack_ strictly increasing.
    std::vector<std::size_t> max_stack_;
    std::vector<std::size_t> min_stack_;
};

// Smallest admissible predecessor for state i (standalone form of SplitWindow).
std::size_t prune_window(const Signal& sig, const SolverConfig& cfg, std::size_t i);

// Exact solver with the split-window pruning; identical optimum.
SegmentationResult solve_exact_pruned(const Signal& sig, const SolverConfig& cfg);

} // namespace segdp
