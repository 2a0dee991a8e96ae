#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "segdp/signal.hpp"

namespace segdp {

struct SolveStats {
    std::uint64_t transitions = 0; // DP transitions examined
    std::uint64_t queries = 0;     // oracle / emptiness queries issued
};

// A fitted segmentation. boundaries[k] is the 1-based last index of segment
// k, strictly increasing, ending at n. levels[k] is that segment's mean.
struct SegmentationResult {
    std::vector<std::size_t> boundaries;
    std::vector<double> levels;
    double value = 0.0;
    std::string solver_name;
    SolveStats stats;

    std::size_t num_segments() const { return boundaries.size(); }
};

// Objective of a segmentation: sum of per-segment SSE plus C per segment.
double objective_of(const Signal& sig, const std::vector<std::size_t>& boundaries,
                    double penalty);

std::vector<double> segment_means(const Signal& sig,
                                  const std::vector<std::size_t>& boundaries);

// Walks a predecessor array (pred[i] = argmin j for state i) back from n and
// assembles the result. `value` is the solver's reported objective.
SegmentationResult result_from_predecessors(const Signal& sig,
                                            const std::vector<std::size_t>& pred,
                                            double value, std::string solver_name,
                                            SolveStats stats);

} // namespace segdp
