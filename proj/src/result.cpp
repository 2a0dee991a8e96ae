#include "segdp/result.hpp"

#include <algorithm>

namespace segdp {

double objective_of(const Signal& sig, const std::vector<std::size_t>& boundaries,
                    double penalty) {
    double total = 0.0;
    std::size_t prev = 0;
    for (std::size_t b : boundaries) {
        total += segment_sse(sig, prev, b) + penalty;
        prev = b;
    }
    return total;
}

std::vector<double> segment_means(const Signal& sig,
                                  const std::vector<std::size_t>& boundaries) {
    std::vector<double> means;
    means.reserve(boundaries.size());
    std::size_t prev = 0;
    for (std::size_t b : boundaries) {
        means.push_back((sig.prefix_sum(b) - sig.prefix_sum(prev)) /
                        static_cast<double>(b - prev));
        prev = b;
    }
    return means;
}

SegmentationResult result_from_predecessors(const Signal& sig,
                                            const std::vector<std::size_t>& pred,
                                            double value, std::string solver_name,
                                            SolveStats stats) {
    SegmentationResult res;
    std::size_t i = sig.size();
    while (i > 0) {
        res.boundaries.push_back(i);
        i = pred[i];
    }
    std::reverse(res.boundaries.begin(), res.boundaries.end());
    res.levels = segment_means(sig, res.boundaries);
    res.value = value;
    res.solver_name = std::move(solver_name);
    res.stats = stats;
    return res;
}

} // namespace segdp
