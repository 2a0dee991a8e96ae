#include "segdp/additive.hpp"

#include <cmath>
#include <stdexcept>

namespace segdp {

double value_cap(const Signal& sig, const SolverConfig& cfg) {
    if (sig.empty()) throw std::invalid_argument("value_cap: signal must be nonempty");
    double u = std::sqrt(cfg.penalty);
    for (double p : sig.values()) u = std::max(u, std::fabs(p));
    return static_cast<double>(sig.size()) * u * u;
}

Point4 lift_state(const Signal& sig, std::size_t j, double dp_tilde_j) {
    const double sj = sig.prefix_sum(j);
    Point4 p;
    p.coords = {static_cast<double>(j), dp_tilde_j, 2.0 * sj,
                sj * sj + static_cast<double>(j) * dp_tilde_j};
    p.tag = j;
    return p;
}

std::optional<std::uint64_t> feasibility_query(const PointSet4D& pts, const Signal& sig,
                                               const SolverConfig& cfg, std::size_t i,
                                               double v) {
    const double x = v - sig.prefix_sq(i) - cfg.penalty;
    const double si = sig.prefix_sum(i);
    Halfspace4 h;
    h.normal = {x, static_cast<double>(i), si, -1.0};
    h.threshold = x * static_cast<double>(i) + si * si;
    return pts.query(h);
}

SegmentationResult solve_additive(const Signal& sig, const SolverConfig& cfg,
                                  HalfspaceBackend backend, AdditiveState* trace) {
    if (sig.empty()) throw std::invalid_argument("solve_additive: signal must be nonempty");
    cfg.validate();

    const std::size_t n = sig.size();
    const double cap = cfg.value_cap > 0 ? cfg.value_cap : value_cap(sig, cfg);
    const double slab = cfg.epsilon / static_cast<double>(n);

    PointSet4D pts(backend);
    pts.insert(lift_state(sig, 0, 0.0));

    std::vector<double> dp_tilde(n + 1, 0.0);
    std::vector<std::size_t> pred(n + 1, 0);
    SolveStats stats;
    if (trace) {
        trace->dp_tilde.assign(n + 1, 0.0);
        trace->opt_tilde.assign(n + 1, 0.0);
        trace->witness.assign(n + 1, 0);
        trace->bounds.assign(n + 1, {0.0, 0.0});
    }

    for (std::size_t i = 1; i <= n; ++i) {
        double low = 0.0, high = cap;
        while (high - low > slab) {
            const double mid = (low + high) / 2.0;
            ++stats.queries;
            if (feasibility_query(pts, sig, cfg, i, mid))
                high = mid;
            else
                low = mid;
        }
        // one extra query at the feasible end to fetch the witness
        ++stats.queries;
        std::size_t wit = i - 1;
        if (auto w = feasibility_query(pts, sig, cfg, i, high)) wit = *w;

        const double opt_tilde_i = (low + high) / 2.0;
        dp_tilde[i] = opt_tilde_i - sig.prefix_sq(i);
        pred[i] = wit;
        if (trace) {
            trace->dp_tilde[i] = dp_tilde[i];
            trace->opt_tilde[i] = opt_tilde_i;
            trace->witness[i] = wit;
            trace->bounds[i] = {low, high};
        }
        if (i < n) pts.insert(lift_state(sig, i, dp_tilde[i]));
    }

    return result_from_predecessors(sig, pred, dp_tilde[n] + sig.prefix_sq(n), "halfspace",
                                    stats);
}

} // namespace segdp
