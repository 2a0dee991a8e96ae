#include "segdp/exact_dp.hpp"

#include <cmath>
#include <stdexcept>

namespace segdp {

namespace {

void check_nonempty(const Signal& sig) {
    if (sig.empty())
        throw std::invalid_argument("solver: signal must be nonempty");
}

} // namespace

DPTable exact_dp_table(const Signal& sig, const SolverConfig& cfg, SolveStats* stats) {
    check_nonempty(sig);
    cfg.validate();
    const std::size_t n = sig.size();
    DPTable t;
    t.opt.assign(n + 1, 0.0);
    t.arg.assign(n + 1, 0);
    std::uint64_t transitions = 0;
    for (std::size_t i = 1; i <= n; ++i) {
        double best = 0.0;
        std::size_t best_j = 0;
        for (std::size_t j = 0; j < i; ++j) {
            const double cost = t.opt[j] + weight_w(sig, cfg, j, i);
            ++transitions;
            if (j == 0 || cost <= best) { // ties toward largest j
                best = cost;
                best_j = j;
            }
        }
        t.opt[i] = best;
        t.arg[i] = best_j;
    }
    if (stats) stats->transitions += transitions;
    return t;
}

SegmentationResult solve_exact(const Signal& sig, const SolverConfig& cfg) {
    SolveStats stats;
    DPTable t = exact_dp_table(sig, cfg, &stats);
    return result_from_predecessors(sig, t.arg, t.opt[sig.size()], "exact", stats);
}

SegmentationResult solve_bruteforce(const Signal& sig, const SolverConfig& cfg) {
    check_nonempty(sig);
    cfg.validate();
    const std::size_t n = sig.size();
    if (n > 20)
        throw std::invalid_argument("solve_bruteforce: n > 20 not supported");

    SolveStats stats;
    double best = 0.0;
    std::uint64_t best_mask = 0;
    const std::uint64_t masks = 1ull << (n - 1);
    for (std::uint64_t mask = 0; mask < masks; ++mask) {
        // bit b set = breakpoint after position b+1
        double total = 0.0;
        std::size_t prev = 0;
        for (std::size_t i = 1; i <= n; ++i) {
            if (i == n || (mask >> (i - 1)) & 1u) {
                total += segment_sse(sig, prev, i) + cfg.penalty;
                prev = i;
                ++stats.transitions;
            }
        }
        if (mask == 0 || total < best) {
            best = total;
            best_mask = mask;
        }
    }

    SegmentationResult res;
    for (std::size_t i = 1; i <= n; ++i)
        if (i == n || (best_mask >> (i - 1)) & 1u) res.boundaries.push_back(i);
    res.levels = segment_means(sig, res.boundaries);
    res.value = best;
    res.solver_name = "brute";
    res.stats = stats;
    return res;
}

SplitWindow::SplitWindow(const Signal& sig, double penalty)
    : sig_(sig), threshold_(2.0 * std::sqrt(2.0 * penalty)) {}

std::size_t SplitWindow::advance() {
    const std::size_t i = next_++;
    const double p = sig_.value(i);

    // Largest j < i with P_j > P_i + threshold. Stack values are strictly
    // decreasing, so qualifying entries form a prefix; any qualifying index
    // not on the stack is dominated by a later stack entry.
    if (!max_stack_.empty() && sig_.value(max_stack_.front()) > p + threshold_) {
        std::size_t lo = 0, hi = max_stack_.size() - 1;
        while (lo < hi) {
            const std::size_t mid = (lo + hi + 1) / 2;
            if (sig_.value(max_stack_[mid]) > p + threshold_)
                lo = mid;
            else
                hi = mid - 1;
        }
        bound_ = std::max(bound_, max_stack_[lo]);
    }
    if (!min_stack_.empty() && sig_.value(min_stack_.front()) < p - threshold_) {
        std::size_t lo = 0, hi = min_stack_.size() - 1;
        while (lo < hi) {
            const std::size_t mid = (lo + hi + 1) / 2;
            if (sig_.value(min_stack_[mid]) < p - threshold_)
                lo = mid;
            else
                hi = mid - 1;
        }
        bound_ = std::max(bound_, min_stack_[lo]);
    }

    while (!max_stack_.empty() && sig_.value(max_stack_.back()) <= p)
        max_stack_.pop_back();
    max_stack_.push_back(i);
    while (!min_stack_.empty() && sig_.value(min_stack_.back()) >= p)
        min_stack_.pop_back();
    min_stack_.push_back(i);

    return bound_;
}

std::size_t prune_window(const Signal& sig, const SolverConfig& cfg, std::size_t i) {
    if (i < 1 || i > sig.size())
        throw std::invalid_argument("prune_window: need 1 <= i <= n");
    cfg.validate();
    SplitWindow win(sig, cfg.penalty);
    std::size_t bound = 0;
    for (std::size_t k = 1; k <= i; ++k) bound = win.advance();
    return bound;
}

SegmentationResult solve_exact_pruned(const Signal& sig, const SolverConfig& cfg) {
    check_nonempty(sig);
    cfg.validate();
    const std::size_t n = sig.size();
    std::vector<double> opt(n + 1, 0.0);
    std::vector<std::size_t> arg(n + 1, 0);
    SolveStats stats;
    SplitWindow win(sig, cfg.penalty);
    for (std::size_t i = 1; i <= n; ++i) {
        const std::size_t lo = win.advance();
        double best = 0.0;
        std::size_t best_j = 0;
        for (std::size_t j = lo; j < i; ++j) {
            const double cost = opt[j] + weight_w(sig, cfg, j, i);
            ++stats.transitions;
            if (j == lo || cost <= best) {
                best = cost;
                best_j = j;
            }
        }
        opt[i] = best;
        arg[i] = best_j;
    }
    return result_from_predecessors(sig, arg, opt[n], "exact-pruned", stats);
}

} // namespace segdp
