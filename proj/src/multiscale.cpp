#include "segdp/multiscale.hpp"

#include <cmath>
#include <memory>
#include <stdexcept>

#include "segdp/monge_engine.hpp"

namespace segdp {

std::size_t band_count(std::size_t n, double epsilon) {
    if (n < 1) throw std::invalid_argument("band_count: n must be >= 1");
    if (!(epsilon > 0)) throw std::invalid_argument("band_count: epsilon must be positive");
    if (n == 1) return 1;
    const double m = std::ceil(std::log(static_cast<double>(n)) / std::log1p(epsilon) - 1e-12);
    return std::max<std::size_t>(1, static_cast<std::size_t>(m));
}

BandedWeight::BandedWeight(const Signal& sig, std::size_t band_index, double epsilon)
    : sig_(&sig) {
    if (band_index < 1) throw std::invalid_argument("BandedWeight: band index is 1-based");
    const double ratio = 1.0 + epsilon;
    c_prime_ = std::pow(ratio, static_cast<double>(band_index - 1));
    const double hi = c_prime_ * ratio;
    // integer-safe band limits; lengths landing exactly on a power belong to
    // both adjacent bands
    const double guard = 1e-9;
    min_len_ = static_cast<std::size_t>(std::ceil(c_prime_ - guard * c_prime_ - guard));
    max_len_ = static_cast<std::size_t>(std::floor(hi + guard * hi + guard));
    if (min_len_ < 1) min_len_ = 1;
}

ExtendedCost BandedWeight::operator()(std::size_t j, std::size_t i) const {
    detail::check_span(*sig_, j, i);
    const std::size_t len = i - j;
    if (len < min_len_)
        return ExtendedCost::sentinel(static_cast<std::int64_t>(sig_->size() - i + j));
    if (len > max_len_)
        return ExtendedCost::sentinel(static_cast<std::int64_t>(len));
    return ExtendedCost::finite(weight_wprime(*sig_, j, i) / c_prime_);
}

SegmentationResult solve_multiscale(const Signal& sig, const SolverConfig& cfg) {
    if (sig.empty())
        throw std::invalid_argument("solve_multiscale: signal must be nonempty");
    cfg.validate();
    if (!(cfg.penalty > 0))
        throw std::invalid_argument("penalty must be positive for multiplicative mode");

    const std::size_t n = sig.size();
    const std::size_t m = band_count(n, cfg.epsilon);

    std::vector<BandedWeight> bands;
    std::vector<std::unique_ptr<MongeEngine>> engines;
    bands.reserve(m);
    engines.reserve(m);
    for (std::size_t k = 1; k <= m; ++k) {
        bands.emplace_back(sig, k, cfg.epsilon);
        const BandedWeight& bw = bands.back();
        engines.push_back(std::make_unique<MongeEngine>(
            [&bw](std::size_t j, std::size_t i) { return bw(j, i); }, n));
    }

    std::vector<double> opt(n + 1, 0.0);
    std::vector<std::size_t> pred(n + 1, 0);
    for (auto& e : engines) e->push_a(0, ExtendedCost::finite(0.0));

    for (std::size_t i = 1; i <= n; ++i) {
        bool have = false;
        ExtendedCost best;
        std::size_t best_j = 0;
        for (auto& e : engines) {
            auto [val, j] = e->query_min(i);
            if (!have || val < best || (val == best && j > best_j)) {
                best = val;
                best_j = j;
                have = true;
            }
        }
        if (!best.is_finite())
            throw std::logic_error("solve_multiscale: no band covers a transition length");
        opt[i] = best.finite_part() + cfg.penalty;
        pred[i] = best_j;
        if (i < n)
            for (auto& e : engines) e->push_a(i, ExtendedCost::finite(opt[i]));
    }

    SolveStats stats;
    for (auto& e : engines) stats.queries += e->evaluations();
    stats.transitions = n * m;
    return result_from_predecessors(sig, pred, opt[n], "monge", stats);
}

} // namespace segdp
