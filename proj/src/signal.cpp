#include "segdp/signal.hpp"

#include <cmath>
#include <stdexcept>

namespace segdp {

Signal::Signal(std::vector<double> values) : values_(std::move(values)) {
    for (double v : values_) {
        if (!std::isfinite(v))
            throw std::invalid_argument("Signal: values must be finite");
    }
    const std::size_t n = values_.size();
    sum_.resize(n + 1, 0.0);
    sq_.resize(n + 1, 0.0);
    for (std::size_t i = 1; i <= n; ++i) {
        sum_[i] = sum_[i - 1] + values_[i - 1];
        sq_[i] = sq_[i - 1] + values_[i - 1] * values_[i - 1];
    }
}

void SolverConfig::validate() const {
    if (penalty < 0)
        throw std::invalid_argument("SolverConfig: penalty must be nonnegative");
    if (!(epsilon > 0))
        throw std::invalid_argument("SolverConfig: epsilon must be positive");
}

namespace detail {
void check_span(const Signal& sig, std::size_t j, std::size_t i) {
    if (!(j < i) || i > sig.size())
        throw std::invalid_argument("weight function: need 0 <= j < i <= n");
}
} // namespace detail

double segment_sse(const Signal& sig, std::size_t j, std::size_t i) {
    detail::check_span(sig, j, i);
    const double ds = sig.prefix_sum(i) - sig.prefix_sum(j);
    const double dq = sig.prefix_sq(i) - sig.prefix_sq(j);
    const double sse = dq - ds * ds / static_cast<double>(i - j);
    return sse > 0 ? sse : 0.0; // clamp rounding residue
}

double weight_w(const Signal& sig, const SolverConfig& cfg, std::size_t j, std::size_t i) {
    return segment_sse(sig, j, i) + cfg.penalty;
}

double weight_shifted(const Signal& sig, const SolverConfig& cfg, std::size_t j, std::size_t i) {
    detail::check_span(sig, j, i);
    const double ds = sig.prefix_sum(i) - sig.prefix_sum(j);
    return -ds * ds / static_cast<double>(i - j) + cfg.penalty;
}

double weight_wprime(const Signal& sig, std::size_t j, std::size_t i) {
    detail::check_span(sig, j, i);
    const double ds = sig.prefix_sum(i) - sig.prefix_sum(j);
    const double dq = sig.prefix_sq(i) - sig.prefix_sq(j);
    const double wp = static_cast<double>(i - j) * dq - ds * ds;
    return wp > 0 ? wp : 0.0;
}

} // namespace segdp
