#pragma once

#include <cstddef>
#include <vector>

namespace segdp {

// Input signal for piecewise-constant segmentation. Prefix sums and prefix
// sums of squares are computed once at construction; solvers never re-sum
// the raw values. Immutable after construction, safe to share.
class Signal {
public:
    Signal() = default;
    explicit Signal(std::vector<double> values);

    std::size_t size() const { return values_.size(); }
    bool empty() const { return values_.empty(); }

    // 1-based access to P_i.
    double value(std::size_t i) const { return values_[i - 1]; }
    const std::vector<double>& values() const { return values_; }

    // S_i = P_1 + ... + P_i, S_0 = 0.
    double prefix_sum(std::size_t i) const { return sum_[i]; }
    // Q_i = P_1^2 + ... + P_i^2, Q_0 = 0.
    double prefix_sq(std::size_t i) const { return sq_[i]; }

private:
    std::vector<double> values_;
    std::vector<double> sum_;
    std::vector<double> sq_;
};

struct SolverConfig {
    double penalty = 1.0;  // per-segment cost C
    double epsilon = 0.01; // tolerance (additive or multiplicative, per solver)
    double value_cap = 0.0; // binary-search upper bound U^2 n; 0 = derive from signal

    void validate() const;
};

// Least-squares error of fitting one constant to P_{j+1..i}.
// Closed form Q_i - Q_j - (S_i - S_j)^2 / (i - j), clamped at 0.
double segment_sse(const Signal& sig, std::size_t j, std::size_t i);

// w(j,i) = segment SSE + C.
double weight_w(const Signal& sig, const SolverConfig& cfg, std::size_t j, std::size_t i);

// Shifted weight: w~(j,i) = -(S_i - S_j)^2 / (i - j) + C, so that
// w(j,i) = w~(j,i) + (Q_i - Q_j).
double weight_shifted(const Signal& sig, const SolverConfig& cfg, std::size_t j, std::size_t i);

// w'(j,i) = (i - j)(Q_i - Q_j) - (S_i - S_j)^2
//         = sum over pairs j < m1 < m2 <= i of (P_{m1} - P_{m2})^2, always >= 0.
double weight_wprime(const Signal& sig, std::size_t j, std::size_t i);

namespace detail {
// Contract check shared by the weight functions: 0 <= j < i <= n.
void check_span(const Signal& sig, std::size_t j, std::size_t i);
} // namespace detail

} // namespace segdp
