#pragma once

#include "segdp/extended_cost.hpp"
#include "segdp/result.hpp"
#include "segdp/signal.hpp"

namespace segdp {

// Number of geometric length bands needed to cover transition lengths 1..n
// with ratio (1+epsilon): max(1, ceil(ln n / ln(1+epsilon))).
std::size_t band_count(std::size_t n, double epsilon);

// Weight of band k (1-based): transitions whose length i-j falls inside
// [(1+eps)^(k-1), (1+eps)^k] get the finite value w'(j,i) / c' with
// c' = (1+eps)^(k-1); transitions outside get big-M sentinels whose exponents
// (n-i+j on the short side, i-j on the long side) keep the band Monge.
class BandedWeight {
public:
    BandedWeight(const Signal& sig, std::size_t band_index, double epsilon);

    ExtendedCost operator()(std::size_t j, std::size_t i) const;

    double c_prime() const { return c_prime_; }
    // inclusive integer range of in-band lengths
    std::size_t min_length() const { return min_len_; }
    std::size_t max_length() const { return max_len_; }

private:
    const Signal* sig_;
    double c_prime_;
    std::size_t min_len_;
    std::size_t max_len_;
};

// Multiplicative (1+epsilon) solver: one Monge engine per band, advanced in
// lockstep, per-state minimum across bands plus C per transition.
SegmentationResult solve_multiscale(const Signal& sig, const SolverConfig& cfg);

} // namespace segdp
