#pragma once

#include <cstdint>
#include <deque>
#include <functional>
#include <utility>
#include <vector>

#include "segdp/extended_cost.hpp"

namespace segdp {

// Weight oracle over index pairs 0 <= j < i <= n. Must satisfy the
// quadrangle inequality w(i1,i4) + w(i2,i3) >= w(i1,i3) + w(i2,i4).
using MongeOracle = std::function<ExtendedCost(std::size_t j, std::size_t i)>;

// Online minimization over a Monge weight: values a_0, a_1, ... are pushed
// as they become known and query_min(i) returns min_{j<i} a_j + w(j,i) with
// its argmin (ties toward largest j). Candidates own contiguous intervals of
// future query positions; insertion trims the interval structure by binary
// search, so a full sweep costs O(n log n) oracle evaluations.
class MongeEngine {
public:
    MongeEngine(MongeOracle oracle, std::size_t n);

    void push_a(std::size_t j, ExtendedCost a_j);
    std::pair<ExtendedCost, std::size_t> query_min(std::size_t i);

    std::uint64_t evaluations() const { return evals_; }

private:
    struct Candidate {
        std::size_t j;
        std::size_t start; // first query position owned
    };

    ExtendedCost eval(std::size_t j, std::size_t i);
    // true if candidate c (c > b) is at least as good as b at position i
    bool wins(std::size_t c, std::size_t b, std::size_t i);

    MongeOracle oracle_;
    std::size_t n_;
    std::vector<ExtendedCost> a_;
    std::size_t pushed_ = 0;
    std::size_t last_query_ = 0;
    std::deque<Candidate> cands_;
    std::uint64_t evals_ = 0;
};

} // namespace segdp
