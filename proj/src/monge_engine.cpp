#include "segdp/monge_engine.hpp"

#include <stdexcept>

namespace segdp {

MongeEngine::MongeEngine(MongeOracle oracle, std::size_t n)
    : oracle_(std::move(oracle)), n_(n) {
    if (n_ < 1) throw std::invalid_argument("MongeEngine: n must be >= 1");
    a_.reserve(n_);
}

ExtendedCost MongeEngine::eval(std::size_t j, std::size_t i) {
    ++evals_;
    return a_[j] + oracle_(j, i);
}

bool MongeEngine::wins(std::size_t c, std::size_t b, std::size_t i) {
    return eval(c, i) <= eval(b, i);
}

void MongeEngine::push_a(std::size_t j, ExtendedCost a_j) {
    if (j != pushed_)
        throw std::invalid_argument("MongeEngine: values must be pushed in order");
    if (j >= n_) throw std::invalid_argument("MongeEngine: push past n-1");
    a_.push_back(a_j);
    ++pushed_;

    const std::size_t c = j;
    const std::size_t lo = c + 1; // earliest position where c is a valid predecessor
    while (!cands_.empty()) {
        const std::size_t s = std::max(cands_.back().start, lo);
        if (s <= n_ && wins(c, cands_.back().j, s))
            cands_.pop_back();
        else
            break;
    }
    if (cands_.empty()) {
        cands_.push_back({c, lo});
        return;
    }
    // Back candidate b beats c at s0; by total monotonicity c wins from some
    // crossover position onward (if at all). Find the smallest such position.
    const Candidate& b = cands_.back();
    std::size_t left = std::max(b.start, lo) + 1, right = n_ + 1;
    while (left < right) {
        const std::size_t mid = left + (right - left) / 2;
        if (wins(c, b.j, mid))
            right = mid;
        else
            left = mid + 1;
    }
    if (left <= n_) cands_.push_back({c, left});
}

std::pair<ExtendedCost, std::size_t> MongeEngine::query_min(std::size_t i) {
    if (i < 1 || i > n_ || i > pushed_)
        throw std::invalid_argument("MongeEngine: query needs a_0..a_{i-1} pushed");
    if (i < last_query_)
        throw std::invalid_argument("MongeEngine: queries must be nondecreasing");
    last_query_ = i;
    while (cands_.size() >= 2 && cands_[1].start <= i) cands_.pop_front();
    const std::size_t j = cands_.front().j;
    return {eval(j, i), j};
}

} // namespace segdp
