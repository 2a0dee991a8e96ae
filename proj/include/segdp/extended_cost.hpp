#pragma once

#include <array>
#include <cmath>
#include <compare>
#include <cstdint>
#include <stdexcept>

namespace segdp {

// Cost value of the form (sum of 2^e over sentinel exponents e) * M + finite,
// where M is a symbolically infinite positive constant. The big-M part is
// kept as a normalized list of distinct exponents (descending), so sums of
// sentinels compare exactly: with distinct exponents the total is below
// 2^(max+1), making descending lexicographic comparison equal to numeric
// comparison. Ordering is big-M part first, then the finite part.
class ExtendedCost {
public:
    ExtendedCost() = default;

    static ExtendedCost finite(double v) {
        ExtendedCost c;
        c.finite_ = v;
        return c;
    }

    // 2^exponent * M plus an optional finite part.
    static ExtendedCost sentinel(std::int64_t exponent, double v = 0.0) {
        ExtendedCost c;
        c.exps_[0] = exponent;
        c.count_ = 1;
        c.finite_ = v;
        return c;
    }

    bool is_finite() const { return count_ == 0; }
    double finite_part() const { return finite_; }
    int sentinel_terms() const { return count_; }

    // Numeric value of the big-M coefficient; overflows to inf for large
    // exponents, diagnostics only.
    double mcoef() const {
        double m = 0.0;
        for (int k = 0; k < count_; ++k) m += std::ldexp(1.0, static_cast<int>(exps_[k]));
        return m;
    }

    ExtendedCost operator+(const ExtendedCost& o) const {
        ExtendedCost r;
        r.finite_ = finite_ + o.finite_;
        int total = count_ + o.count_;
        if (total > capacity)
            throw std::overflow_error("ExtendedCost: too many sentinel terms");
        int k = 0;
        for (int a = 0; a < count_; ++a) r.exps_[k++] = exps_[a];
        for (int b = 0; b < o.count_; ++b) r.exps_[k++] = o.exps_[b];
        r.count_ = total;
        r.normalize();
        return r;
    }

    ExtendedCost& operator+=(const ExtendedCost& o) { return *this = *this + o; }

    friend bool operator==(const ExtendedCost& a, const ExtendedCost& b) {
        if (a.count_ != b.count_ || a.finite_ != b.finite_) return false;
        for (int k = 0; k < a.count_; ++k)
            if (a.exps_[k] != b.exps_[k]) return false;
        return true;
    }

    friend bool operator<(const ExtendedCost& a, const ExtendedCost& b) {
        const int common = a.count_ < b.count_ ? a.count_ : b.count_;
        for (int k = 0; k < common; ++k) {
            if (a.exps_[k] != b.exps_[k]) return a.exps_[k] < b.exps_[k];
        }
        if (a.count_ != b.count_) return a.count_ < b.count_;
        return a.finite_ < b.finite_;
    }
    friend bool operator>(const ExtendedCost& a, const ExtendedCost& b) { return b < a; }
    friend bool operator<=(const ExtendedCost& a, const ExtendedCost& b) { return !(b < a); }
    friend bool operator>=(const ExtendedCost& a, const ExtendedCost& b) { return !(a < b); }
    friend bool operator!=(const ExtendedCost& a, const ExtendedCost& b) { return !(a == b); }

private:
    static constexpr int capacity = 8;

    void normalize() {
        // insertion sort ascending, then carry equal adjacent exponents
        for (int a = 1; a < count_; ++a)
            for (int b = a; b > 0 && exps_[b] < exps_[b - 1]; --b)
                std::swap(exps_[b], exps_[b - 1]);
        bool merged = true;
        while (merged) {
            merged = false;
            for (int a = 0; a + 1 < count_; ++a) {
                if (exps_[a] == exps_[a + 1]) {
                    exps_[a] += 1; // 2^e + 2^e = 2^(e+1)
                    for (int b = a + 1; b + 1 < count_; ++b) exps_[b] = exps_[b + 1];
                    --count_;
                    // re-sort the carried entry into place
                    for (int b = a; b > 0 && exps_[b] < exps_[b - 1]; --b)
                        std::swap(exps_[b], exps_[b - 1]);
                    merged = true;
                    break;
                }
            }
        }
        // store descending for lexicographic comparison
        for (int a = 0, b = count_ - 1; a < b; ++a, --b) std::swap(exps_[a], exps_[b]);
    }

    std::array<std::int64_t, capacity> exps_{};
    int count_ = 0;
    double finite_ = 0.0;
};

} // namespace segdp
