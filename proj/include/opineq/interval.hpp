#pragma once

#include <cmath>
#include <limits>
#include <string>

#include "opineq/errors.hpp"

namespace opineq {

// Open interval (lo, hi) on the real line; hi may be +inf.
struct Interval {
    double lo = 0.0;
    double hi = std::numeric_limits<double>::infinity();

    Interval() = default;
    Interval(double lo_, double hi_) : lo(lo_), hi(hi_) {
        if (!(lo < hi)) {
            throw BadInterval("Interval: need lo < hi, got [" + std::to_string(lo_) + ", " +
                              std::to_string(hi_) + ")");
        }
    }

    bool contains_strict(double x) const { return x > lo && x < hi; }
    bool bounded() const { return std::isfinite(hi); }

    // Closed sampling window strictly inside the open interval, used by all
    // spectrum generators. Positive finite intervals shrink 5% per side in
    // log space; (0, b) shrinks linearly; half-infinite intervals use a
    // one-decade window above the left endpoint.
    Interval sample_window() const {
        constexpr double kShrink = 0.05;
        if (bounded()) {
            if (lo > 0.0) {
                const double ratio = hi / lo;
                const double f = std::pow(ratio, kShrink);
                return Interval(lo * f, hi / f);
            }
            return Interval(kShrink * hi, (1.0 - kShrink) * hi);
        }
        const double w_lo = lo > 0.0 ? lo + kShrink * std::max(1.0, lo) : 0.1;
        const double w_hi = w_lo + 10.0 * std::max(1.0, w_lo);
        return Interval(w_lo, w_hi);
    }

    std::string str() const {
        return "(" + std::to_string(lo) + ", " + (bounded() ? std::to_string(hi) : "inf") + ")";
    }
};

}  // namespace opineq
