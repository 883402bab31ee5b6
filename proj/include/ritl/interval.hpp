#pragma once

// Temporal operator intervals. Bounds are nonnegative rationals, the upper
// bound may be infinite, and singletons [a,a] are rejected.

#include "ritl/rational.hpp"

#include <optional>
#include <stdexcept>
#include <string>

namespace ritl {

struct IntervalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct TimeInterval {
    Rat lower{0};
    std::optional<Rat> upper;  // nullopt = +inf
    bool lower_open = true;
    bool upper_open = true;

    static TimeInterval make(Rat lo, std::optional<Rat> hi, bool lo_open, bool hi_open) {
        if (lo < 0) throw IntervalError("interval lower bound must be >= 0");
        if (hi) {
            if (*hi < lo) throw IntervalError("interval upper bound below lower bound");
            if (*hi == lo) throw IntervalError("singleton interval");
        } else {
            hi_open = true;  // infinity is always open
        }
        return TimeInterval{std::move(lo), std::move(hi), lo_open, hi_open};
    }

    static TimeInterval zero_to(Rat hi, bool hi_open = true) {
        return make(Rat(0), std::move(hi), true, hi_open);
    }
    static TimeInterval unbounded(bool lo_open = true) {
        return make(Rat(0), std::nullopt, lo_open, true);
    }

    bool is_unbounded() const { return !upper.has_value(); }
    bool zero_lower() const { return lower == 0; }

    // Membership of an offset u in the interval.
    bool contains(const Rat& u) const {
        if (u < lower || (u == lower && lower_open)) return false;
        if (!upper) return true;
        if (u > *upper || (u == *upper && upper_open)) return false;
        return true;
    }

    bool operator==(const TimeInterval& o) const {
        return lower == o.lower && upper == o.upper && lower_open == o.lower_open &&
               upper_open == o.upper_open;
    }

    std::string str() const {
        std::string s = lower_open ? "(" : "[";
        s += to_string(lower);
        s += ",";
        s += upper ? to_string(*upper) : "inf";
        s += upper_open ? ")" : "]";
        return s;
    }
};

}  // namespace ritl
