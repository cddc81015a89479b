#pragma once

#include <string>

#include "cxorder/rational.hpp"

namespace cxorder {

/// Closed rational interval known to contain some exact quantity.
struct IntervalValue {
    Rational lo;
    Rational hi;

    static IntervalValue point(const Rational& v) { return {v, v}; }
    static IntervalValue around(const Rational& center, const Rational& radius) {
        return {center - radius, center + radius};
    }

    Rational width() const { return hi - lo; }
    bool contains(const Rational& v) const { return lo <= v && v <= hi; }
    bool is_point() const { return lo == hi; }

    friend IntervalValue operator+(const IntervalValue& a, const IntervalValue& b) { return {a.lo + b.lo, a.hi + b.hi}; }
    friend IntervalValue operator-(const IntervalValue& a, const IntervalValue& b) { return {a.lo - b.hi, a.hi - b.lo}; }
    friend IntervalValue operator*(const IntervalValue& a, const IntervalValue& b) {
        const Rational p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
        return {min(min(p1, p2), min(p3, p4)), max(max(p1, p2), max(p3, p4))};
    }

    std::string str() const { return "[" + lo.str() + ", " + hi.str() + "]"; }
    friend bool operator==(const IntervalValue&, const IntervalValue&) = default;
};

/// -1, 0 or +1 when the interval certifies the sign of its value. Throws
/// Inconclusive when the interval straddles 0 without collapsing onto it.
int certified_sign(const IntervalValue& v);

} // namespace cxorder
