#pragma once

#include "hahn/rational.hpp"

namespace hahn {

/// Closed rational interval [lo, hi]. Endpoints are exact; enclosure
/// routines round outward to a dyadic grid to keep denominators small.
struct Interval {
    Rational lo;
    Rational hi;

    Rational width() const { return hi - lo; }
    bool contains_zero() const { return lo <= 0 && hi >= 0; }
    bool positive() const { return lo > 0; }
    bool negative() const { return hi < 0; }
};

Interval round_out(const Interval& iv, long bits);

Interval iv_add(const Interval& a, const Interval& b, long bits);
Interval iv_neg(const Interval& a);
Interval iv_mul(const Interval& a, const Interval& b, long bits);
/// Requires a separated from zero.
Interval iv_inv(const Interval& a, long bits);
/// Integer power; for negative e requires separation from zero.
Interval iv_pow(const Interval& a, long e, long bits);

/// Enclosure of e^q with width <= 2^-bits.
Interval exp_point(const Rational& q, long bits);
/// Enclosure of log(q), q > 0, with width <= 2^-bits.
Interval log_point(const Rational& q, long bits);

/// Monotone extensions to intervals.
Interval exp_interval(const Interval& a, long bits);
Interval log_interval(const Interval& a, long bits);  // requires a.lo > 0

}  // namespace hahn
