#pragma once

#include "hahn/explog.hpp"
#include "hahn/series.hpp"

#include <string>

namespace hahn::testing {

inline Series w_pow(const Rational& q) {
    return Series::monomial(Monomial::omega(Series::rational(q)));
}

inline Series rat(const Rational& q) { return Series::rational(q); }

/// Exact structural equality: both exact, identical term walk.
inline bool series_equal(const Series& a, const Series& b) {
    if (!a.is_exact() || !b.is_exact()) return false;
    return compare(a, b) == 0;
}

inline Monomial mono_pow(const Monomial& m, long n) {
    if (n == 0 || m.is_one()) return Monomial::one();
    return Monomial::omega(scalar_mul(m.exponent(), Constant(n)));
}

/// Every term of r (and its bound, if any) sits at or below `bound`.
inline bool residual_below(const Series& r, const Monomial& bound) {
    for (const auto& t : r.terms())
        if (t.mono.compare(bound) > 0) return false;
    if (r.remainder() && r.remainder()->compare(bound) > 0) return false;
    return true;
}

/// Every term of r strictly below `bound`.
inline bool residual_strictly_below(const Series& r, const Monomial& bound) {
    for (const auto& t : r.terms())
        if (t.mono.compare(bound) >= 0) return false;
    if (r.remainder() && r.remainder()->compare(bound) >= 0) return false;
    return true;
}

}  // namespace hahn::testing
