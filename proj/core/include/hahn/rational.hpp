#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace hahn {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline int sign(const Rational& q) { return q.sign(); }

/// Three-way compare by cross multiplication. Denominators are kept
/// positive by the representation, so this is much cheaper than the
/// library operator< on big operands.
inline int cmp(const Rational& a, const Rational& b) {
    int sa = a.sign(), sb = b.sign();
    if (sa != sb) return sa < sb ? -1 : 1;
    Int lhs = numerator(a) * denominator(b);
    Int rhs = numerator(b) * denominator(a);
    return lhs == rhs ? 0 : (lhs < rhs ? -1 : 1);
}

/// 2^e as an exact rational, e may be negative.
inline Rational pow2(long e) {
    Int one = 1;
    if (e >= 0) return Rational(one << e);
    return Rational(one, one << (-e));
}

/// Largest multiple of 2^-bits that is <= q.
inline Rational floor_dyadic(const Rational& q, long bits) {
    Int scaled = (numerator(q) << bits) / denominator(q);
    // cpp_int division truncates toward zero; fix up negatives.
    if (q < 0 && Rational(scaled) * denominator(q) != Rational(numerator(q) << bits))
        --scaled;
    return Rational(scaled) * pow2(-bits);
}

inline Rational ceil_dyadic(const Rational& q, long bits) {
    return -floor_dyadic(-q, bits);
}

/// Prime factorization of a positive integer, (prime, exponent) pairs
/// in increasing prime order. Trial division; inputs here are small.
inline std::vector<std::pair<Int, long>> factorize(Int n) {
    std::vector<std::pair<Int, long>> out;
    for (Int p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        long e = 0;
        while (n % p == 0) { n /= p; ++e; }
        if (e) out.emplace_back(p, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

inline std::string to_string(const Rational& q) {
    std::string s = numerator(q).str();
    if (denominator(q) != 1) s += "/" + denominator(q).str();
    return s;
}

inline bool is_integer(const Rational& q) { return denominator(q) == 1; }

}  // namespace hahn
