#include "hahn/interval.hpp"

#include "hahn/errors.hpp"

#include <algorithm>
#include <cstdlib>

namespace hahn {

Interval round_out(const Interval& iv, long bits) {
    return {floor_dyadic(iv.lo, bits), ceil_dyadic(iv.hi, bits)};
}

Interval iv_add(const Interval& a, const Interval& b, long bits) {
    return round_out({a.lo + b.lo, a.hi + b.hi}, bits);
}

Interval iv_neg(const Interval& a) { return {-a.hi, -a.lo}; }

Interval iv_mul(const Interval& a, const Interval& b, long bits) {
    Rational p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
    Rational lo = std::min(std::min(p1, p2), std::min(p3, p4));
    Rational hi = std::max(std::max(p1, p2), std::max(p3, p4));
    return round_out({lo, hi}, bits);
}

Interval iv_inv(const Interval& a, long bits) {
    return round_out({Rational(1) / a.hi, Rational(1) / a.lo}, bits);
}

Interval iv_pow(const Interval& a, long e, long bits) {
    if (e == 0) return {Rational(1), Rational(1)};
    bool invert = e < 0;
    unsigned long n = static_cast<unsigned long>(invert ? -e : e);
    Interval acc{Rational(1), Rational(1)};
    Interval base = a;
    while (n) {
        if (n & 1) acc = iv_mul(acc, base, bits);
        base = iv_mul(base, base, bits);
        n >>= 1;
    }
    if (invert) acc = iv_inv(acc, bits);
    return acc;
}

namespace {

// Taylor sum of exp on [-1,1] with a rigorous tail bound of 2^-tol_bits.
Interval exp_unit(const Rational& x, long tol_bits) {
    Rational sum = 1;
    Rational term = 1;
    Rational ax = x < 0 ? Rational(-x) : x;
    Rational aterm = 1;
    Rational tol = pow2(-tol_bits);
    long n = 0;
    for (;;) {
        ++n;
        term = term * x / n;
        aterm = aterm * ax / n;
        sum += term;
        // |R_n| <= 2 |x|^{n+1}/(n+1)! for |x| <= 1
        Rational bound = 2 * aterm * ax / (n + 1);
        if (bound <= tol) return {sum - bound, sum + bound};
    }
}

// 2*atanh(u) = log((1+u)/(1-u)) for 0 <= u <= 1/2.
Interval atanh2(const Rational& u, long tol_bits) {
    if (u == 0) return {Rational(0), Rational(0)};
    Rational sum = 0;
    Rational upow = u;
    Rational u2 = u * u;
    Rational tol = pow2(-tol_bits);
    long j = 1;
    for (;;) {
        sum += 2 * upow / j;
        upow *= u2;
        j += 2;
        Rational tail = 2 * upow / (j * (1 - u2));
        if (tail <= tol) return {sum, sum + tail};
    }
}

Interval log2_enclosure(long tol_bits) {
    return atanh2(Rational(1, 3), tol_bits);
}

}  // namespace

Interval exp_point(const Rational& q, long bits) {
    if (q == 0) return {Rational(1), Rational(1)};
    // Reduce to |x| <= 1 via exp(q) = exp(q/k)^k.
    Rational aq = q < 0 ? Rational(-q) : q;
    long k = 1;
    while (Rational(k) < aq) ++k;
    for (long guard = 8;; guard *= 2) {
        long tol_bits = bits + 2 * k + guard;
        Interval base = round_out(exp_unit(q / k, tol_bits + 2), tol_bits);
        Interval r = iv_pow(base, k, tol_bits);
        r = round_out(r, bits + 2);
        if (r.width() <= pow2(-bits)) return r;
    }
}

Interval log_point(const Rational& q, long bits) {
    if (q <= 0) throw NonPositiveArgument();
    if (q == 1) return {Rational(0), Rational(0)};
    if (q < 1) return iv_neg(log_point(Rational(1) / q, bits));
    // q >= 1: write q = 2^m * r with r in [1, 2).
    long m = 0;
    Rational r = q;
    while (r >= 2) { r /= 2; ++m; }
    long mbits = 1;
    while ((1L << mbits) <= m) ++mbits;
    for (long guard = 8;; guard *= 2) {
        long tol_bits = bits + mbits + guard;
        Interval lr = atanh2((r - 1) / (r + 1), tol_bits);
        Interval res = lr;
        if (m > 0) {
            Interval l2 = log2_enclosure(tol_bits + mbits);
            res = {lr.lo + m * l2.lo, lr.hi + m * l2.hi};
        }
        res = round_out(res, bits + 2);
        if (res.width() <= pow2(-bits)) return res;
    }
}

Interval exp_interval(const Interval& a, long bits) {
    if (a.lo == a.hi) return exp_point(a.lo, bits);
    return {exp_point(a.lo, bits + 1).lo, exp_point(a.hi, bits + 1).hi};
}

Interval log_interval(const Interval& a, long bits) {
    if (a.lo <= 0) throw NonPositiveArgument();
    if (a.lo == a.hi) return log_point(a.lo, bits);
    return {log_point(a.lo, bits + 1).lo, log_point(a.hi, bits + 1).hi};
}

}  // namespace hahn
