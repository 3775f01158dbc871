#include "hahn/analytic.hpp"

#include "hahn/errors.hpp"

#include <optional>

namespace hahn {

namespace {

// eps must denote an infinitesimal: nonzero leading monomial < 1, or a
// zero term list whose remainder bound (if any) is < 1.
void require_infinitesimal(const Series& eps, long cap) {
    Monomial one = Monomial::one();
    if (!eps.is_zero()) {
        if (eps.lead().mono.compare(one, cap) >= 0) throw NotInfinitesimal();
    } else if (eps.remainder() && eps.remainder()->compare(one, cap) >= 0) {
        throw NotInfinitesimal();
    }
}

Monomial mono_power(const Monomial& m, long n, long cap) {
    if (n == 0 || m.is_one()) return Monomial::one();
    if (m.is_nested()) return Monomial::omega(scalar_mul(m.exponent(), Constant(n), cap));
    Monomial::FreeSupport support = m.support();
    for (auto& [g, c] : support) c = Constant::mul(c, Constant(n));
    return Monomial::free(m.chain(), std::move(support), cap);
}

std::optional<Monomial> max_bound(std::optional<Monomial> a,
                                  const std::optional<Monomial>& b, long cap) {
    if (!a) return b;
    if (!b) return a;
    return a->compare(*b, cap) >= 0 ? a : b;
}

}  // namespace

Series eval_power_series(const CoeffOracle& coeffs, const Series& eps,
                         const TruncationContext& ctx) {
    long cap = ctx.const_precision;
    require_infinitesimal(eps, cap);
    long N = ctx.taylor_order;

    Series acc = Series::constant(coeffs(0));
    Series power = Series::rational(Rational(1));
    for (long n = 1; n <= N; ++n) {
        power = mul(power, eps, ctx);
        Constant a = coeffs(n);
        if (!a.is_zero()) acc = add(acc, scalar_mul(power, a, cap), cap);
    }
    // Accumulated mul remainders (from an inexact eps) already live in
    // acc; power carries them too once eps has a bound.
    std::optional<Monomial> rem =
        max_bound(acc.remainder(), power.remainder(), cap);

    if (eps.is_zero() && eps.is_exact()) return acc;

    // Polynomial exactness probe: an oracle that vanishes on the tail
    // window contributes nothing beyond the retained terms.
    bool tail_zero = true;
    for (long n = N + 1; n <= 2 * N + 2; ++n)
        if (!coeffs(n).is_zero()) { tail_zero = false; break; }
    if (tail_zero && eps.is_exact()) {
        return Series::make(acc.terms(), rem, cap);
    }
    if (!eps.is_zero())
        rem = max_bound(rem, mono_power(eps.lead().mono, N + 1, cap), cap);
    else
        rem = max_bound(rem, mono_power(*eps.remainder(), N + 1, cap), cap);
    return Series::make(acc.terms(), rem, cap);
}

Series eval_restricted_analytic(const TaylorOracle& taylor_oracle,
                                const std::vector<Constant>& center,
                                const std::vector<Series>& eps,
                                const TruncationContext& ctx) {
    long cap = ctx.const_precision;
    if (center.size() != eps.size())
        throw Error("center/displacement arity mismatch");
    Constant one(1), minus_one(-1);
    for (const auto& c : center) {
        if (Constant::compare(c, one, cap) > 0 ||
            Constant::compare(c, minus_one, cap) < 0)
            throw CenterOutOfRange();
    }
    for (const auto& e : eps) require_infinitesimal(e, cap);

    size_t n = eps.size();
    long N = ctx.taylor_order;

    // Per-variable powers eps_j^k, k = 0..N.
    std::vector<std::vector<Series>> powers(n);
    for (size_t j = 0; j < n; ++j) {
        powers[j].push_back(Series::rational(Rational(1)));
        for (long k = 1; k <= N; ++k)
            powers[j].push_back(mul(powers[j].back(), eps[j], ctx));
    }

    Series acc;
    bool tail_zero = true;
    std::vector<long> idx(n, 0);
    // Walk all multi-indices of total degree <= 2N+2; degrees above N
    // only feed the exactness probe.
    auto walk = [&](auto&& self, size_t pos, long degree_left, long degree_used) -> void {
        if (pos == n) {
            Constant a = taylor_oracle(idx, center);
            if (a.is_zero()) return;
            if (degree_used > N) { tail_zero = false; return; }
            Series term = Series::constant(a);
            for (size_t j = 0; j < n; ++j)
                if (idx[j] > 0) term = mul(term, powers[j][idx[j]], ctx);
            acc = add(acc, term, cap);
            return;
        }
        for (long k = 0; k <= degree_left; ++k) {
            idx[pos] = k;
            self(self, pos + 1, degree_left - k, degree_used + k);
        }
        idx[pos] = 0;
    };
    walk(walk, 0, 2 * N + 2, 0);

    std::optional<Monomial> rem = acc.remainder();
    bool all_exact_zero = true, all_exact = true;
    std::optional<Monomial> max_lead;
    for (const auto& e : eps) {
        if (!e.is_exact()) all_exact = false;
        if (!(e.is_zero() && e.is_exact())) all_exact_zero = false;
        std::optional<Monomial> l;
        if (!e.is_zero()) l = e.lead().mono;
        else if (e.remainder()) l = e.remainder();
        max_lead = max_bound(max_lead, l, cap);
    }
    if (all_exact_zero || (tail_zero && all_exact))
        return Series::make(acc.terms(), rem, cap);
    rem = max_bound(rem, mono_power(*max_lead, N + 1, cap), cap);
    return Series::make(acc.terms(), rem, cap);
}

Series log1p(const Series& eps, const TruncationContext& ctx) {
    return eval_power_series(named_oracle("log1p"), eps, ctx);
}

Series expm_small(const Series& eps, const TruncationContext& ctx) {
    return eval_power_series(named_oracle("exp"), eps, ctx);
}

CoeffOracle named_oracle(const std::string& name) {
    if (name == "exp") {
        return [](long n) {
            Int f = 1;
            for (long k = 2; k <= n; ++k) f *= k;
            return Constant(Rational(1, f));
        };
    }
    if (name == "log1p") {
        return [](long n) {
            if (n == 0) return Constant(0);
            return Constant(Rational(n % 2 == 1 ? 1 : -1, n));
        };
    }
    if (name == "geom") {
        return [](long) { return Constant(1); };
    }
    if (name == "sin") {
        return [](long n) {
            if (n % 2 == 0) return Constant(0);
            Int f = 1;
            for (long k = 2; k <= n; ++k) f *= k;
            return Constant(Rational(((n - 1) / 2) % 2 == 0 ? 1 : -1, f));
        };
    }
    if (name == "cos") {
        return [](long n) {
            if (n % 2 == 1) return Constant(0);
            Int f = 1;
            for (long k = 2; k <= n; ++k) f *= k;
            return Constant(Rational((n / 2) % 2 == 0 ? 1 : -1, f));
        };
    }
    throw UnknownIdentifier(name);
}

}  // namespace hahn
