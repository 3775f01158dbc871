#include "hahn/explog.hpp"

#include "hahn/analytic.hpp"
#include "hahn/errors.hpp"

#include <utility>

namespace hahn {

namespace {

thread_local int g_h_depth = 0;

// Boot evaluates H0/H1 exponentials whose h-inverses are closed form,
// so the recursion is bounded; a runaway depth means a wiring bug.
struct DepthGuard {
    DepthGuard() {
        if (++g_h_depth > 64) {
            --g_h_depth;
            throw Error("h recursion depth exceeded");
        }
    }
    ~DepthGuard() { --g_h_depth; }
};

Series series_one() { return Series::rational(Rational(1)); }

Series minus_omega_cubed() {
    return Series::monomial(Monomial::omega(Series::rational(Rational(3))),
                            Constant(-1));
}

bool is_infinite_positive(const Series& x, long cap) {
    return !x.is_zero() && x.lead().coeff.sign(cap) > 0 &&
           x.lead().mono.compare(Monomial::one(), cap) > 0;
}

bool purely_infinite_positive(const Series& v, long cap) {
    if (v.is_zero() || !v.is_exact()) return false;
    if (v.lead().coeff.sign(cap) <= 0) return false;
    for (const auto& t : v.terms())
        if (t.mono.compare(Monomial::one(), cap) <= 0) return false;
    return true;
}

}  // namespace

HFunction make_h(HKind kind) { return HFunction{kind, nullptr}; }

HFunction make_h(const std::string& name) {
    if (name == "h0") return make_h(HKind::H0);
    if (name == "h1") return make_h(HKind::H1);
    if (name == "boot") return make_h(HKind::Boot);
    throw UnknownIdentifier(name);
}

std::string to_string(HKind kind) {
    switch (kind) {
        case HKind::H0: return "h0";
        case HKind::H1: return "h1";
        case HKind::Boot: return "boot";
    }
    return "?";
}

const Series& boot_constant(const HFunction& h, const TruncationContext& ctx) {
    if (!h.boot_c) {
        // c = value of the H1 exponential at -w^3; exact (no residue or
        // infinitesimal part), so the context does not influence it.
        HFunction h1 = make_h(HKind::H1);
        h.boot_c = std::make_shared<const Series>(exp(minus_omega_cubed(), h1, ctx));
    }
    return *h.boot_c;
}

Series h_apply(const HFunction& h, const Series& x, const TruncationContext& ctx) {
    DepthGuard guard;
    long cap = ctx.const_precision;
    switch (h.kind) {
        case HKind::H0:
            if (sign(x, cap) >= 0) return add(x, series_one(), cap);
            return invert(sub(series_one(), x, cap), ctx);
        case HKind::H1:
            if (sign(x, cap) >= 0)
                return add(scalar_mul(x, Constant(Rational(1, 2)), cap), series_one(), cap);
            return invert(sub(series_one(), x, cap), ctx);
        case HKind::Boot: {
            const Series& c = boot_constant(h, ctx);
            Series two_c = scalar_mul(c, Constant(2), cap);
            if (sign(x, cap) > 0) {
                if (is_infinite_positive(x, cap)) {
                    HFunction h0 = make_h(HKind::H0);
                    return exp(x, h0, ctx);
                }
                return add(two_c, x, cap);
            }
            if (compare(x, minus_omega_cubed(), cap) >= 0) {
                // 2c + (c/w^3) x; c is a single monomial, so c/w^3 is too.
                Monomial c_over_w3 =
                    c.lead().mono.mul(Monomial::omega(Series::rational(Rational(-3))), cap);
                return add(two_c, mul(Series::monomial(c_over_w3), x, ctx), cap);
            }
            HFunction h1 = make_h(HKind::H1);
            return exp(x, h1, ctx);
        }
    }
    throw Error("unreachable h kind");
}

Series h_inverse(const HFunction& h, const Series& y, const TruncationContext& ctx) {
    DepthGuard guard;
    long cap = ctx.const_precision;
    if (sign(y, cap) <= 0) throw NonPositiveArgument();
    switch (h.kind) {
        case HKind::H0:
            if (compare(y, series_one(), cap) >= 0) return sub(y, series_one(), cap);
            return sub(series_one(), invert(y, ctx), cap);
        case HKind::H1:
            if (compare(y, series_one(), cap) >= 0)
                return scalar_mul(sub(y, series_one(), cap), Constant(2), cap);
            return sub(series_one(), invert(y, ctx), cap);
        case HKind::Boot: {
            if (is_infinite_positive(y, cap)) {
                HFunction h0 = make_h(HKind::H0);
                return log(y, h0, ctx);
            }
            const Series& c = boot_constant(h, ctx);
            Series two_c = scalar_mul(c, Constant(2), cap);
            if (compare(y, two_c, cap) > 0) return sub(y, two_c, cap);
            if (compare(y, c, cap) >= 0) {
                Monomial w3_over_c =
                    c.lead().mono.inv().mul(Monomial::omega(Series::rational(Rational(3))), cap);
                return mul(sub(y, two_c, cap), Series::monomial(w3_over_c), ctx);
            }
            HFunction h1 = make_h(HKind::H1);
            return log(y, h1, ctx);
        }
    }
    throw Error("unreachable h kind");
}

Series log_mono(const Monomial& g, const HFunction& h, const TruncationContext& ctx) {
    long cap = ctx.const_precision;
    if (g.is_one()) return Series();
    if (!g.is_nested()) throw MixedRepresentation();
    const Series& x = g.exponent();
    if (!x.is_exact()) throw TruncationObscuresComparison();
    std::vector<Term> out;
    for (const auto& t : x.terms()) {
        if (t.mono.is_free()) throw MixedRepresentation();
        const Series& xi = t.mono.exponent();  // zero for the identity monomial
        out.push_back(Term{Monomial::omega(h_apply(h, xi, ctx)), t.coeff});
    }
    return Series::make(std::move(out), {}, cap);
}

Series log(const Series& x, const HFunction& h, const TruncationContext& ctx) {
    long cap = ctx.const_precision;
    if (sign(x, cap) <= 0) throw NonPositiveArgument();
    Decomposition d = decompose(x, cap);
    Series acc = log_mono(d.g, h, ctx);
    Constant lr = Constant::log(d.r, cap);
    if (!lr.is_zero()) acc = add(acc, Series::constant(lr), cap);
    if (!(d.eps.is_zero() && d.eps.is_exact()))
        acc = add(acc, log1p(d.eps, ctx), cap);
    return acc;
}

Series exp(const Series& y, const HFunction& h, const TruncationContext& ctx) {
    long cap = ctx.const_precision;
    SplitResult sp = split(y, cap);
    std::vector<Term> expo_terms;
    for (const auto& t : sp.purely_infinite.terms()) {
        if (t.mono.is_free()) throw MixedRepresentation();
        const Series& yi = t.mono.exponent();
        expo_terms.push_back(Term{Monomial::omega(h_inverse(h, yi, ctx)), t.coeff});
    }
    Series expo = Series::make(std::move(expo_terms), {}, cap);
    Series result = Series::monomial(Monomial::omega(std::move(expo)),
                                     Constant::exp(sp.constant));
    if (!(sp.infinitesimal.is_zero() && sp.infinitesimal.is_exact()))
        result = mul(result, expm_small(sp.infinitesimal, ctx), ctx);
    return result;
}

Series pow_general(const Series& y, const Constant& r, const HFunction& h,
                   const TruncationContext& ctx) {
    return exp(scalar_mul(log(y, h, ctx), r, ctx.const_precision), h, ctx);
}

long GrowthReport::violations() const {
    long n = 0;
    for (const auto& e : log_checks) n += e.status == 0;
    for (const auto& e : h_checks) n += e.status == 0;
    return n;
}

long GrowthReport::inconclusive() const {
    long n = 0;
    for (const auto& e : log_checks) n += e.status == -1;
    for (const auto& e : h_checks) n += e.status == -1;
    return n;
}

GrowthReport check_growth(const HFunction& h, const std::vector<Series>& samples,
                          const std::vector<Constant>& r_values,
                          const TruncationContext& ctx) {
    long cap = ctx.const_precision;
    GrowthReport report;
    for (const auto& x : samples) {
        GrowthReport::HEntry he{x, -1, ""};
        try {
            Series hx = h_apply(h, x, ctx);
            Series wx = Series::monomial(Monomial::omega(x));
            he.status = dominance(DomRel::Vless, hx, wx, cap) ? 1 : 0;
            if (he.status == 0) he.note = "h(x) not dominated by w^x";
        } catch (const Error& e) {
            he.status = -1;
            he.note = e.what();
        }
        report.h_checks.push_back(std::move(he));

        for (const auto& r : r_values) {
            GrowthReport::LogEntry le{x, r, -1, ""};
            try {
                if (!is_infinite_positive(x, cap)) {
                    le.note = "sample not above the constants";
                    report.log_checks.push_back(std::move(le));
                    continue;
                }
                Series ly = log(x, h, ctx);
                Series yr = pow_general(x, r, h, ctx);
                le.status = compare(ly, yr, cap) < 0 ? 1 : 0;
                if (le.status == 0) le.note = "log(y) >= y^r";
            } catch (const Error& e) {
                le.status = -1;
                le.note = e.what();
            }
            report.log_checks.push_back(std::move(le));
        }
    }
    return report;
}

std::optional<OminWitness> omin_witness(const HFunction& h, const Series& x,
                                        const TruncationContext& ctx, long max_n) {
    long cap = ctx.const_precision;
    Series hx = h_apply(h, x, ctx);
    Series wx = Series::monomial(Monomial::omega(x));
    for (long n = 1; n <= max_n; ++n) {
        if (compare(hx, scalar_mul(wx, Constant(Rational(1, n)), cap), cap) < 0)
            continue;
        Series exponent =
            Series::monomial(Monomial::omega(x), Constant(Rational(1, n)));
        Series y = Series::monomial(Monomial::omega(std::move(exponent)));
        Series n_log_y = scalar_mul(log(y, h, ctx), Constant(n), cap);
        if (compare(n_log_y, y, cap) < 0)
            throw Error("omin witness failed verification");
        return OminWitness{std::move(y), n};
    }
    return std::nullopt;
}

Series log_iota_mono(const Monomial& g, const IotaMap& iota, const TruncationContext& ctx) {
    long cap = ctx.const_precision;
    if (g.is_one()) return Series();
    if (!g.is_free()) throw MixedRepresentation();
    Series acc;
    for (const auto& [gamma, r] : g.support()) {
        Series v = iota(gamma);
        if (!purely_infinite_positive(v, cap)) throw IotaRangeViolation();
        acc = add(acc, scalar_mul(v, r, cap), cap);
    }
    return acc;
}

Series log_iota(const Series& x, const IotaMap& iota, const TruncationContext& ctx) {
    long cap = ctx.const_precision;
    if (sign(x, cap) <= 0) throw NonPositiveArgument();
    Decomposition d = decompose(x, cap);
    Series acc = log_iota_mono(d.g, iota, ctx);
    Constant lr = Constant::log(d.r, cap);
    if (!lr.is_zero()) acc = add(acc, Series::constant(lr), cap);
    if (!(d.eps.is_zero() && d.eps.is_exact()))
        acc = add(acc, log1p(d.eps, ctx), cap);
    return acc;
}

Series exp_iota(const Series& y, const IotaInverse& iota_inv, const ChainPtr& chain,
                const TruncationContext& ctx) {
    long cap = ctx.const_precision;
    SplitResult sp = split(y, cap);
    Monomial::FreeSupport support;
    for (const auto& t : sp.purely_infinite.terms())
        support.emplace_back(iota_inv(t.mono), t.coeff);
    Monomial g = support.empty() ? Monomial::one()
                                 : Monomial::free(chain, std::move(support), cap);
    Series result = Series::monomial(std::move(g), Constant::exp(sp.constant));
    if (!(sp.infinitesimal.is_zero() && sp.infinitesimal.is_exact()))
        result = mul(result, expm_small(sp.infinitesimal, ctx), ctx);
    return result;
}

Series omega_from_psi(const PsiOracle& psi, const Series& x,
                      const std::function<Series(const Series&)>& exp_op,
                      const TruncationContext& ctx) {
    long cap = ctx.const_precision;
    if (!x.is_exact()) throw TruncationObscuresComparison();
    Series acc;
    for (const auto& t : x.terms()) {
        Monomial pg = psi(t.mono);
        if (pg.compare(Monomial::one(), cap) <= 0) throw PsiRangeViolation();
        acc = add(acc, Series::monomial(std::move(pg), t.coeff), cap);
    }
    return exp_op(acc);
}

}  // namespace hahn
