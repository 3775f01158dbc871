#include "hahn/series.hpp"

#include "hahn/errors.hpp"

#include <algorithm>
#include <utility>

namespace hahn {

namespace {

// Pick the larger of two remainder bounds.
std::optional<Monomial> max_remainder(const std::optional<Monomial>& a,
                                      const std::optional<Monomial>& b, long cap) {
    if (!a) return b;
    if (!b) return a;
    return a->compare(*b, cap) >= 0 ? a : b;
}

Monomial mono_pow(const Monomial& m, long n, long cap) {
    if (n == 0 || m.is_one()) return Monomial::one();
    if (m.is_nested()) return Monomial::omega(scalar_mul(m.exponent(), Constant(n), cap));
    Monomial::FreeSupport support = m.support();
    for (auto& [g, c] : support) c = Constant::mul(c, Constant(n));
    return Monomial::free(m.chain(), std::move(support), cap);
}

}  // namespace

Series Series::constant(Constant c) {
    if (c.is_zero()) return Series();
    return monomial(Monomial::one(), std::move(c));
}

Series Series::monomial(Monomial m, Constant c) {
    Series s;
    if (!c.is_zero()) s.terms_.push_back(Term{std::move(m), std::move(c)});
    return s;
}

Series Series::make(std::vector<Term> terms, std::optional<Monomial> remainder,
                    long precision_cap) {
    std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
        return a.mono.compare(b.mono, precision_cap) > 0;
    });
    std::vector<Term> merged;
    for (auto& t : terms) {
        if (t.coeff.is_zero()) continue;
        if (!merged.empty() && merged.back().mono.compare(t.mono, precision_cap) == 0) {
            merged.back().coeff = Constant::add(merged.back().coeff, t.coeff);
            if (merged.back().coeff.is_zero()) merged.pop_back();
        } else {
            merged.push_back(std::move(t));
        }
    }
    if (remainder) {
        // Terms at or below the bound carry no information; absorb them.
        while (!merged.empty() &&
               merged.back().mono.compare(*remainder, precision_cap) <= 0)
            merged.pop_back();
    }
    Series s;
    s.terms_ = std::move(merged);
    s.remainder_ = std::move(remainder);
    return s;
}

const Term& Series::lead() const {
    if (terms_.empty()) throw ZeroArgument("lead");
    return terms_[0];
}

Series add(const Series& a, const Series& b, long precision_cap) {
    std::vector<Term> out;
    size_t i = 0, j = 0;
    const auto& ta = a.terms();
    const auto& tb = b.terms();
    while (i < ta.size() && j < tb.size()) {
        int c = ta[i].mono.compare(tb[j].mono, precision_cap);
        if (c > 0) out.push_back(ta[i++]);
        else if (c < 0) out.push_back(tb[j++]);
        else {
            Constant sum = Constant::add(ta[i].coeff, tb[j].coeff);
            if (!sum.is_zero()) out.push_back(Term{ta[i].mono, std::move(sum)});
            ++i, ++j;
        }
    }
    while (i < ta.size()) out.push_back(ta[i++]);
    while (j < tb.size()) out.push_back(tb[j++]);
    return Series::make(std::move(out),
                        max_remainder(a.remainder(), b.remainder(), precision_cap),
                        precision_cap);
}

Series negate(const Series& a) {
    std::vector<Term> out = a.terms();
    for (auto& t : out) t.coeff = Constant::neg(t.coeff);
    // Negation preserves the term order and the bound.
    std::optional<Monomial> rem = a.remainder();
    return Series::make(std::move(out), std::move(rem));
}

Series sub(const Series& a, const Series& b, long precision_cap) {
    return add(a, negate(b), precision_cap);
}

Series scalar_mul(const Series& a, const Constant& c, long precision_cap) {
    if (c.is_zero()) return Series();
    std::vector<Term> out = a.terms();
    for (auto& t : out) t.coeff = Constant::mul(t.coeff, c);
    std::optional<Monomial> rem = a.remainder();
    return Series::make(std::move(out), std::move(rem), precision_cap);
}

Series mul(const Series& a, const Series& b, const TruncationContext& ctx) {
    long cap = ctx.const_precision;
    std::vector<Term> out;
    out.reserve(a.terms().size() * b.terms().size());
    for (const auto& ta : a.terms())
        for (const auto& tb : b.terms())
            out.push_back(Term{ta.mono.mul(tb.mono, cap),
                               Constant::mul(ta.coeff, tb.coeff)});

    std::optional<Monomial> rem;
    if (a.remainder() && !b.is_zero())
        rem = max_remainder(rem, a.remainder()->mul(b.lead().mono, cap), cap);
    if (b.remainder() && !a.is_zero())
        rem = max_remainder(rem, b.remainder()->mul(a.lead().mono, cap), cap);
    if (a.remainder() && b.remainder())
        rem = max_remainder(rem, a.remainder()->mul(*b.remainder(), cap), cap);

    Series s = Series::make(std::move(out), std::move(rem), cap);
    if (static_cast<long>(s.terms().size()) > ctx.max_terms) {
        std::vector<Term> kept(s.terms().begin(), s.terms().begin() + ctx.max_terms);
        Monomial bound = s.terms()[ctx.max_terms].mono;
        return Series::make(std::move(kept),
                            max_remainder(s.remainder(), bound, cap), cap);
    }
    return s;
}

int sign(const Series& a, long precision_cap) {
    if (a.is_zero()) {
        if (!a.is_exact()) throw TruncationObscuresComparison();
        return 0;
    }
    return a.lead().coeff.sign(precision_cap);
}

int compare(const Series& a, const Series& b, long precision_cap) {
    const auto& ta = a.terms();
    const auto& tb = b.terms();
    auto decidable_at = [&](const Monomial& m) {
        if (a.remainder() && m.compare(*a.remainder(), precision_cap) <= 0) return false;
        if (b.remainder() && m.compare(*b.remainder(), precision_cap) <= 0) return false;
        return true;
    };
    size_t i = 0, j = 0;
    while (i < ta.size() || j < tb.size()) {
        const Monomial* m;
        int tentative;
        if (j == tb.size() ||
            (i < ta.size() && ta[i].mono.compare(tb[j].mono, precision_cap) > 0)) {
            m = &ta[i].mono;
            tentative = ta[i].coeff.sign(precision_cap);
            ++i;
        } else if (i == ta.size() || ta[i].mono.compare(tb[j].mono, precision_cap) < 0) {
            m = &tb[j].mono;
            tentative = -tb[j].coeff.sign(precision_cap);
            ++j;
        } else {
            m = &ta[i].mono;
            tentative = Constant::compare(ta[i].coeff, tb[j].coeff, precision_cap);
            ++i, ++j;
        }
        if (tentative != 0) {
            if (!decidable_at(*m)) throw TruncationObscuresComparison();
            return tentative;
        }
    }
    if (a.remainder() || b.remainder()) throw TruncationObscuresComparison();
    return 0;
}

bool dominance(DomRel rel, const Series& a, const Series& b, long precision_cap) {
    bool az = a.is_zero(), bz = b.is_zero();
    if ((az && !a.is_exact()) || (bz && !b.is_exact()))
        throw TruncationObscuresComparison();
    switch (rel) {
        case DomRel::Vleq:
            if (az) return true;
            if (bz) return false;
            return a.lead().mono.compare(b.lead().mono, precision_cap) <= 0;
        case DomRel::Vless:
            if (az) return !bz;
            if (bz) return false;
            return a.lead().mono.compare(b.lead().mono, precision_cap) < 0;
        case DomRel::Veq:
            if (az || bz) return az == bz;
            return a.lead().mono.compare(b.lead().mono, precision_cap) == 0;
        case DomRel::Sim:
            if (az || bz) return az == bz;
            return a.lead().mono.compare(b.lead().mono, precision_cap) == 0 &&
                   Constant::compare(a.lead().coeff, b.lead().coeff, precision_cap) == 0;
    }
    throw Error("unreachable dominance relation");
}

Decomposition decompose(const Series& x, long precision_cap) {
    if (x.is_zero()) throw ZeroArgument("decompose");
    const Monomial& g = x.lead().mono;
    const Constant& r = x.lead().coeff;
    Monomial ginv = g.inv();
    Constant rinv = Constant::inv(r, precision_cap);
    std::vector<Term> eps;
    for (size_t i = 1; i < x.terms().size(); ++i)
        eps.push_back(Term{x.terms()[i].mono.mul(ginv, precision_cap),
                           Constant::mul(x.terms()[i].coeff, rinv)});
    std::optional<Monomial> rem;
    if (x.remainder()) rem = x.remainder()->mul(ginv, precision_cap);
    return Decomposition{g, r, Series::make(std::move(eps), std::move(rem), precision_cap)};
}

SplitResult split(const Series& x, long precision_cap) {
    Monomial one = Monomial::one();
    std::optional<Monomial> inf_rem;
    if (x.remainder()) {
        if (x.remainder()->compare(one, precision_cap) >= 0)
            throw TruncationObscuresComparison();
        inf_rem = x.remainder();
    }
    std::vector<Term> big, small;
    Constant c;
    for (const auto& t : x.terms()) {
        int cmp = t.mono.compare(one, precision_cap);
        if (cmp > 0) big.push_back(t);
        else if (cmp == 0) c = t.coeff;
        else small.push_back(t);
    }
    return SplitResult{Series::make(std::move(big), {}, precision_cap), c,
                       Series::make(std::move(small), std::move(inf_rem), precision_cap)};
}

Series invert(const Series& x, const TruncationContext& ctx) {
    if (x.is_zero()) throw ZeroArgument("invert");
    long cap = ctx.const_precision;
    Decomposition d = decompose(x, cap);
    Series base = Series::monomial(d.g.inv(), Constant::inv(d.r, cap));
    if (d.eps.is_zero() && d.eps.is_exact()) return base;
    // Geometric series in -eps, truncated at the Taylor order.
    long n_terms = ctx.taylor_order;
    Series neg_eps = negate(d.eps);
    Series geo = Series::rational(Rational(1));
    Series p = Series::rational(Rational(1));
    for (long n = 1; n <= n_terms; ++n) {
        p = mul(p, neg_eps, ctx);
        geo = add(geo, p, cap);
    }
    std::optional<Monomial> rem = geo.remainder();
    if (!d.eps.is_zero()) {
        Monomial tail = mono_pow(d.eps.lead().mono, n_terms + 1, cap);
        rem = max_remainder(rem, tail, cap);
    }
    geo = Series::make(geo.terms(), std::move(rem), cap);
    return mul(base, geo, ctx);
}

Series truncate(const Series& x, long k, long precision_cap) {
    if (k < 0) throw Error("truncate: negative length");
    if (k >= static_cast<long>(x.terms().size())) return x;
    std::vector<Term> kept(x.terms().begin(), x.terms().begin() + k);
    Monomial bound = x.terms()[k].mono;
    return Series::make(std::move(kept), bound, precision_cap);
}

std::string Series::to_text() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& t : terms_) {
        auto [sgn, mag] = t.coeff.sign_split();
        if (first) {
            if (sgn < 0) out += "-";
            first = false;
        } else {
            out += sgn < 0 ? " - " : " + ";
        }
        std::string coeff_text =
            mag.is_sum() ? "(" + mag.to_text() + ")" : mag.to_text();
        if (t.mono.is_one()) {
            out += coeff_text;
        } else if (mag.is_one()) {
            out += t.mono.to_text();
        } else {
            out += t.mono.to_text() + "*" + coeff_text;
        }
    }
    return out;
}

}  // namespace hahn
