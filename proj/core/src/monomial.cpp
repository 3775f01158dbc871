#include "hahn/monomial.hpp"

#include "hahn/errors.hpp"
#include "hahn/series.hpp"

#include <algorithm>

namespace hahn {

std::string to_string(CofTag t) {
    switch (t) {
        case CofTag::Finite: return "finite";
        case CofTag::Omega: return "omega";
        case CofTag::Omega1: return "omega1";
    }
    return "?";
}

Monomial Monomial::one() { return Monomial(); }

Monomial Monomial::omega(Series exponent) {
    if (exponent.is_zero() && exponent.is_exact()) return one();
    Monomial m;
    m.nested_ = std::make_shared<const Series>(std::move(exponent));
    return m;
}

Monomial omega_pow(const Series& x) { return Monomial::omega(x); }

Monomial Monomial::free(ChainPtr chain, FreeSupport support, long precision_cap) {
    if (!chain) throw Error("free monomial requires a chain");
    std::stable_sort(support.begin(), support.end(),
                     [&](const auto& a, const auto& b) {
                         return chain->compare(a.first, b.first) > 0;
                     });
    FreeSupport merged;
    for (auto& [g, c] : support) {
        if (!merged.empty() && chain->compare(merged.back().first, g) == 0) {
            merged.back().second = Constant::add(merged.back().second, c);
            if (merged.back().second.is_zero()) merged.pop_back();
        } else if (!c.is_zero()) {
            merged.emplace_back(g, c);
        }
    }
    (void)precision_cap;
    if (merged.empty()) return one();
    Monomial m;
    m.chain_ = std::move(chain);
    m.support_ = std::move(merged);
    return m;
}

bool Monomial::is_one() const { return !nested_ && !chain_; }

const Series& Monomial::exponent() const {
    static const Series zero{};
    return nested_ ? *nested_ : zero;
}

Monomial Monomial::mul(const Monomial& o, long precision_cap) const {
    if (is_one()) return o;
    if (o.is_one()) return *this;
    if (is_nested() && o.is_nested())
        return omega(add(exponent(), o.exponent(), precision_cap));
    if (is_free() && o.is_free()) {
        if (chain_.get() != o.chain_.get()) throw ChainMismatch();
        FreeSupport merged = support_;
        merged.insert(merged.end(), o.support_.begin(), o.support_.end());
        return free(chain_, std::move(merged), precision_cap);
    }
    throw MixedRepresentation();
}

Monomial Monomial::inv() const {
    if (is_one()) return *this;
    if (is_nested()) return omega(negate(exponent()));
    FreeSupport negated = support_;
    for (auto& [g, c] : negated) c = Constant::neg(c);
    Monomial m;
    m.chain_ = chain_;
    m.support_ = std::move(negated);
    return m;
}

int Monomial::compare(const Monomial& o, long precision_cap) const {
    if (nested_ == o.nested_ && !chain_ && !o.chain_) return 0;
    if ((is_nested() && o.is_free()) || (is_free() && o.is_nested()))
        throw MixedRepresentation();
    if (is_nested() || o.is_nested())
        return hahn::compare(exponent(), o.exponent(), precision_cap);
    // Free case (possibly against the identity): sign of the quotient's
    // leading exponent.
    const ChainPtr& ch = chain_ ? chain_ : o.chain_;
    size_t i = 0, j = 0;
    while (i < support_.size() || j < o.support_.size()) {
        if (i == support_.size())
            return -o.support_[j].second.sign(precision_cap);
        if (j == o.support_.size())
            return support_[i].second.sign(precision_cap);
        int c = ch->compare(support_[i].first, o.support_[j].first);
        if (c > 0) return support_[i].second.sign(precision_cap);
        if (c < 0) return -o.support_[j].second.sign(precision_cap);
        int d = Constant::compare(support_[i].second, o.support_[j].second, precision_cap);
        if (d) return d;
        ++i, ++j;
    }
    return 0;
}

namespace {

std::string exponent_text(const Constant& c) {
    if (c.is_rational()) {
        Rational q = c.as_rational();
        if (is_integer(q) && q > 0) return to_string(q);
    }
    return "(" + c.to_text() + ")";
}

}  // namespace

std::string Monomial::to_text() const {
    if (is_one()) return "1";
    if (is_nested()) {
        const Series& e = exponent();
        // w^N for a bare positive-integer exponent, parenthesized otherwise.
        if (e.is_exact() && e.terms().size() == 1 && e.terms()[0].mono.is_one() &&
            e.terms()[0].coeff.is_rational()) {
            Rational q = e.terms()[0].coeff.as_rational();
            if (is_integer(q) && q > 0) return "w^" + to_string(q);
        }
        return "w^(" + e.to_text() + ")";
    }
    std::string out;
    for (const auto& [g, c] : support_) {
        if (!out.empty()) out += "*";
        out += "t[" + chain_->format(g) + "]^" + exponent_text(c);
    }
    return out;
}

}  // namespace hahn
