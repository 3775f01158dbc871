#pragma once

#include "hahn/interval.hpp"
#include "hahn/rational.hpp"

#include <memory>
#include <string>

namespace hahn {

struct CData;

/// An exact elementary constant: the closure of the rationals under
/// field operations, exp and log. Values are kept in a seminormal form
/// (a rational linear combination of products of exp/log/reciprocal
/// atoms) so that the cancellations the library relies on -- exp/log
/// inversion, exp(a)exp(b) = exp(a+b), log(ab) = log(a)+log(b) on
/// certified-positive factors, rational folding -- happen syntactically.
/// Everything else is decided by refinable interval evaluation.
///
/// Equality is only ever reported when the difference normalizes to the
/// zero literal; an inconclusive interval comparison raises
/// UndecidedAtPrecision rather than defaulting to EQ.
class Constant {
public:
    Constant();  // zero
    Constant(long n);
    Constant(const Rational& q);

    static Constant add(const Constant& a, const Constant& b);
    static Constant sub(const Constant& a, const Constant& b);
    static Constant neg(const Constant& a);
    static Constant mul(const Constant& a, const Constant& b);
    static Constant inv(const Constant& a, long precision_cap = kDefaultPrecisionCap);
    static Constant exp(const Constant& a);
    static Constant log(const Constant& a, long precision_cap = kDefaultPrecisionCap);
    /// Integer power; negative exponents go through inv.
    static Constant pow(const Constant& a, long k, long precision_cap = kDefaultPrecisionCap);

    bool is_zero() const;
    bool is_one() const;
    bool is_rational() const;
    const Rational& as_rational() const;

    /// -1, 0 or +1. Zero only when the value normalizes to the zero
    /// literal; otherwise decided by interval refinement up to the cap.
    int sign(long precision_cap = kDefaultPrecisionCap) const;
    static int compare(const Constant& a, const Constant& b,
                       long precision_cap = kDefaultPrecisionCap);

    /// Rational enclosure of width <= 2^-precision, always containing
    /// the denoted real. Cached; concurrent refinement is idempotent.
    Interval enclosure(long precision) const;

    /// Canonical text, re-parseable through the CLI expression grammar.
    std::string to_text() const;

    /// (sign, magnitude) split on the structurally leading term, used by
    /// the series printer to fold signs into +/- separators.
    std::pair<int, Constant> sign_split() const;
    /// True when the printed form needs parentheses inside a product.
    bool is_sum() const;

    /// Total order on normal forms (not the value order); 0 iff the two
    /// normal forms are identical.
    static int structural_compare(const Constant& a, const Constant& b);
    bool identical(const Constant& o) const { return structural_compare(*this, o) == 0; }

    static constexpr long kDefaultPrecisionCap = 64;

private:
    explicit Constant(std::shared_ptr<const CData> data);
    std::shared_ptr<const CData> data_;
    friend struct ConstantOps;
};

}  // namespace hahn
