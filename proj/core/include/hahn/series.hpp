#pragma once

#include "hahn/constant.hpp"
#include "hahn/monomial.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hahn {

/// Budgets for the finite approximation of kappa-bounded supports.
struct TruncationContext {
    long max_terms = 64;
    long taylor_order = 8;
    long const_precision = Constant::kDefaultPrecisionCap;
};

struct Term {
    Monomial mono;
    Constant coeff;
};

/// A finite-support Hahn series: strictly decreasing monomials with
/// nonzero coefficients. An optional remainder bound m records that the
/// represented value differs from the true one by something dominated
/// by m; absent means exact. The bound is always strictly below the
/// last retained term.
class Series {
public:
    Series() = default;  // zero, exact

    static Series constant(Constant c);
    static Series rational(const Rational& q) { return constant(Constant(q)); }
    static Series monomial(Monomial m, Constant c = Constant(1));
    /// Sorts, merges and validates; terms dominated by the remainder
    /// bound are absorbed into it.
    static Series make(std::vector<Term> terms, std::optional<Monomial> remainder = {},
                       long precision_cap = Constant::kDefaultPrecisionCap);

    const std::vector<Term>& terms() const { return terms_; }
    const std::optional<Monomial>& remainder() const { return remainder_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_exact() const { return !remainder_.has_value(); }
    const Term& lead() const;

    std::string to_text() const;

private:
    std::vector<Term> terms_;
    std::optional<Monomial> remainder_;
};

Series add(const Series& a, const Series& b,
           long precision_cap = Constant::kDefaultPrecisionCap);
Series negate(const Series& a);
Series sub(const Series& a, const Series& b,
           long precision_cap = Constant::kDefaultPrecisionCap);
Series mul(const Series& a, const Series& b, const TruncationContext& ctx);
Series scalar_mul(const Series& a, const Constant& c,
                  long precision_cap = Constant::kDefaultPrecisionCap);

/// Sign of a series: sign of the leading coefficient (0 only for the
/// exact zero series).
int sign(const Series& a, long precision_cap = Constant::kDefaultPrecisionCap);
int compare(const Series& a, const Series& b,
            long precision_cap = Constant::kDefaultPrecisionCap);

enum class DomRel { Vleq, Vless, Veq, Sim };
bool dominance(DomRel rel, const Series& a, const Series& b,
               long precision_cap = Constant::kDefaultPrecisionCap);

/// x = g r (1 + eps) with eps infinitesimal; exact (division by the
/// leading term needs no truncation).
struct Decomposition {
    Monomial g;
    Constant r;
    Series eps;
};
Decomposition decompose(const Series& x,
                        long precision_cap = Constant::kDefaultPrecisionCap);

/// x = purely_infinite + constant + infinitesimal.
struct SplitResult {
    Series purely_infinite;
    Constant constant;
    Series infinitesimal;
};
SplitResult split(const Series& x,
                  long precision_cap = Constant::kDefaultPrecisionCap);

Series invert(const Series& x, const TruncationContext& ctx);
Series truncate(const Series& x, long k,
                long precision_cap = Constant::kDefaultPrecisionCap);

}  // namespace hahn
