#pragma once

#include "hahn/chain.hpp"
#include "hahn/constant.hpp"

#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace hahn {

class Series;

/// A monomial: the multiplicative identity, a nested omega-monomial
/// w^x with a series exponent, or a free Hahn monomial over an abstract
/// chain. The identity is shared by both representations; nested and
/// free monomials never otherwise mix.
class Monomial {
public:
    using FreeSupport = std::vector<std::pair<ChainElem, Constant>>;

    /// The group identity (w^0, equally the empty free product).
    static Monomial one();
    /// w^x; the zero exponent collapses to the identity.
    static Monomial omega(Series exponent);
    /// Free monomial over `chain`; support is sorted into strictly
    /// decreasing chain order, zero exponents dropped.
    static Monomial free(ChainPtr chain, FreeSupport support,
                         long precision_cap = Constant::kDefaultPrecisionCap);

    bool is_one() const;
    bool is_nested() const { return nested_ != nullptr; }
    bool is_free() const { return chain_ != nullptr; }

    /// Exponent of a nested monomial; the identity yields the zero series.
    const Series& exponent() const;
    const ChainPtr& chain() const { return chain_; }
    const FreeSupport& support() const { return support_; }

    Monomial mul(const Monomial& o, long precision_cap = Constant::kDefaultPrecisionCap) const;
    Monomial inv() const;
    /// -1 / 0 / +1 in the group order.
    int compare(const Monomial& o, long precision_cap = Constant::kDefaultPrecisionCap) const;

    std::string to_text() const;

private:
    Monomial() = default;
    std::shared_ptr<const Series> nested_;  // null unless nested
    ChainPtr chain_;                        // null unless free
    FreeSupport support_;
};

/// The omega-map on series: x -> w^x.
Monomial omega_pow(const Series& x);

}  // namespace hahn
