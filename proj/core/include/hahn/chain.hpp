#pragma once

#include <functional>
#include <memory>
#include <random>
#include <string>
#include <utility>
#include <variant>

namespace hahn {

class Monomial;

/// Symbolic cofinality / coinitiality tag. Uncountable chains are never
/// enumerated; the tags are all the tower calculus consumes.
enum class CofTag { Finite, Omega, Omega1 };

std::string to_string(CofTag t);

/// Opaque element of an abstract chain. Base chains use small integer
/// data; tower stages reuse group elements (free monomials) as chain
/// handles.
class ChainElem {
public:
    using Pair = std::pair<long long, long long>;

    explicit ChainElem(long long v) : value_(v) {}
    explicit ChainElem(Pair p) : value_(p) {}
    explicit ChainElem(std::shared_ptr<const Monomial> m) : value_(std::move(m)) {}

    bool is_scalar() const { return std::holds_alternative<long long>(value_); }
    bool is_pair() const { return std::holds_alternative<Pair>(value_); }
    bool is_monomial() const {
        return std::holds_alternative<std::shared_ptr<const Monomial>>(value_);
    }

    long long scalar() const { return std::get<long long>(value_); }
    const Pair& pair() const { return std::get<Pair>(value_); }
    const Monomial& monomial() const {
        return *std::get<std::shared_ptr<const Monomial>>(value_);
    }

private:
    std::variant<long long, Pair, std::shared_ptr<const Monomial>> value_;
};

/// An abstract chain: a total-order oracle plus a bounded element
/// sampler, tagged with symbolic cofinality and coinitiality.
struct ChainDescriptor {
    std::string label;
    CofTag cof = CofTag::Omega;
    CofTag coinit = CofTag::Omega;
    std::function<int(const ChainElem&, const ChainElem&)> compare;
    std::function<ChainElem(std::mt19937_64&)> sample;
    std::function<std::string(const ChainElem&)> format;
};

using ChainPtr = std::shared_ptr<const ChainDescriptor>;

}  // namespace hahn
