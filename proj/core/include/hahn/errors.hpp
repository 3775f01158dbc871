#pragma once

#include <stdexcept>
#include <string>

namespace hahn {

/// Base class for all domain errors raised by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DivisionByZero : Error {
    DivisionByZero() : Error("division by zero") {}
};

/// Interval refinement hit the precision cap without separating the
/// operands. Callers must treat this as a hard failure, never as EQ.
struct UndecidedAtPrecision : Error {
    explicit UndecidedAtPrecision(long cap)
        : Error("comparison undecided at precision cap " + std::to_string(cap)) {}
};

struct NonPositiveArgument : Error {
    NonPositiveArgument() : Error("logarithm of a non-positive argument") {}
};

struct MixedRepresentation : Error {
    MixedRepresentation() : Error("nested and free monomials cannot mix") {}
};

struct ChainMismatch : Error {
    ChainMismatch() : Error("free monomials over different chains") {}
};

struct ZeroArgument : Error {
    explicit ZeroArgument(const std::string& op) : Error(op + ": zero argument") {}
};

struct TruncationObscuresComparison : Error {
    TruncationObscuresComparison()
        : Error("remainder bounds too coarse to decide comparison") {}
};

struct NotInfinitesimal : Error {
    NotInfinitesimal() : Error("displacement is not infinitesimal") {}
};

struct CenterOutOfRange : Error {
    CenterOutOfRange() : Error("expansion center outside [-1,1]") {}
};

struct IotaRangeViolation : Error {
    IotaRangeViolation() : Error("iota value is not purely infinite (> 1)") {}
};

struct PsiRangeViolation : Error {
    PsiRangeViolation() : Error("psi value is not > 1") {}
};

struct DomainViolation : Error {
    explicit DomainViolation(const std::string& what) : Error(what) {}
};

struct RangeViolation : Error {
    explicit RangeViolation(const std::string& what) : Error(what) {}
};

struct UnknownRule : Error {
    explicit UnknownRule(const std::string& what) : Error("unknown rule: " + what) {}
};

struct SyntaxError : Error {
    long position;  // 0-based offset into the input
    SyntaxError(const std::string& what, long pos)
        : Error(what + " at column " + std::to_string(pos)), position(pos) {}
};

struct UnknownIdentifier : Error {
    explicit UnknownIdentifier(const std::string& name)
        : Error("unknown identifier: " + name) {}
};

}  // namespace hahn
