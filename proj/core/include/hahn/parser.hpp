#pragma once

#include "hahn/explog.hpp"
#include "hahn/series.hpp"

#include <memory>
#include <string>
#include <variant>
#include <vector>

namespace hahn {

/// Expression AST. Grammar (whitespace insensitive):
///   expr     := ['-'] term (('+'|'-') term)*
///   term     := factor (('*'|'/') factor)*
///   factor   := atom ('^' srational)?
///   atom     := rational | 'w' '^' wexp | ident '(' args ')' | '(' expr ')'
///   wexp     := posint | '(' expr ')'
///   srational:= ['-'] int ('/' posint)?
/// Integer '^' exponents are exact powers; other rationals are sugar for
/// exp(r*log(base)) and need a positive base.
struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
    enum class Kind { Rational, Omega, BinOp, Pow, Call };
    Kind kind;
    ::hahn::Rational rat;        // Rational literal; Pow exponent
    char op = 0;                 // BinOp: + - * /
    ExprPtr lhs, rhs;            // BinOp operands; Pow/Omega base or exponent in lhs
    std::string name;            // Call target; also dom relation / oracle keyword
    std::vector<ExprPtr> args;   // Call arguments
};

/// Throws SyntaxError with a 0-based position on malformed input.
ExprPtr parse(const std::string& text);

struct EvalOptions {
    TruncationContext ctx;
    HFunction h = make_h(HKind::Boot);
};

struct CmpValue {
    int result;  // -1 / 0 / +1
};

using Value = std::variant<Series, CmpValue, bool, Decomposition, SplitResult>;

Value eval(const ExprPtr& e, const EvalOptions& opts);
/// eval restricted to expressions denoting a series.
Series eval_series(const ExprPtr& e, const EvalOptions& opts);

/// Renders a Value in the canonical text form. Inexact series get a
/// trailing " + O(mono)" annotation (display only, not part of the
/// grammar).
std::string render(const Value& v, bool annotate_remainder = true);

}  // namespace hahn
