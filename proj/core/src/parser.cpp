#include "hahn/parser.hpp"

#include "hahn/analytic.hpp"
#include "hahn/errors.hpp"

#include <cctype>
#include <utility>

namespace hahn {

namespace {

struct Token {
    enum class Kind { Int, Ident, Sym, End };
    Kind kind;
    std::string text;
    size_t pos;
};

std::vector<Token> lex(const std::string& s) {
    std::vector<Token> out;
    size_t i = 0;
    while (i < s.size()) {
        char c = s[i];
        if (std::isspace(static_cast<unsigned char>(c))) { ++i; continue; }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t j = i;
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
            out.push_back({Token::Kind::Int, s.substr(i, j - i), i});
            i = j;
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t j = i;
            while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_'))
                ++j;
            out.push_back({Token::Kind::Ident, s.substr(i, j - i), i});
            i = j;
            continue;
        }
        if (std::string("+-*/^(),").find(c) != std::string::npos) {
            out.push_back({Token::Kind::Sym, std::string(1, c), i});
            ++i;
            continue;
        }
        throw SyntaxError("unexpected character '" + std::string(1, c) + "'", i);
    }
    out.push_back({Token::Kind::End, "", s.size()});
    return out;
}

class Parser {
public:
    explicit Parser(const std::string& text) : toks_(lex(text)) {}

    ExprPtr parse_all() {
        ExprPtr e = parse_expr();
        if (cur().kind != Token::Kind::End)
            throw SyntaxError("trailing input '" + cur().text + "'", cur().pos);
        return e;
    }

private:
    const Token& cur() const { return toks_[i_]; }
    void advance() { ++i_; }
    bool is_sym(const char* s) const {
        return cur().kind == Token::Kind::Sym && cur().text == s;
    }
    void expect_sym(const char* s) {
        if (!is_sym(s)) throw SyntaxError(std::string("expected '") + s + "'", cur().pos);
        advance();
    }

    static ExprPtr rational_node(const Rational& q) {
        auto e = std::make_shared<Expr>();
        e->kind = Expr::Kind::Rational;
        e->rat = q;
        return e;
    }

    static ExprPtr binop(char op, ExprPtr l, ExprPtr r) {
        auto e = std::make_shared<Expr>();
        e->kind = Expr::Kind::BinOp;
        e->op = op;
        e->lhs = std::move(l);
        e->rhs = std::move(r);
        return e;
    }

    Int parse_int_literal() {
        if (cur().kind != Token::Kind::Int)
            throw SyntaxError("expected an integer", cur().pos);
        Int v(cur().text);
        advance();
        return v;
    }

    // ['-'] int ('/' posint)?  -- the exponent position only.
    Rational parse_signed_rational() {
        bool neg = false;
        if (is_sym("-")) { neg = true; advance(); }
        Int num = parse_int_literal();
        Int den = 1;
        if (is_sym("/")) {
            advance();
            den = parse_int_literal();
            if (den <= 0) throw SyntaxError("denominator must be positive", cur().pos);
        }
        Rational q(num, den);
        return neg ? -q : q;
    }

    ExprPtr parse_expr() {
        ExprPtr acc;
        if (is_sym("-")) {
            advance();
            acc = binop('-', rational_node(Rational(0)), parse_term());
        } else {
            acc = parse_term();
        }
        while (is_sym("+") || is_sym("-")) {
            char op = cur().text[0];
            advance();
            acc = binop(op, std::move(acc), parse_term());
        }
        return acc;
    }

    ExprPtr parse_term() {
        ExprPtr acc = parse_factor();
        while (is_sym("*") || is_sym("/")) {
            char op = cur().text[0];
            advance();
            acc = binop(op, std::move(acc), parse_factor());
        }
        return acc;
    }

    ExprPtr parse_factor() {
        ExprPtr base = parse_atom();
        if (is_sym("^")) {
            advance();
            auto e = std::make_shared<Expr>();
            e->kind = Expr::Kind::Pow;
            e->lhs = std::move(base);
            e->rat = parse_signed_rational();
            return e;
        }
        return base;
    }

    ExprPtr keyword_node() {
        if (cur().kind != Token::Kind::Ident)
            throw SyntaxError("expected a keyword", cur().pos);
        auto e = std::make_shared<Expr>();
        e->kind = Expr::Kind::Call;
        e->name = cur().text;
        advance();
        return e;
    }

    ExprPtr parse_atom() {
        if (cur().kind == Token::Kind::Int)
            return rational_node(Rational(parse_int_literal()));
        if (is_sym("(")) {
            advance();
            ExprPtr e = parse_expr();
            expect_sym(")");
            return e;
        }
        if (cur().kind == Token::Kind::Ident) {
            std::string name = cur().text;
            size_t pos = cur().pos;
            advance();
            if (name == "w") {
                expect_sym("^");
                auto e = std::make_shared<Expr>();
                e->kind = Expr::Kind::Omega;
                if (cur().kind == Token::Kind::Int) {
                    e->lhs = rational_node(Rational(parse_int_literal()));
                } else {
                    expect_sym("(");
                    e->lhs = parse_expr();
                    expect_sym(")");
                }
                return e;
            }
            auto e = std::make_shared<Expr>();
            e->kind = Expr::Kind::Call;
            e->name = name;
            expect_sym("(");
            // dom and taylor take a leading bare keyword.
            if (name == "dom" || name == "taylor") {
                e->args.push_back(keyword_node());
                expect_sym(",");
            }
            if (!is_sym(")")) {
                e->args.push_back(parse_expr());
                while (is_sym(",")) {
                    advance();
                    e->args.push_back(parse_expr());
                }
            }
            expect_sym(")");
            (void)pos;
            return e;
        }
        throw SyntaxError("expected a value", cur().pos);
    }

    std::vector<Token> toks_;
    size_t i_ = 0;
};

Series int_pow(const Series& base, const Int& k, const EvalOptions& o) {
    if (k == 0) return Series::rational(Rational(1));
    if (abs(k) > 64) throw Error("integer exponent too large");
    Series b = k < 0 ? invert(base, o.ctx) : base;
    Int n = k < 0 ? Int(-k) : k;
    Series acc = Series::rational(Rational(1));
    for (Int i = 0; i < n; ++i) acc = mul(acc, b, o.ctx);
    return acc;
}

void expect_args(const Expr& e, size_t n) {
    if (e.args.size() != n)
        throw Error(e.name + " expects " + std::to_string(n) + " argument(s)");
}

DomRel parse_rel(const std::string& s) {
    if (s == "vleq") return DomRel::Vleq;
    if (s == "vless") return DomRel::Vless;
    if (s == "veq") return DomRel::Veq;
    if (s == "sim") return DomRel::Sim;
    throw UnknownIdentifier(s);
}

}  // namespace

ExprPtr parse(const std::string& text) { return Parser(text).parse_all(); }

Series eval_series(const ExprPtr& e, const EvalOptions& opts) {
    Value v = eval(e, opts);
    if (auto* s = std::get_if<Series>(&v)) return *s;
    throw Error("expected a series value");
}

Value eval(const ExprPtr& e, const EvalOptions& opts) {
    long cap = opts.ctx.const_precision;
    switch (e->kind) {
        case Expr::Kind::Rational:
            return Series::rational(e->rat);
        case Expr::Kind::Omega:
            return Series::monomial(Monomial::omega(eval_series(e->lhs, opts)));
        case Expr::Kind::BinOp: {
            Series a = eval_series(e->lhs, opts);
            Series b = eval_series(e->rhs, opts);
            switch (e->op) {
                case '+': return add(a, b, cap);
                case '-': return sub(a, b, cap);
                case '*': return mul(a, b, opts.ctx);
                case '/': return mul(a, invert(b, opts.ctx), opts.ctx);
            }
            throw Error("unknown operator");
        }
        case Expr::Kind::Pow: {
            Series base = eval_series(e->lhs, opts);
            if (is_integer(e->rat))
                return int_pow(base, boost::multiprecision::numerator(e->rat), opts);
            // Fractional exponent: y^r = e^{r log y}, base must be positive.
            return exp(scalar_mul(log(base, opts.h, opts.ctx), Constant(e->rat), cap),
                       opts.h, opts.ctx);
        }
        case Expr::Kind::Call: {
            const std::string& f = e->name;
            if (f == "log") {
                expect_args(*e, 1);
                return log(eval_series(e->args[0], opts), opts.h, opts.ctx);
            }
            if (f == "exp") {
                expect_args(*e, 1);
                return exp(eval_series(e->args[0], opts), opts.h, opts.ctx);
            }
            if (f == "decompose") {
                expect_args(*e, 1);
                return decompose(eval_series(e->args[0], opts), cap);
            }
            if (f == "split") {
                expect_args(*e, 1);
                return split(eval_series(e->args[0], opts), cap);
            }
            if (f == "cmp") {
                expect_args(*e, 2);
                return CmpValue{compare(eval_series(e->args[0], opts),
                                        eval_series(e->args[1], opts), cap)};
            }
            if (f == "dom") {
                expect_args(*e, 3);
                return dominance(parse_rel(e->args[0]->name),
                                 eval_series(e->args[1], opts),
                                 eval_series(e->args[2], opts), cap);
            }
            if (f == "taylor") {
                expect_args(*e, 2);
                return eval_power_series(named_oracle(e->args[0]->name),
                                         eval_series(e->args[1], opts), opts.ctx);
            }
            throw UnknownIdentifier(f);
        }
    }
    throw Error("unreachable expression kind");
}

std::string render(const Value& v, bool annotate_remainder) {
    if (auto* s = std::get_if<Series>(&v)) {
        std::string out = s->to_text();
        if (annotate_remainder && !s->is_exact())
            out += " + O(" + s->remainder()->to_text() + ")";
        return out;
    }
    if (auto* c = std::get_if<CmpValue>(&v))
        return c->result < 0 ? "LT" : c->result > 0 ? "GT" : "EQ";
    if (auto* b = std::get_if<bool>(&v)) return *b ? "true" : "false";
    if (auto* d = std::get_if<Decomposition>(&v)) {
        Value eps = d->eps;
        return "g = " + d->g.to_text() + ", r = " + d->r.to_text() +
               ", eps = " + render(eps, annotate_remainder);
    }
    const SplitResult& sp = std::get<SplitResult>(v);
    Value inf = sp.purely_infinite, small = sp.infinitesimal;
    return "purely_infinite = " + render(inf, annotate_remainder) +
           ", constant = " + sp.constant.to_text() +
           ", infinitesimal = " + render(small, annotate_remainder);
}

}  // namespace hahn
