#include <doctest.h>

#include "hahn/errors.hpp"
#include "hahn/parser.hpp"
#include "hahn/sampling.hpp"

#include "helpers.hpp"

using namespace hahn;
using namespace hahn::testing;

namespace {

Series eval_text(const std::string& text, const EvalOptions& opts = {}) {
    return eval_series(parse(text), opts);
}

std::string render_text(const std::string& text, const EvalOptions& opts = {}) {
    return render(eval(parse(text), opts));
}

}  // namespace

TEST_CASE("literals and arithmetic") {
    Series s = eval_text("w^(w^2)*3 + 1/2");
    REQUIRE(s.terms().size() == 2);
    CHECK(s.terms()[0].mono.compare(
              Monomial::omega(Series::monomial(Monomial::omega(rat(Rational(2)))))) == 0);
    CHECK(s.terms()[0].coeff.as_rational() == Rational(3));
    CHECK(s.terms()[1].coeff.as_rational() == Rational(1, 2));

    CHECK(series_equal(eval_text("2/3"), rat(Rational(2, 3))));
    CHECK(series_equal(eval_text("-w^1*2 + w^1*5"), scalar_mul(w_pow(Rational(1)), Constant(3))));
    CHECK(series_equal(eval_text("(w^1 + 1) * (w^1 - 1)"),
                       sub(eval_text("w^2"), rat(Rational(1)))));
    CHECK(eval_text("1/(1 - 1/2)").terms()[0].coeff.as_rational() == Rational(2));
}

TEST_CASE("powers: integer exact, fractional through exp and log") {
    CHECK(series_equal(eval_text("2^2"), rat(Rational(4))));
    CHECK(series_equal(eval_text("2^-2"), rat(Rational(1, 4))));
    CHECK(series_equal(eval_text("(w^1 + 1)^2"),
                       eval_text("w^2 + w^1*2 + 1")));
    CHECK(series_equal(eval_text("4^1/2"), rat(Rational(2))));
    CHECK(series_equal(eval_text("8^-1/3"), rat(Rational(1, 2))));
    CHECK(series_equal(eval_text("w^1^1/2"), w_pow(Rational(1, 2))));
    CHECK(series_equal(eval_text("w^2^0"), rat(Rational(1))));
}

TEST_CASE("named calls and rendering") {
    EvalOptions h0;
    h0.h = make_h(HKind::H0);
    CHECK(render_text("log(w^(w^1))", h0) == "w^2");
    CHECK(render_text("exp(w^2)", h0) == "w^(w^1)");
    CHECK(render_text("cmp(w^1, 5)") == "GT");
    CHECK(render_text("cmp(5, 5)") == "EQ");
    CHECK(render_text("cmp(1/3, 5)") == "LT");
    CHECK(render_text("dom(vless, w^1, w^2)") == "true");
    CHECK(render_text("dom(veq, w^1, w^1*7)") == "true");
    CHECK(render_text("dom(sim, w^1, w^1*7)") == "false");
    CHECK(render_text("decompose(w^1*3 + w^1/2)") ==
          "g = w^1, r = 7/2, eps = 0");
    CHECK(render_text("split(w^1 + 2 + w^(-1))") ==
          "purely_infinite = w^1, constant = 2, infinitesimal = w^(-1)");

    std::string taylor = render_text("taylor(log1p, w^(-1))");
    CHECK(taylor.substr(0, 31) == "w^(-1) - w^(-2)*1/2 + w^(-3)*1/");
    CHECK(taylor.find(" + O(w^(-9))") != std::string::npos);
}

TEST_CASE("syntax errors carry the offending position") {
    CHECK_THROWS_WITH_AS(parse("w^("), "expected a value at column 3", SyntaxError);
    CHECK_THROWS_WITH_AS(parse("1 + "), "expected a value at column 4", SyntaxError);
    CHECK_THROWS_WITH_AS(parse("(1"), "expected ')' at column 2", SyntaxError);
    CHECK_THROWS_WITH_AS(parse("1 2"), "trailing input '2' at column 2", SyntaxError);
    CHECK_THROWS_WITH_AS(parse("1 @ 2"), "unexpected character '@' at column 2",
                         SyntaxError);
    CHECK_THROWS_AS(parse("w + 1"), SyntaxError);  // bare w is not a value
    CHECK_THROWS_AS(eval(parse("frobnicate(1)"), {}), UnknownIdentifier);
    CHECK_THROWS_AS(eval(parse("dom(sideways, 1, 2)"), {}), UnknownIdentifier);
    CHECK_THROWS_AS(eval(parse("log(w^1, 2)"), {}), Error);  // arity
    CHECK_THROWS_AS(eval(parse("1/0"), {}), ZeroArgument);
}

TEST_CASE("series values survive a print and reparse round trip") {
    Sampler sampler(271);
    EvalOptions opts;
    int nontrivial = 0;
    for (int i = 0; i < 200; ++i) {
        Series x = sampler.rational_series(5, 3);
        std::string text = x.to_text();
        Series back = eval_text(text, opts);
        CHECK(series_equal(back, x));
        CHECK(back.to_text() == text);
        if (x.terms().size() >= 2) ++nontrivial;
    }
    CHECK(nontrivial > 50);  // the sampler is actually exercising the grammar
}

TEST_CASE("constant coefficients reparse too") {
    Sampler sampler(307);
    for (int i = 0; i < 60; ++i) {
        Series x = sampler.nested_series(4, 2);
        std::string text = x.to_text();
        Series back = eval_text(text);
        CHECK(series_equal(back, x));
        CHECK(back.to_text() == text);
    }
}
