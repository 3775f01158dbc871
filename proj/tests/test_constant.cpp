#include <doctest.h>

#include "hahn/constant.hpp"
#include "hahn/errors.hpp"

using namespace hahn;

TEST_CASE("rational arithmetic is exact") {
    Constant a(Rational(3, 4)), b(Rational(-2, 3));
    CHECK(Constant::add(a, b).as_rational() == Rational(1, 12));
    CHECK(Constant::mul(a, b).as_rational() == Rational(-1, 2));
    CHECK(Constant::inv(a).as_rational() == Rational(4, 3));
    CHECK(Constant::sub(a, a).is_zero());
    CHECK(Constant::pow(b, 2).as_rational() == Rational(4, 9));
    CHECK_THROWS_AS(Constant::inv(Constant(0)), DivisionByZero);
}

TEST_CASE("log splits over prime factorizations") {
    // log(6) - log(2) - log(3) normalizes to the zero literal.
    Constant lhs = Constant::log(Constant(6));
    Constant rhs = Constant::add(Constant::log(Constant(2)), Constant::log(Constant(3)));
    CHECK(Constant::sub(lhs, rhs).is_zero());
    // log(4/9) = 2 log 2 - 2 log 3.
    Constant l49 = Constant::log(Constant(Rational(4, 9)));
    Constant expect = Constant::sub(
        Constant::mul(Constant(2), Constant::log(Constant(2))),
        Constant::mul(Constant(2), Constant::log(Constant(3))));
    CHECK(Constant::sub(l49, expect).is_zero());
    CHECK(Constant::log(Constant(1)).is_zero());
    CHECK_THROWS_AS(Constant::log(Constant(0)), NonPositiveArgument);
    CHECK_THROWS_AS(Constant::log(Constant(-2)), NonPositiveArgument);
}

TEST_CASE("exp and log cancel syntactically") {
    Constant seven(7);
    CHECK(Constant::sub(Constant::exp(Constant::log(seven)), seven).is_zero());
    Constant five(5);
    CHECK(Constant::sub(Constant::log(Constant::exp(five)), five).is_zero());
    // Integer multiples of logs pull out of exp as powers.
    Constant two_log2 = Constant::mul(Constant(2), Constant::log(Constant(2)));
    CHECK(Constant::exp(two_log2).as_rational() == Rational(4));
    // exp is a homomorphism on the normal form.
    Constant x(Rational(1, 3)), y(Rational(2, 5));
    Constant prod = Constant::mul(Constant::exp(x), Constant::exp(y));
    CHECK(Constant::sub(prod, Constant::exp(Constant::add(x, y))).is_zero());
}

TEST_CASE("square roots through exp(log/2) recombine") {
    auto sqrt_of = [](long n) {
        return Constant::exp(
            Constant::mul(Constant(Rational(1, 2)), Constant::log(Constant(n))));
    };
    Constant s2 = sqrt_of(2), s3 = sqrt_of(3), s6 = sqrt_of(6);
    CHECK(Constant::sub(Constant::mul(s2, s3), s6).is_zero());
    CHECK(Constant::sub(Constant::mul(s2, s2), Constant(2)).is_zero());
}

TEST_CASE("sign and compare by interval refinement") {
    CHECK(Constant::log(Constant(2)).sign() == 1);
    CHECK(Constant::log(Constant(Rational(1, 2))).sign() == -1);
    CHECK(Constant::exp(Constant(-3)).sign() == 1);
    // e against partial sums of 1/k! with tail bound 2/10!.
    Rational lower(0);
    Rational fact(1);
    for (int k = 1; k <= 10; ++k) {
        lower += Rational(1) / fact;
        fact *= k;
    }
    Rational upper = lower + Rational(2) / fact;
    Constant e1 = Constant::exp(Constant(1));
    CHECK(Constant::compare(e1, Constant(lower)) > 0);
    CHECK(Constant::compare(e1, Constant(upper)) < 0);
    // ln 2 against partial sums of 1/(k 2^k), tail below 1/(n 2^n).
    Rational l2(0);
    Rational p(1);
    for (int k = 1; k <= 12; ++k) {
        p /= 2;
        l2 += p / k;
    }
    Constant log2 = Constant::log(Constant(2));
    CHECK(Constant::compare(log2, Constant(l2)) > 0);
    CHECK(Constant::compare(log2, Constant(l2 + p)) < 0);
}

TEST_CASE("enclosures honor the requested width") {
    Constant e1 = Constant::exp(Constant(1));
    Interval iv = e1.enclosure(40);
    CHECK(iv.width() <= Rational(Int(1), Int(1) << 40));
    Interval coarse = e1.enclosure(10);
    CHECK(coarse.lo <= iv.lo);
    CHECK(coarse.hi >= iv.hi);
}

TEST_CASE("close but unequal values hit the precision cap") {
    // A rational within 2^-80 of e cannot be separated at cap 16.
    Interval iv = Constant::exp(Constant(1)).enclosure(82);
    Constant nearby(iv.lo);
    CHECK_THROWS_AS(Constant::compare(Constant::exp(Constant(1)), nearby, 16),
                    UndecidedAtPrecision);
    // but a looser cap separates cleanly one way or the other.
    CHECK(Constant::compare(Constant::exp(Constant(1)), nearby, 128) != 0);
}

TEST_CASE("canonical text") {
    CHECK(Constant(Rational(-3, 2)).to_text() == "-3/2");
    CHECK(Constant::log(Constant(2)).to_text() == "log(2)");
    CHECK(Constant::exp(Constant(Rational(1, 2))).to_text() == "exp(1/2)");
    Constant sum = Constant::add(Constant::log(Constant(2)), Constant(1));
    CHECK(sum.is_sum());
    auto [sgn, mag] = Constant(-5).sign_split();
    CHECK(sgn == -1);
    CHECK(mag.as_rational() == Rational(5));
}
