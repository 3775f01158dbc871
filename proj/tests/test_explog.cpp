#include <doctest.h>

#include "hahn/errors.hpp"
#include "hahn/explog.hpp"
#include "hahn/sampling.hpp"
#include "hahn/towers.hpp"

#include "helpers.hpp"

using namespace hahn;
using namespace hahn::testing;

namespace {

const TruncationContext kCtx;

Series mono_series(const Rational& outer_coeff, const Series& exponent) {
    return Series::monomial(Monomial::omega(exponent), Constant(outer_coeff));
}

}  // namespace

TEST_CASE("h_apply closed forms") {
    HFunction h0 = make_h(HKind::H0), h1 = make_h(HKind::H1);
    CHECK(series_equal(h_apply(h0, rat(Rational(1)), kCtx), rat(Rational(2))));
    CHECK(series_equal(h_apply(h0, rat(Rational(-1)), kCtx), rat(Rational(1, 2))));
    CHECK(series_equal(h_apply(h1, rat(Rational(4)), kCtx), rat(Rational(3))));
    CHECK(series_equal(h_apply(h1, rat(Rational(-1)), kCtx), rat(Rational(1, 2))));
    CHECK(series_equal(h_apply(h0, rat(Rational(0)), kCtx), rat(Rational(1))));
}

TEST_CASE("h_inverse closed forms and round trips") {
    HFunction h0 = make_h(HKind::H0), h1 = make_h(HKind::H1);
    CHECK(series_equal(h_inverse(h0, rat(Rational(2)), kCtx), rat(Rational(1))));
    CHECK(series_equal(h_inverse(h1, rat(Rational(3)), kCtx), rat(Rational(4))));
    CHECK(series_equal(h_inverse(h0, rat(Rational(1, 2)), kCtx), rat(Rational(-1))));
    CHECK_THROWS_AS(h_inverse(h0, rat(Rational(-1)), kCtx), NonPositiveArgument);
    Sampler sampler(7);
    for (int i = 0; i < 60; ++i) {
        Rational q = sampler.rational();
        for (auto* h : {&h0, &h1}) {
            Series x = rat(q);
            CHECK(series_equal(h_inverse(*h, h_apply(*h, x, kCtx), kCtx), x));
        }
    }
}

TEST_CASE("boot branches agree at the seams") {
    HFunction boot = make_h(HKind::Boot);
    const Series& c = boot_constant(boot, kCtx);
    // c = w^(-w^4)
    Series minus_w4 = mono_series(Rational(-1), rat(Rational(4)));
    CHECK(series_equal(c, Series::monomial(Monomial::omega(minus_w4))));
    Series minus_w3 = mono_series(Rational(-1), rat(Rational(3)));
    // branch 4 and branch 3 both give c at x = -w^3
    CHECK(series_equal(h_apply(boot, minus_w3, kCtx), c));
    // branch 3 and branch 2 both give 2c at x = 0
    Series two_c = scalar_mul(c, Constant(2));
    CHECK(series_equal(h_apply(boot, Series(), kCtx), two_c));
    // inverses at the seams
    CHECK(h_inverse(boot, two_c, kCtx).is_zero());
    CHECK(series_equal(h_inverse(boot, c, kCtx), minus_w3));
    // interior points of each branch round trip
    for (const Series& x : {rat(Rational(1, 2)), w_pow(Rational(1)),
                            scalar_mul(w_pow(Rational(3)), Constant(-2)),
                            negate(w_pow(Rational(5))), negate(rat(Rational(7)))}) {
        CHECK(series_equal(h_inverse(boot, h_apply(boot, x, kCtx), kCtx), x));
    }
}

TEST_CASE("log of nested monomials") {
    HFunction h0 = make_h(HKind::H0);
    // log(w^(w^1)) = w^(h0(1)) = w^2
    Series wexp = mono_series(Rational(1), rat(Rational(1)));
    CHECK(series_equal(log_mono(Monomial::omega(wexp), h0, kCtx), w_pow(Rational(2))));
    CHECK(log_mono(Monomial::one(), h0, kCtx).is_zero());
    // splitting the exponent splits the log
    Series e1 = mono_series(Rational(3), rat(Rational(2)));
    Series e2 = mono_series(Rational(1, 2), rat(Rational(-1)));
    Series joint = log_mono(Monomial::omega(add(e1, e2)), h0, kCtx);
    Series split_sum = add(log_mono(Monomial::omega(e1), h0, kCtx),
                           log_mono(Monomial::omega(e2), h0, kCtx));
    CHECK(series_equal(joint, split_sum));
    // the derived value: 3 w^3 + (1/2) w^(1/2)
    Series expect = add(scalar_mul(w_pow(Rational(3)), Constant(3)),
                        scalar_mul(w_pow(Rational(1, 2)), Constant(Rational(1, 2))));
    CHECK(series_equal(joint, expect));
}

TEST_CASE("log and exp paper values") {
    HFunction h0 = make_h(HKind::H0), h1 = make_h(HKind::H1);
    CHECK(log(rat(Rational(1)), h0, kCtx).is_zero());
    CHECK(series_equal(exp(Series(), h0, kCtx), rat(Rational(1))));
    // log(w^(w^-1)) = w^(1/2) via h0(-1) = 1/2
    Series x = Series::monomial(Monomial::omega(mono_series(Rational(1), rat(Rational(-1)))));
    CHECK(series_equal(log(x, h0, kCtx), w_pow(Rational(1, 2))));
    // exp(w^2) = w^(w^1) via h0^{-1}(2) = 1, and log undoes it
    Series ew2 = exp(w_pow(Rational(2)), h0, kCtx);
    CHECK(series_equal(ew2, Series::monomial(Monomial::omega(w_pow(Rational(1))))));
    CHECK(series_equal(log(ew2, h0, kCtx), w_pow(Rational(2))));
    // the Boot constant: exp(-w^3) under h1 is w^(-w^4), exactly both ways
    Series minus_w3 = negate(w_pow(Rational(3)));
    Series c = exp(minus_w3, h1, kCtx);
    Series expect = Series::monomial(Monomial::omega(negate(w_pow(Rational(4)))));
    CHECK(series_equal(c, expect));
    CHECK(series_equal(log(expect, h1, kCtx), minus_w3));
    CHECK_THROWS_AS(log(negate(rat(Rational(2))), h0, kCtx), NonPositiveArgument);
    CHECK_THROWS_AS(log(Series(), h0, kCtx), NonPositiveArgument);
}

TEST_CASE("log is a homomorphism") {
    Sampler sampler(13);
    HFunction h0 = make_h(HKind::H0);
    // h0 is exact on nonnegative arguments; keep the inner exponents
    // there so the monomial case stays exact
    auto pos_exponent = [&]() {
        Series e = sampler.exponent_series(2);
        std::vector<Term> ts;
        for (const auto& t : e.terms()) {
            Monomial m = t.mono;
            if (!m.is_one() && sign(m.exponent()) < 0)
                m = Monomial::omega(negate(m.exponent()));
            ts.push_back(Term{std::move(m), t.coeff});
        }
        return Series::make(std::move(ts));
    };
    // exact on pure monomials
    for (int i = 0; i < 40; ++i) {
        Monomial g1 = Monomial::omega(pos_exponent());
        Monomial g2 = Monomial::omega(pos_exponent());
        Series lhs = log(Series::monomial(g1.mul(g2)), h0, kCtx);
        Series rhs = add(log(Series::monomial(g1), h0, kCtx),
                         log(Series::monomial(g2), h0, kCtx));
        CHECK(series_equal(lhs, rhs));
    }
    // bounded defect in general
    for (int i = 0; i < 40; ++i) {
        Series x = sampler.positive_series(3, 2);
        Series y = sampler.positive_series(3, 2);
        Series lhs = log(mul(x, y, kCtx), h0, kCtx);
        Series rhs = add(log(x, h0, kCtx), log(y, h0, kCtx));
        Series residual = sub(lhs, rhs);
        if (residual.is_exact()) {
            CHECK(residual.is_zero());
        } else {
            CHECK(residual_below(Series::make(residual.terms(), {}),
                                 *residual.remainder()));
        }
    }
}

TEST_CASE("log preserves order on conclusive samples") {
    Sampler sampler(17);
    HFunction boot = make_h(HKind::Boot);
    for (int i = 0; i < 30; ++i) {
        Series x = sampler.positive_series(2, 2);
        Series y = sampler.positive_series(2, 2);
        int xy;
        try {
            xy = compare(x, y);
        } catch (const Error&) {
            continue;
        }
        if (xy == 0) continue;
        try {
            CHECK(compare(log(x, boot, kCtx), log(y, boot, kCtx)) == xy);
        } catch (const TruncationObscuresComparison&) {
            // inconclusive at this truncation; acceptable
        }
    }
}

TEST_CASE("exp(log(x)) returns x within the Taylor bound") {
    Sampler sampler(19);
    for (HKind kind : {HKind::H0, HKind::H1, HKind::Boot}) {
        HFunction h = make_h(kind);
        for (int i = 0; i < 30; ++i) {
            Series x = sampler.positive_series(3, 2);
            Series residual = sub(exp(log(x, h, kCtx), h, kCtx), x);
            Decomposition d = decompose(x);
            if (d.eps.is_zero()) {
                CHECK(residual.is_zero());
                continue;
            }
            Monomial bound =
                x.lead().mono.mul(mono_pow(d.eps.lead().mono, kCtx.taylor_order - 1));
            CHECK(residual_strictly_below(Series::make(residual.terms(), {}), bound));
        }
    }
}

TEST_CASE("log of a monomial group element is purely infinite") {
    Sampler sampler(29);
    HFunction boot = make_h(HKind::Boot);
    for (int i = 0; i < 50; ++i) {
        Monomial g = Monomial::omega(sampler.exponent_series(2));
        Series l = log_mono(g, boot, kCtx);
        for (const auto& t : l.terms())
            CHECK(t.mono.compare(Monomial::one()) > 0);
    }
}

TEST_CASE("boot satisfies the growth axiom; h0 does not") {
    HFunction boot = make_h(HKind::Boot);
    std::vector<Series> samples = {rat(Rational(1)), w_pow(Rational(1)),
                                   negate(w_pow(Rational(3))), w_pow(Rational(-1)),
                                   negate(w_pow(Rational(5))), rat(Rational(-2)),
                                   negate(w_pow(Rational(-2)))};
    GrowthReport r = check_growth(boot, samples,
                                  {Constant(Rational(1, 2)), Constant(Rational(1, 3))},
                                  kCtx);
    CHECK(r.violations() == 0);
    for (const auto& e : r.h_checks) CHECK(e.status == 1);

    HFunction h0 = make_h(HKind::H0);
    GrowthReport bad = check_growth(h0, {rat(Rational(-1))}, {}, kCtx);
    REQUIRE(bad.h_checks.size() == 1);
    CHECK(bad.h_checks[0].status == 0);  // h0(-1) = 1/2 is not below w^-1
}

TEST_CASE("log under h1 never exceeds log under h0 above 1") {
    Sampler sampler(31);
    HFunction h0 = make_h(HKind::H0), h1 = make_h(HKind::H1);
    for (int i = 0; i < 30; ++i) {
        Series x = sampler.purely_infinite(2, 2);
        if (sign(x) < 0) x = negate(x);
        int c;
        try {
            c = compare(log(x, h1, kCtx), log(x, h0, kCtx));
        } catch (const Error&) {
            continue;  // inconclusive sample
        }
        CHECK(c <= 0);
    }
}

TEST_CASE("omin witness") {
    HFunction h0 = make_h(HKind::H0), h1 = make_h(HKind::H1);
    HFunction boot = make_h(HKind::Boot);
    auto w0 = omin_witness(h0, rat(Rational(-1)), kCtx);
    REQUIRE(w0.has_value());
    CHECK(w0->n == 1);
    Series expect_y =
        Series::monomial(Monomial::omega(mono_series(Rational(1), rat(Rational(-1)))));
    CHECK(series_equal(w0->y, expect_y));
    auto w1 = omin_witness(h1, rat(Rational(-1)), kCtx);
    REQUIRE(w1.has_value());
    CHECK(w1->n == 1);
    CHECK(series_equal(w1->y, expect_y));
    CHECK(!omin_witness(boot, rat(Rational(1)), kCtx).has_value());
    // soundness: every returned witness satisfies n log(y) >= y
    REQUIRE(w0.has_value());
    CHECK(compare(scalar_mul(log(w0->y, h0, kCtx), Constant(w0->n)), w0->y) >= 0);
}

namespace {

// A chain whose elements are handles of free monomials over `inner`,
// ordered by the group order.
ChainPtr monomial_chain(const ChainPtr& inner) {
    auto d = std::make_shared<ChainDescriptor>();
    d->label = "chain of H(" + inner->label + ")^{>1}";
    d->cof = inner->cof;
    d->coinit = inner->coinit;
    d->compare = [](const ChainElem& a, const ChainElem& b) {
        return a.monomial().compare(b.monomial());
    };
    d->sample = [](std::mt19937_64&) -> ChainElem {
        throw Error("sampler unused in this test");
    };
    d->format = [](const ChainElem& e) { return e.monomial().to_text(); };
    return d;
}

}  // namespace

TEST_CASE("iota logarithm and its inverse") {
    // iota: Z = chain of G into G^{>1} itself, via the predecessor shift
    // iota(g) = t^(g-1); its values live in the same group as the input.
    BaseChain base = make_base("z");
    ChainPtr z = base.chain;
    IotaMap iota = [&](const ChainElem& g) {
        return Series::monomial(base.iota_embed(g));
    };
    IotaInverse iota_inv = [](const Monomial& m) {
        return ChainElem(m.support().front().first.scalar() + 1);
    };

    ChainElem g3(3), g5(5);
    Monomial t3 = Monomial::free(z, {{g3, Constant(1)}});
    CHECK(series_equal(log_iota_mono(t3, iota, kCtx), iota(g3)));
    CHECK(log_iota_mono(Monomial::one(), iota, kCtx).is_zero());
    // log(t^{g3 2} t^{g5 -1}) = 2 iota(g3) - iota(g5)
    Monomial prod = Monomial::free(z, {{g3, Constant(2)}, {g5, Constant(-1)}});
    Series expect = sub(scalar_mul(iota(g3), Constant(2)), iota(g5));
    CHECK(series_equal(log_iota_mono(prod, iota, kCtx), expect));

    // exact round trip on a scaled monomial
    Series m = Series::monomial(prod, Constant(Rational(3, 2)));
    if (sign(m) < 0) m = negate(m);
    Series round = exp_iota(log_iota(m, iota, kCtx), iota_inv, z, kCtx);
    CHECK(series_equal(round, m));

    // two-term input: the leading term survives the round trip exactly
    Series x = add(Series::monomial(t3, Constant(2)),
                   Series::monomial(prod, Constant(Rational(1, 4))));
    Series round2 = exp_iota(log_iota(x, iota, kCtx), iota_inv, z, kCtx);
    REQUIRE(!round2.is_zero());
    CHECK(round2.lead().mono.compare(t3) == 0);
    CHECK(Constant::sub(round2.lead().coeff, Constant(2)).is_zero());
    Series residual = sub(Series::make(round2.terms(), {}), x);
    CHECK(residual_strictly_below(residual, t3));

    // range violation: an embedding below 1
    IotaMap bad = [&](const ChainElem& g) { return negate(iota(g)); };
    CHECK_THROWS_AS(log_iota_mono(t3, bad, kCtx), IotaRangeViolation);
}

TEST_CASE("omega map induced by psi") {
    BaseChain base = make_base("z");
    ChainPtr z = base.chain;
    // psi(g) = t^top * g with a label above every sampled element
    PsiOracle psi = [&](const Monomial& g) {
        return Monomial::free(z, {{ChainElem(1000), Constant(1)}}).mul(g);
    };
    // exponential through the tautological iota: chain elements of the
    // relabeled group are handles of the monomials themselves
    ChainPtr target = monomial_chain(z);
    IotaInverse iota_inv = [](const Monomial& m) {
        return ChainElem(std::make_shared<const Monomial>(m));
    };
    auto exp_op = [&](const Series& y) { return exp_iota(y, iota_inv, target, kCtx); };

    CHECK(series_equal(omega_from_psi(psi, Series(), exp_op, kCtx), rat(Rational(1))));
    Monomial g = Monomial::free(z, {{ChainElem(2), Constant(1)}});
    Series single = omega_from_psi(psi, Series::monomial(g), exp_op, kCtx);
    // result is the monomial t^(psi(g)); its iota-log returns psi(g)
    IotaMap iota = [](const ChainElem& e) { return Series::monomial(e.monomial()); };
    CHECK(series_equal(log_iota(single, iota, kCtx), Series::monomial(psi(g))));
    // homomorphism on samples
    Series x = Series::monomial(g, Constant(2));
    Series y = Series::monomial(Monomial::free(z, {{ChainElem(5), Constant(-1)}}),
                                Constant(Rational(1, 2)));
    Series lhs = omega_from_psi(psi, add(x, y), exp_op, kCtx);
    Series rhs = mul(omega_from_psi(psi, x, exp_op, kCtx),
                     omega_from_psi(psi, y, exp_op, kCtx), kCtx);
    CHECK(series_equal(lhs, rhs));
    // range violation
    PsiOracle bad = [&](const Monomial& m) { return m.inv(); };
    CHECK_THROWS_AS(omega_from_psi(bad, Series::monomial(g), exp_op, kCtx),
                    PsiRangeViolation);
}
