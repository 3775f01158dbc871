#include "hahn/sampling.hpp"

#include "hahn/errors.hpp"

namespace hahn {

int Sampler::uniform(int lo, int hi) {
    std::uniform_int_distribution<int> u(lo, hi);
    return u(rng_);
}

Rational Sampler::rational(int max_abs_num, int max_den) {
    return Rational(uniform(-max_abs_num, max_abs_num), uniform(1, max_den));
}

Rational Sampler::nonzero_rational(int max_abs_num, int max_den) {
    Rational q = rational(max_abs_num, max_den);
    return q == 0 ? Rational(1) : q;
}

Constant Sampler::constant() {
    int pick = uniform(0, 9);
    if (pick < 7) return Constant(nonzero_rational());
    if (pick < 9) return Constant::exp(Constant(Rational(uniform(-2, 2))));
    return Constant::log(Constant(Rational(uniform(2, 7))));
}

Series Sampler::exponent_series(int depth) {
    if (depth <= 0) return Series::rational(nonzero_rational(4, 2));
    std::vector<Term> terms;
    int k = uniform(1, 2);
    for (int i = 0; i < k; ++i) {
        Monomial m = uniform(0, 2) == 0 ? Monomial::one()
                                        : Monomial::omega(exponent_series(depth - 1));
        terms.push_back(Term{std::move(m), Constant(nonzero_rational(4, 2))});
    }
    return Series::make(std::move(terms));
}

Series Sampler::nested_series(int max_terms, int depth) {
    std::vector<Term> terms;
    int k = uniform(1, max_terms);
    for (int i = 0; i < k; ++i) {
        Monomial m = uniform(0, 3) == 0 ? Monomial::one()
                                        : Monomial::omega(exponent_series(depth - 1));
        terms.push_back(Term{std::move(m), constant()});
    }
    return Series::make(std::move(terms));
}

Series Sampler::rational_series(int max_terms, int depth) {
    std::vector<Term> terms;
    int k = uniform(1, max_terms);
    for (int i = 0; i < k; ++i) {
        Monomial m = uniform(0, 3) == 0 ? Monomial::one()
                                        : Monomial::omega(exponent_series(depth - 1));
        terms.push_back(Term{std::move(m), Constant(nonzero_rational())});
    }
    return Series::make(std::move(terms));
}

Series Sampler::nonzero_series(int max_terms, int depth) {
    for (int attempt = 0; attempt < 64; ++attempt) {
        Series s = nested_series(max_terms, depth);
        if (!s.is_zero()) return s;
    }
    throw Error("sampler failed to produce a nonzero series");
}

Series Sampler::positive_series(int max_terms, int depth) {
    Series s = nonzero_series(max_terms, depth);
    return sign(s) > 0 ? s : negate(s);
}

Series Sampler::infinitesimal(int max_terms, int depth) {
    std::vector<Term> terms;
    int k = uniform(1, max_terms);
    for (int i = 0; i < k; ++i) {
        Series e = exponent_series(depth - 1);
        if (sign(e) > 0) e = negate(e);
        if (e.is_zero()) e = Series::rational(Rational(-1));
        terms.push_back(Term{Monomial::omega(std::move(e)), Constant(nonzero_rational())});
    }
    return Series::make(std::move(terms));
}

Series Sampler::purely_infinite(int max_terms, int depth) {
    std::vector<Term> terms;
    int k = uniform(1, max_terms);
    for (int i = 0; i < k; ++i) {
        Series e = exponent_series(depth - 1);
        if (sign(e) < 0) e = negate(e);
        if (e.is_zero()) e = Series::rational(Rational(1));
        terms.push_back(Term{Monomial::omega(std::move(e)), Constant(nonzero_rational())});
    }
    return Series::make(std::move(terms));
}

}  // namespace hahn
