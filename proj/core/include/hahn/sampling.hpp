#pragma once

#include "hahn/series.hpp"

#include <random>

namespace hahn {

/// Deterministic generators for randomized property checks. All output
/// is a function of the seed alone.
class Sampler {
public:
    explicit Sampler(unsigned long long seed) : rng_(seed) {}

    std::mt19937_64& rng() { return rng_; }

    Rational rational(int max_abs_num = 8, int max_den = 4);
    Rational nonzero_rational(int max_abs_num = 8, int max_den = 4);
    /// Mostly rationals, occasionally an exp/log atom of a small rational.
    Constant constant();

    /// Exponent series of the given nesting depth (depth 0 = rational).
    Series exponent_series(int depth);
    /// Nested series: <= max_terms terms, exponents of nesting depth
    /// < depth, rational-or-atom coefficients. Always exact.
    Series nested_series(int max_terms = 6, int depth = 3);
    /// As nested_series but with purely rational coefficients.
    Series rational_series(int max_terms = 6, int depth = 3);
    Series nonzero_series(int max_terms = 6, int depth = 3);
    Series positive_series(int max_terms = 6, int depth = 3);
    /// Every monomial < 1.
    Series infinitesimal(int max_terms = 3, int depth = 2);
    /// Every monomial > 1.
    Series purely_infinite(int max_terms = 2, int depth = 2);

private:
    int uniform(int lo, int hi);
    std::mt19937_64 rng_;
};

}  // namespace hahn
