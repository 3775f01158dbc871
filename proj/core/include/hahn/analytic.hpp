#pragma once

#include "hahn/series.hpp"

#include <functional>
#include <string>
#include <vector>

namespace hahn {

/// Taylor coefficient oracle: n -> a_n. Must be pure and safe to call
/// concurrently.
using CoeffOracle = std::function<Constant(long)>;

/// Multivariate oracle: (multi-index i, center x) -> D^i f(x) / i!.
using TaylorOracle =
    std::function<Constant(const std::vector<long>&, const std::vector<Constant>&)>;

/// P(eps) = sum a_n eps^n truncated at ctx.taylor_order. eps must be
/// infinitesimal. The remainder bound is lead_mono(eps)^(N+1); it is
/// omitted when the evaluation is provably exact (eps = 0, or eps exact
/// and the oracle vanishes on the probed tail).
Series eval_power_series(const CoeffOracle& coeffs, const Series& eps,
                         const TruncationContext& ctx);

/// f(center + eps) by truncated multivariate Taylor expansion, all
/// multi-indices of total degree <= ctx.taylor_order. Centers must be
/// certifiably in [-1, 1].
Series eval_restricted_analytic(const TaylorOracle& taylor_oracle,
                                const std::vector<Constant>& center,
                                const std::vector<Series>& eps,
                                const TruncationContext& ctx);

Series log1p(const Series& eps, const TruncationContext& ctx);
Series expm_small(const Series& eps, const TruncationContext& ctx);

/// Built-in oracles by name: exp, log1p, geom, sin, cos.
CoeffOracle named_oracle(const std::string& name);

}  // namespace hahn
