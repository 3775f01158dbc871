#pragma once

#include "hahn/series.hpp"

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace hahn {

enum class HKind { H0, H1, Boot };

/// A chain isomorphism K -> K^{>0}. H0 and H1 are the two closed-form
/// base maps; Boot glues them through a four-branch dispatch around the
/// constant c = value of the H1 exponential at -w^3.
struct HFunction {
    HKind kind = HKind::H0;
    /// Boot only: cached c; filled on first use, idempotent.
    mutable std::shared_ptr<const Series> boot_c;
};

HFunction make_h(HKind kind);
/// Parses "h0" / "h1" / "boot".
HFunction make_h(const std::string& name);
std::string to_string(HKind kind);

/// The Boot gluing constant c (exact).
const Series& boot_constant(const HFunction& h, const TruncationContext& ctx);

Series h_apply(const HFunction& h, const Series& x, const TruncationContext& ctx);
/// Compositional inverse of h_apply; y must be positive.
Series h_inverse(const HFunction& h, const Series& y, const TruncationContext& ctx);

/// log of a nested monomial w^(sum w^(x_i) r_i) = sum w^(h(x_i)) r_i.
Series log_mono(const Monomial& g, const HFunction& h, const TruncationContext& ctx);

/// log(x) = log_mono(g) + log(r) + log1p(eps) for x = g r (1 + eps), x > 0.
Series log(const Series& x, const HFunction& h, const TruncationContext& ctx);

/// Compositional inverse: exp(p + r + eps) =
/// w^(sum w^(h^{-1}(y_i)) s_i) * e^r * expm_small(eps).
Series exp(const Series& y, const HFunction& h, const TruncationContext& ctx);

/// y^r = e^{r log y} for y > all constants.
Series pow_general(const Series& y, const Constant& r, const HFunction& h,
                   const TruncationContext& ctx);

/// Growth-axiom report. status: +1 holds, 0 violated, -1 inconclusive.
struct GrowthReport {
    struct LogEntry {
        Series y;
        Constant r;
        int status;
        std::string note;
    };
    struct HEntry {
        Series x;
        int status;
        std::string note;
    };
    std::vector<LogEntry> log_checks;
    std::vector<HEntry> h_checks;
    long violations() const;
    long inconclusive() const;
};

/// Tests log(y) < y^r on each (sample, r) pair and h(x) dominated by
/// w^x on each sample directly. Inconclusive entries are flagged.
GrowthReport check_growth(const HFunction& h, const std::vector<Series>& samples,
                          const std::vector<Constant>& r_values,
                          const TruncationContext& ctx);

struct OminWitness {
    Series y;
    long n;
};

/// If h(x) fails to be dominated by w^x, returns the smallest
/// n in 1..max_n with h(x) >= (1/n) w^x and the witness y = w^((1/n)w^x),
/// verified via n log(y) >= y. Returns nothing when domination holds.
std::optional<OminWitness> omin_witness(const HFunction& h, const Series& x,
                                        const TruncationContext& ctx, long max_n = 64);

/// iota: chain element -> group element > 1 of the relabeled group.
using IotaMap = std::function<Series(const ChainElem&)>;
/// Inverse direction, defined on monomials in iota's image.
using IotaInverse = std::function<ChainElem(const Monomial&)>;

/// log of a free monomial t^(g_1 r_1) ... t^(g_k r_k) = sum iota(g_i) r_i.
Series log_iota_mono(const Monomial& g, const IotaMap& iota, const TruncationContext& ctx);
/// Extension to positive free series, exactly as the nested log.
Series log_iota(const Series& x, const IotaMap& iota, const TruncationContext& ctx);

/// Inverse of log_iota: exp(p + r + eps) = t^(sum iota^{-1}(m_i) s_i) e^r expm_small(eps).
Series exp_iota(const Series& y, const IotaInverse& iota_inv, const ChainPtr& chain,
                const TruncationContext& ctx);

/// psi: order isomorphism G -> G^{>1} on free monomials.
using PsiOracle = std::function<Monomial(const Monomial&)>;

/// The omega-map induced by psi: w^x = e^{sum psi(g_i) r_i} where
/// x = sum g_i r_i, evaluated through the supplied exponential.
Series omega_from_psi(const PsiOracle& psi, const Series& x,
                      const std::function<Series(const Series&)>& exp_op,
                      const TruncationContext& ctx);

}  // namespace hahn
