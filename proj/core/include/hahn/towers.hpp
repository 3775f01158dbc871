#pragma once

#include "hahn/monomial.hpp"

#include <functional>
#include <random>
#include <string>
#include <vector>

namespace hahn {

/// A base chain for the tower constructions, with its stage-0 embedding
/// into the group over it.
struct BaseChain {
    ChainPtr chain;
    /// eta_0(g) = t^g.
    std::function<Monomial(const ChainElem&)> eta_embed;
    /// iota_0; shifted through the predecessor where the chain has one,
    /// which is what certifies the growth side-condition.
    std::function<Monomial(const ChainElem&)> iota_embed;
    bool growth_certified = false;
};

/// Parses "finite:k", "z" or "omega1xZ".
BaseChain make_base(const std::string& spec);

/// H(j): relabels the support of a free monomial through j. The result
/// lives over target_chain.
Monomial h_functor(const std::function<ChainElem(const ChainElem&)>& j,
                   const ChainPtr& target_chain, const Monomial& g,
                   long precision_cap = Constant::kDefaultPrecisionCap);

/// One stage of the tower: Gamma_beta, the embedding eta_beta (iota_beta
/// in positive mode) into H(Gamma_beta), and the accumulated stage maps
/// j_0 .. j_{beta-1}.
struct StageState {
    long stage_index = 0;
    ChainPtr base;
    ChainPtr gamma;
    std::function<Monomial(const ChainElem&)> eta;
    std::vector<std::function<ChainElem(const ChainElem&)>> j;
    bool positive_only = false;
};

StageState make_stage0(const BaseChain& base, bool positive_only);

/// Gamma_{beta+1} := chain of H(Gamma_beta); f_beta is the identity
/// relabeling, j_beta = f_beta . eta_beta, eta_{beta+1} = H(j_beta) . f_beta^{-1}.
/// Verifies order preservation and diagram commutativity on n_samples
/// random elements; throws with the counterexample on failure.
StageState eta_step(const StageState& s, std::mt19937_64& rng, long n_samples);

/// Same step over H(Gamma_beta)^{>1}; additionally enforces that the
/// embedding lands strictly above 1 (RangeViolation otherwise).
StageState iota_step(const StageState& s, std::mt19937_64& rng, long n_samples);

/// Checks iota(g) < t^(g r) for sampled g and positive r at the current
/// stage. Returns the number of pairs checked; throws on a violation.
/// Only bases built from a predecessor shift satisfy this absolutely.
long check_side_condition(const StageState& s, std::mt19937_64& rng, long n_samples);

/// Inductive form of the side-condition, valid over any base: for a
/// sampled handle eta of x with leading element g0, iota_beta(g0) < x
/// implies iota_{beta+1}(eta) < t^(eta r) for every positive r. Returns
/// the number of conclusions checked; throws on a violation.
long check_side_condition_step(const StageState& prev, const StageState& next,
                               std::mt19937_64& rng, long n_samples);

struct CofResult {
    CofTag cof;
    CofTag coinit;
    std::string rule;
};

/// Symbolic tag derivation, one rule per construction:
/// lex_product, h_group_pos, reciprocal_union, h_group.
CofResult cof_calculus(const ChainDescriptor& d, const std::string& construction);

struct NoOmegaReport {
    std::vector<std::string> trace;
    bool triggered = false;
    std::string verdict;
};

/// Runs n_stages iota steps over the base with sampled invariant
/// checks, then derives the tags of G = H(Gamma_n) and G^{>1} and
/// compares their coinitialities.
NoOmegaReport no_omega_verdict(const BaseChain& base, long n_stages, long n_samples,
                               unsigned long long seed);

}  // namespace hahn
