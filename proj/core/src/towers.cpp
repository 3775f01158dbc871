#include "hahn/towers.hpp"

#include "hahn/errors.hpp"

#include <memory>
#include <utility>

namespace hahn {

namespace {

ChainElem handle(Monomial m) {
    return ChainElem(std::make_shared<const Monomial>(std::move(m)));
}

int sgn(int v) { return (v > 0) - (v < 0); }

Constant random_coeff(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-5, 5);
    std::uniform_int_distribution<int> den(1, 3);
    int n = num(rng);
    if (n == 0) n = 1;
    return Constant(Rational(n, den(rng)));
}

// Random nonidentity free monomial over g; forced above 1 when pos.
Monomial random_monomial(const ChainPtr& g, bool pos, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> nterms(1, 2);
    for (int attempt = 0; attempt < 32; ++attempt) {
        Monomial::FreeSupport support;
        int k = nterms(rng);
        for (int i = 0; i < k; ++i) support.emplace_back(g->sample(rng), random_coeff(rng));
        Monomial m = Monomial::free(g, std::move(support));
        if (m.is_one()) continue;
        if (pos && m.compare(Monomial::one()) < 0) m = m.inv();
        return m;
    }
    throw Error("monomial sampler failed to produce a nonidentity element");
}

ChainPtr chain_of_group(const ChainPtr& gamma, bool pos, CofTag cof, CofTag coinit) {
    auto d = std::make_shared<ChainDescriptor>();
    d->label = "chain of H(" + gamma->label + (pos ? ")^{>1}" : ")");
    d->cof = cof;
    d->coinit = coinit;
    d->compare = [](const ChainElem& a, const ChainElem& b) {
        return a.monomial().compare(b.monomial());
    };
    d->sample = [gamma, pos](std::mt19937_64& rng) {
        return handle(random_monomial(gamma, pos, rng));
    };
    d->format = [](const ChainElem& e) { return e.monomial().to_text(); };
    return d;
}

StageState step_impl(const StageState& s, std::mt19937_64& rng, long n_samples,
                     bool positive_only) {
    // Range law first: the embedding must land above 1 in positive mode.
    if (positive_only) {
        for (long i = 0; i < n_samples; ++i) {
            ChainElem g = s.gamma->sample(rng);
            if (s.eta(g).compare(Monomial::one()) <= 0) throw RangeViolation("iota value not above 1");
        }
    }
    // Order preservation of the current embedding on sampled pairs.
    for (long i = 0; i < n_samples; ++i) {
        ChainElem a = s.gamma->sample(rng);
        ChainElem b = s.gamma->sample(rng);
        int before = sgn(s.gamma->compare(a, b));
        int after = sgn(s.eta(a).compare(s.eta(b)));
        if (before != after)
            throw Error("embedding not order-preserving at " + s.gamma->format(a) +
                        " vs " + s.gamma->format(b));
    }

    CofResult cr = cof_calculus(*s.gamma, positive_only ? "h_group_pos" : "h_group");
    ChainPtr next_chain = chain_of_group(s.gamma, positive_only, cr.cof, cr.coinit);

    auto eta = s.eta;
    auto j_beta = [eta](const ChainElem& g) { return handle(eta(g)); };
    auto next_eta = [j_beta, next_chain](const ChainElem& e) {
        return h_functor(j_beta, next_chain, e.monomial());
    };

    // Diagram commutativity: eta_{beta+1} . j_beta = H(j_beta) . eta_beta.
    for (long i = 0; i < n_samples; ++i) {
        ChainElem g = s.gamma->sample(rng);
        Monomial lhs = next_eta(j_beta(g));
        Monomial rhs = h_functor(j_beta, next_chain, s.eta(g));
        if (lhs.compare(rhs) != 0)
            throw Error("commutative diagram failed at " + s.gamma->format(g));
    }

    StageState next;
    next.stage_index = s.stage_index + 1;
    next.base = s.base;
    next.gamma = next_chain;
    next.eta = next_eta;
    next.j = s.j;
    next.j.push_back(j_beta);
    next.positive_only = positive_only;
    return next;
}

}  // namespace

BaseChain make_base(const std::string& spec) {
    if (spec.rfind("finite:", 0) == 0) {
        long k = std::stol(spec.substr(7));
        if (k < 1) throw Error("finite base needs at least one element");
        auto d = std::make_shared<ChainDescriptor>();
        d->label = spec;
        d->cof = CofTag::Finite;
        d->coinit = CofTag::Finite;
        d->compare = [](const ChainElem& a, const ChainElem& b) {
            return sgn(static_cast<int>(a.scalar() > b.scalar()) -
                       static_cast<int>(a.scalar() < b.scalar()));
        };
        d->sample = [k](std::mt19937_64& rng) {
            std::uniform_int_distribution<long long> u(0, k - 1);
            return ChainElem(u(rng));
        };
        d->format = [](const ChainElem& e) { return std::to_string(e.scalar()); };
        BaseChain b;
        b.chain = d;
        b.eta_embed = [d](const ChainElem& g) {
            return Monomial::free(d, {{g, Constant(1)}});
        };
        b.iota_embed = b.eta_embed;  // no predecessor: growth not certified
        b.growth_certified = false;
        return b;
    }
    if (spec == "z") {
        auto d = std::make_shared<ChainDescriptor>();
        d->label = "Z";
        d->cof = CofTag::Omega;
        d->coinit = CofTag::Omega;
        d->compare = [](const ChainElem& a, const ChainElem& b) {
            return sgn(static_cast<int>(a.scalar() > b.scalar()) -
                       static_cast<int>(a.scalar() < b.scalar()));
        };
        d->sample = [](std::mt19937_64& rng) {
            std::uniform_int_distribution<long long> u(-50, 50);
            return ChainElem(u(rng));
        };
        d->format = [](const ChainElem& e) { return std::to_string(e.scalar()); };
        BaseChain b;
        b.chain = d;
        b.eta_embed = [d](const ChainElem& g) {
            return Monomial::free(d, {{g, Constant(1)}});
        };
        b.iota_embed = [d](const ChainElem& g) {
            return Monomial::free(d, {{ChainElem(g.scalar() - 1), Constant(1)}});
        };
        b.growth_certified = true;
        return b;
    }
    if (spec == "omega1xZ") {
        auto d = std::make_shared<ChainDescriptor>();
        d->label = "omega1 x Z lex";
        d->cof = CofTag::Omega1;
        d->coinit = CofTag::Omega;
        d->compare = [](const ChainElem& a, const ChainElem& b) {
            if (a.pair().first != b.pair().first)
                return a.pair().first < b.pair().first ? -1 : 1;
            if (a.pair().second != b.pair().second)
                return a.pair().second < b.pair().second ? -1 : 1;
            return 0;
        };
        // The first coordinate stands in for a countable ordinal; the
        // sampler never enumerates cofinally, the omega1 tag is symbolic.
        d->sample = [](std::mt19937_64& rng) {
            std::uniform_int_distribution<long long> alpha(0, 100), n(-50, 50);
            return ChainElem(ChainElem::Pair{alpha(rng), n(rng)});
        };
        d->format = [](const ChainElem& e) {
            return "(" + std::to_string(e.pair().first) + "," +
                   std::to_string(e.pair().second) + ")";
        };
        BaseChain b;
        b.chain = d;
        b.eta_embed = [d](const ChainElem& g) {
            return Monomial::free(d, {{g, Constant(1)}});
        };
        // iota_0((alpha, n)) = t^((alpha, n-1)).
        b.iota_embed = [d](const ChainElem& g) {
            ChainElem pred(ChainElem::Pair{g.pair().first, g.pair().second - 1});
            return Monomial::free(d, {{pred, Constant(1)}});
        };
        b.growth_certified = true;
        return b;
    }
    throw UnknownIdentifier(spec);
}

Monomial h_functor(const std::function<ChainElem(const ChainElem&)>& j,
                   const ChainPtr& target_chain, const Monomial& g, long precision_cap) {
    if (g.is_one()) return Monomial::one();
    if (!g.is_free()) throw DomainViolation("h_functor needs a free monomial");
    Monomial::FreeSupport support;
    for (const auto& [gamma, r] : g.support()) support.emplace_back(j(gamma), r);
    return Monomial::free(target_chain, std::move(support), precision_cap);
}

StageState make_stage0(const BaseChain& base, bool positive_only) {
    StageState s;
    s.stage_index = 0;
    s.base = base.chain;
    s.gamma = base.chain;
    s.eta = positive_only ? base.iota_embed : base.eta_embed;
    s.positive_only = positive_only;
    return s;
}

StageState eta_step(const StageState& s, std::mt19937_64& rng, long n_samples) {
    return step_impl(s, rng, n_samples, false);
}

StageState iota_step(const StageState& s, std::mt19937_64& rng, long n_samples) {
    return step_impl(s, rng, n_samples, true);
}

long check_side_condition(const StageState& s, std::mt19937_64& rng, long n_samples) {
    const Rational r_values[] = {Rational(1, 2), Rational(1), Rational(2)};
    long checked = 0;
    for (long i = 0; i < n_samples; ++i) {
        ChainElem g = s.gamma->sample(rng);
        Monomial ig = s.eta(g);
        for (const auto& r : r_values) {
            Monomial tr = Monomial::free(s.gamma, {{g, Constant(r)}});
            if (ig.compare(tr) >= 0)
                throw Error("growth side-condition failed at " + s.gamma->format(g) +
                            " with r = " + to_string(r));
            ++checked;
        }
    }
    return checked;
}

long check_side_condition_step(const StageState& prev, const StageState& next,
                               std::mt19937_64& rng, long n_samples) {
    const Rational r_values[] = {Rational(1, 2), Rational(1), Rational(2)};
    long checked = 0;
    for (long i = 0; i < n_samples; ++i) {
        ChainElem eta = next.gamma->sample(rng);
        const Monomial& x = eta.monomial();
        const ChainElem& g0 = x.support().front().first;
        if (prev.eta(g0).compare(x) >= 0) continue;  // premise fails, nothing to check
        Monomial ig = next.eta(eta);
        for (const auto& r : r_values) {
            Monomial tr = Monomial::free(next.gamma, {{eta, Constant(r)}});
            if (ig.compare(tr) >= 0)
                throw Error("inductive side-condition failed at " +
                            next.gamma->format(eta) + " with r = " + to_string(r));
            ++checked;
        }
    }
    return checked;
}

CofResult cof_calculus(const ChainDescriptor& d, const std::string& construction) {
    if (construction == "lex_product")
        return {d.cof, CofTag::Omega,
                "lex product with Z: cofinality of the left factor, coinitiality omega"};
    if (construction == "h_group_pos")
        return {d.cof, d.coinit,
                "the image of iota is cofinal and coinitial in H(Gamma)^{>1}: tags inherited"};
    if (construction == "reciprocal_union")
        return {d.cof, d.cof,
                "1/x order-reverses H(Gamma)^{<1} onto H(Gamma)^{>1}: coinitiality equals "
                "cofinality of the positive part"};
    if (construction == "h_group")
        return {d.cof, d.cof, "h_group_pos followed by the reciprocal union"};
    throw UnknownRule(construction);
}

NoOmegaReport no_omega_verdict(const BaseChain& base, long n_stages, long n_samples,
                               unsigned long long seed) {
    if (n_stages < 1) throw Error("no_omega_verdict needs at least one stage");
    std::mt19937_64 rng(seed);
    NoOmegaReport report;
    StageState s = make_stage0(base, true);
    report.trace.push_back("stage 0: Gamma_0 = " + s.gamma->label + ", tags (" +
                           to_string(s.gamma->cof) + ", " + to_string(s.gamma->coinit) +
                           ") [declared]");
    auto side_line = [&](const StageState& st) {
        if (base.growth_certified) {
            long checked = check_side_condition(st, rng, n_samples);
            report.trace.push_back("  side-condition iota(g) < t^(g r) verified on " +
                                   std::to_string(checked) + " pairs");
        } else {
            report.trace.push_back(
                "  side-condition not certified for this base (no predecessor shift)");
        }
    };
    side_line(s);
    for (long k = 1; k <= n_stages; ++k) {
        CofResult cr = cof_calculus(*s.gamma, "h_group_pos");
        s = iota_step(s, rng, n_samples);
        report.trace.push_back("stage " + std::to_string(k) + ": Gamma_" +
                               std::to_string(k) + " = " + s.gamma->label + ", tags (" +
                               to_string(cr.cof) + ", " + to_string(cr.coinit) +
                               ") [h_group_pos]; order preservation and commutativity "
                               "verified on " +
                               std::to_string(n_samples) + " samples");
        side_line(s);
    }
    CofResult g = cof_calculus(*s.gamma, "h_group");
    CofResult gpos = cof_calculus(*s.gamma, "h_group_pos");
    report.trace.push_back("G = H(Gamma_" + std::to_string(n_stages) + "): tags (" +
                           to_string(g.cof) + ", " + to_string(g.coinit) +
                           ") [h_group: " + g.rule + "]");
    report.trace.push_back("G^{>1}: tags (" + to_string(gpos.cof) + ", " +
                           to_string(gpos.coinit) + ") [h_group_pos]");
    if (g.coinit != gpos.coinit) {
        report.triggered = true;
        report.verdict = "not an omega-field: coinit(G)=" + to_string(g.coinit) +
                         " != " + to_string(gpos.coinit) + "=coinit(G^{>1})";
    } else {
        report.triggered = false;
        report.verdict = "obstruction not triggered";
    }
    report.trace.push_back("verdict: " + report.verdict);
    return report;
}

}  // namespace hahn
