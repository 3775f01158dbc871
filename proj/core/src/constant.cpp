#include "hahn/constant.hpp"

#include "hahn/errors.hpp"

#include <algorithm>
#include <mutex>
#include <optional>
#include <utility>
#include <vector>

namespace hahn {

namespace {
struct Atom;
using AtomPtr = std::shared_ptr<const Atom>;

struct Factor {
    AtomPtr atom;
    long exponent;  // nonzero; always 1 for Exp atoms
};

// Product of atoms; empty list is the rational unit. Sorted, at most
// one Exp factor.
struct Mono {
    std::vector<Factor> factors;
};

struct CTerm {
    Mono mono;
    Rational coeff;  // nonzero
};
}  // namespace

struct CData {
    std::vector<CTerm> terms;  // sorted by mono order
    mutable std::mutex cache_mu;
    mutable long cache_bits = -1;
    mutable Interval cache_iv{0, 0};
};

namespace {

enum class AtomKind { Exp, Log, Recip };

struct Atom {
    AtomKind kind;
    Constant arg;
    // Exp: value exp(arg), arg nonzero with no extractable log part.
    // Log: value log(arg), arg certified positive and not 1.
    // Recip: value 1/arg, arg a certified-nonzero multi-term sum.
};

int atom_cmp(const Atom& a, const Atom& b) {
    if (a.kind != b.kind) return static_cast<int>(a.kind) < static_cast<int>(b.kind) ? -1 : 1;
    return Constant::structural_compare(a.arg, b.arg);
}

int mono_cmp(const Mono& a, const Mono& b) {
    size_t n = std::min(a.factors.size(), b.factors.size());
    for (size_t i = 0; i < n; ++i) {
        int c = atom_cmp(*a.factors[i].atom, *b.factors[i].atom);
        if (c) return c;
        if (a.factors[i].exponent != b.factors[i].exponent)
            return a.factors[i].exponent < b.factors[i].exponent ? -1 : 1;
    }
    if (a.factors.size() != b.factors.size())
        return a.factors.size() < b.factors.size() ? -1 : 1;
    return 0;
}

}  // namespace

// Access to Constant internals for the free helpers below.
struct ConstantOps {
    static const std::vector<CTerm>& terms(const Constant& c) { return c.data_->terms; }
    static Constant make(std::vector<CTerm> terms) {
        auto d = std::make_shared<CData>();
        d->terms = std::move(terms);
        return Constant(std::move(d));
    }
};

namespace {

const std::vector<CTerm>& terms_of(const Constant& c) { return ConstantOps::terms(c); }

Constant from_terms(std::vector<CTerm> t) { return ConstantOps::make(std::move(t)); }

std::vector<CTerm> merge_terms(std::vector<CTerm> t) {
    std::sort(t.begin(), t.end(),
              [](const CTerm& a, const CTerm& b) { return mono_cmp(a.mono, b.mono) < 0; });
    std::vector<CTerm> out;
    for (auto& term : t) {
        if (term.coeff == 0) continue;
        if (!out.empty() && mono_cmp(out.back().mono, term.mono) == 0) {
            out.back().coeff += term.coeff;
            if (out.back().coeff == 0) out.pop_back();
        } else {
            out.push_back(std::move(term));
        }
    }
    return out;
}

// --- Reduction modulo u * Recip(u) = 1 ---------------------------------
//
// Sums invert to an opaque Recip atom, so a product that happens to
// contain a rational multiple of u against Recip(u)^k would otherwise
// never cancel. The pass below finds buckets of terms sharing a Recip
// factor, checks whether the cofactor polynomial is an exact multiple of
// the Recip argument, and lowers the power when it is. Everything here
// uses plain (rewrite-free) monomial arithmetic and bails out rather
// than loop on anything irregular.

long plain_degree(const Mono& m) {
    long d = 0;
    for (const auto& f : m.factors) d += f.exponent < 0 ? -f.exponent : f.exponent;
    return d;
}

// a * b without any rewrite rules; nullopt when an exponent merge
// cancels signs (the degree argument for termination would break).
std::optional<Mono> plain_mul(const Mono& a, const Mono& b) {
    Mono out;
    size_t i = 0, j = 0;
    auto push = [&](const Factor& f) -> bool {
        if (f.exponent == 0) return true;
        if (f.atom->kind == AtomKind::Exp && f.exponent != 1) return false;
        out.factors.push_back(f);
        return true;
    };
    while (i < a.factors.size() && j < b.factors.size()) {
        int c = atom_cmp(*a.factors[i].atom, *b.factors[j].atom);
        if (c < 0) { if (!push(a.factors[i++])) return std::nullopt; }
        else if (c > 0) { if (!push(b.factors[j++])) return std::nullopt; }
        else {
            long ea = a.factors[i].exponent, eb = b.factors[j].exponent;
            if ((ea > 0) != (eb > 0)) return std::nullopt;
            if (!push({a.factors[i].atom, ea + eb})) return std::nullopt;
            ++i, ++j;
        }
    }
    while (i < a.factors.size()) if (!push(a.factors[i++])) return std::nullopt;
    while (j < b.factors.size()) if (!push(b.factors[j++])) return std::nullopt;
    return out;
}

// t / v when v's factors divide t's with matching signs.
std::optional<Mono> plain_div(const Mono& t, const Mono& v) {
    Mono out;
    size_t i = 0, j = 0;
    while (i < t.factors.size()) {
        if (j < v.factors.size()) {
            int c = atom_cmp(*t.factors[i].atom, *v.factors[j].atom);
            if (c == 0) {
                long et = t.factors[i].exponent, ev = v.factors[j].exponent;
                if ((et > 0) != (ev > 0)) return std::nullopt;
                long e = et - ev;
                if ((e > 0) != (et > 0) && e != 0) return std::nullopt;
                if (e != 0) {
                    if (t.factors[i].atom->kind == AtomKind::Exp && e != 1)
                        return std::nullopt;
                    out.factors.push_back({t.factors[i].atom, e});
                }
                ++i, ++j;
                continue;
            }
            if (c > 0) return std::nullopt;  // v has an atom t lacks
        }
        out.factors.push_back(t.factors[i++]);
    }
    if (j < v.factors.size()) return std::nullopt;
    return out;
}

size_t lead_index(const std::vector<CTerm>& p) {
    size_t best = 0;
    for (size_t i = 1; i < p.size(); ++i) {
        long da = plain_degree(p[i].mono), db = plain_degree(p[best].mono);
        if (da > db || (da == db && mono_cmp(p[i].mono, p[best].mono) > 0)) best = i;
    }
    return best;
}

// Exact division p / u in the free commutative algebra on atoms;
// nullopt when p is not a multiple of u (or the attempt is irregular).
std::optional<std::vector<CTerm>> plain_exact_div(std::vector<CTerm> p,
                                                  const std::vector<CTerm>& u) {
    std::vector<CTerm> q;
    size_t vi = lead_index(u);
    for (int iter = 0; iter < 256; ++iter) {
        if (p.empty()) return q;
        size_t ti = lead_index(p);
        auto qm = plain_div(p[ti].mono, u[vi].mono);
        if (!qm) return std::nullopt;
        CTerm qt{std::move(*qm), p[ti].coeff / u[vi].coeff};
        std::vector<CTerm> next = std::move(p);
        for (const auto& ut : u) {
            auto prod = plain_mul(ut.mono, qt.mono);
            if (!prod) return std::nullopt;
            next.push_back(CTerm{std::move(*prod), -ut.coeff * qt.coeff});
        }
        p = merge_terms(std::move(next));
        q.push_back(std::move(qt));
    }
    return std::nullopt;
}

std::vector<CTerm> reduce_recips(std::vector<CTerm> t) {
    for (int pass = 0; pass < 32; ++pass) {
        // Collect distinct (Recip atom, power) buckets.
        std::vector<std::pair<AtomPtr, long>> buckets;
        for (const auto& term : t)
            for (const auto& f : term.mono.factors)
                if (f.atom->kind == AtomKind::Recip && f.exponent >= 1) {
                    bool seen = false;
                    for (auto& [a, k] : buckets)
                        if (k == f.exponent && atom_cmp(*a, *f.atom) == 0) seen = true;
                    if (!seen) buckets.emplace_back(f.atom, f.exponent);
                }
        bool changed = false;
        for (auto& [atom, k] : buckets) {
            std::vector<CTerm> cofactors, rest;
            for (const auto& term : t) {
                bool in_bucket = false;
                for (const auto& f : term.mono.factors)
                    if (f.exponent == k && f.atom->kind == AtomKind::Recip &&
                        atom_cmp(*f.atom, *atom) == 0)
                        in_bucket = true;
                if (!in_bucket) { rest.push_back(term); continue; }
                Mono stripped;
                for (const auto& f : term.mono.factors)
                    if (!(f.atom->kind == AtomKind::Recip && atom_cmp(*f.atom, *atom) == 0))
                        stripped.factors.push_back(f);
                cofactors.push_back(CTerm{std::move(stripped), term.coeff});
            }
            auto q = plain_exact_div(merge_terms(cofactors), terms_of(atom->arg));
            if (!q) { continue; }
            // Bucket = u * Q * Recip(u)^k = Q * Recip(u)^{k-1}.
            for (auto& qt : *q) {
                if (k > 1) {
                    Mono m;
                    bool placed = false;
                    for (const auto& f : qt.mono.factors) {
                        if (!placed && atom_cmp(*f.atom, *atom) > 0) {
                            m.factors.push_back({atom, k - 1});
                            placed = true;
                        }
                        m.factors.push_back(f);
                    }
                    if (!placed) m.factors.push_back({atom, k - 1});
                    qt.mono = std::move(m);
                }
                rest.push_back(std::move(qt));
            }
            t = merge_terms(std::move(rest));
            changed = true;
            break;  // bucket list is stale; rescan
        }
        if (!changed) break;
    }
    return t;
}

// Merge-sort terms, drop zeros, cancel reciprocals.
Constant normalize_terms(std::vector<CTerm> t) {
    t = merge_terms(std::move(t));
    bool has_recip = false;
    for (const auto& term : t)
        for (const auto& f : term.mono.factors)
            if (f.atom->kind == AtomKind::Recip) has_recip = true;
    if (has_recip) t = reduce_recips(std::move(t));
    return from_terms(std::move(t));
}

thread_local int g_mul_depth = 0;
struct MulDepthGuard {
    MulDepthGuard() {
        if (++g_mul_depth > 64) throw Error("constant normalization recursion overflow");
    }
    ~MulDepthGuard() { --g_mul_depth; }
};

// Product of two atom monomials plus rational coefficient, re-running
// the exp-merge and reciprocal-expansion rules. May return a multi-term
// constant when a reciprocal cancels.
Constant term_mul(const CTerm& ta, const CTerm& tb) {
    MulDepthGuard guard;
    Rational coeff = ta.coeff * tb.coeff;
    if (coeff == 0) return Constant();

    std::vector<Factor> merged;
    std::vector<std::pair<Constant, long>> expansions;  // sums to multiply in
    std::vector<Factor> exp_factors;

    auto push = [&](const Factor& f) {
        if (f.exponent == 0) return;
        if (f.atom->kind == AtomKind::Exp) {
            exp_factors.push_back(f);
            return;
        }
        if (f.atom->kind == AtomKind::Recip && f.exponent < 0) {
            expansions.emplace_back(f.atom->arg, -f.exponent);
            return;
        }
        merged.push_back(f);
    };

    size_t i = 0, j = 0;
    const auto& fa = ta.mono.factors;
    const auto& fb = tb.mono.factors;
    while (i < fa.size() && j < fb.size()) {
        int c = atom_cmp(*fa[i].atom, *fb[j].atom);
        if (c < 0) push(fa[i++]);
        else if (c > 0) push(fb[j++]);
        else {
            push({fa[i].atom, fa[i].exponent + fb[j].exponent});
            ++i, ++j;
        }
    }
    while (i < fa.size()) push(fa[i++]);
    while (j < fb.size()) push(fb[j++]);

    // A single exp atom with unit exponent is already normalized and can
    // stay in place (it sorts first); anything else goes back through
    // Constant::exp, which strictly reduces the number of exp factors.
    Constant rescale(Rational(1));
    if (exp_factors.size() == 1 && exp_factors[0].exponent == 1) {
        merged.insert(merged.begin(), exp_factors[0]);
    } else if (!exp_factors.empty()) {
        Constant exp_arg;
        for (const auto& f : exp_factors) {
            Constant scaled = f.exponent == 1
                                  ? f.atom->arg
                                  : Constant::mul(f.atom->arg, Constant(Rational(f.exponent)));
            exp_arg = Constant::add(exp_arg, scaled);
        }
        if (!exp_arg.is_zero()) rescale = Constant::exp(exp_arg);
    }
    Constant result = from_terms({CTerm{Mono{std::move(merged)}, coeff}});
    if (!rescale.is_one()) result = Constant::mul(result, rescale);
    for (auto& [sum, k] : expansions)
        result = Constant::mul(result, Constant::pow(sum, k));
    return result;
}

std::optional<Interval> eval_raw(const Constant& c, long bits);

std::optional<Interval> eval_atom(const Atom& a, long bits) {
    auto arg = eval_raw(a.arg, bits);
    if (!arg) return std::nullopt;
    switch (a.kind) {
        case AtomKind::Exp:
            return exp_interval(*arg, bits);
        case AtomKind::Log:
            if (arg->lo <= 0) return std::nullopt;
            return log_interval(*arg, bits);
        case AtomKind::Recip:
            if (arg->contains_zero()) return std::nullopt;
            return iv_inv(*arg, bits);
    }
    return std::nullopt;
}

std::optional<Interval> eval_raw(const Constant& c, long bits) {
    Interval sum{0, 0};
    for (const auto& term : terms_of(c)) {
        Interval prod{term.coeff, term.coeff};
        for (const auto& f : term.mono.factors) {
            auto av = eval_atom(*f.atom, bits);
            if (!av) return std::nullopt;
            if (f.exponent < 0 && av->contains_zero()) return std::nullopt;
            prod = iv_mul(prod, iv_pow(*av, f.exponent, bits), bits);
        }
        sum = iv_add(sum, prod, bits);
    }
    return sum;
}

Constant atom_value(AtomKind kind, Constant arg) {
    auto a = std::make_shared<Atom>(Atom{kind, std::move(arg)});
    return from_terms({CTerm{Mono{{Factor{std::move(a), 1}}}, Rational(1)}});
}

// log of a positive rational, split over prime factors.
Constant log_rational(const Rational& q) {
    std::vector<CTerm> out;
    auto emit = [&](const Int& base, long e) {
        auto a = std::make_shared<Atom>(Atom{AtomKind::Log, Constant(Rational(base))});
        out.push_back(CTerm{Mono{{Factor{std::move(a), 1}}}, Rational(e)});
    };
    for (auto& [p, e] : factorize(numerator(q))) emit(p, e);
    for (auto& [p, e] : factorize(denominator(q))) emit(p, -e);
    return normalize_terms(std::move(out));
}

}  // namespace

Constant::Constant() : data_(std::make_shared<CData>()) {}
Constant::Constant(long n) : Constant(Rational(n)) {}
Constant::Constant(const Rational& q) {
    auto d = std::make_shared<CData>();
    if (q != 0) d->terms.push_back(CTerm{Mono{}, q});
    data_ = std::move(d);
}
Constant::Constant(std::shared_ptr<const CData> data) : data_(std::move(data)) {}

bool Constant::is_zero() const { return data_->terms.empty(); }

bool Constant::is_rational() const {
    return data_->terms.empty() ||
           (data_->terms.size() == 1 && data_->terms[0].mono.factors.empty());
}

bool Constant::is_one() const { return is_rational() && as_rational() == 1; }

const Rational& Constant::as_rational() const {
    static const Rational zero(0);
    if (data_->terms.empty()) return zero;
    if (data_->terms.size() == 1 && data_->terms[0].mono.factors.empty())
        return data_->terms[0].coeff;
    throw Error("constant is not a rational literal");
}

int Constant::structural_compare(const Constant& a, const Constant& b) {
    const auto& ta = a.data_->terms;
    const auto& tb = b.data_->terms;
    size_t n = std::min(ta.size(), tb.size());
    for (size_t i = 0; i < n; ++i) {
        int c = mono_cmp(ta[i].mono, tb[i].mono);
        if (c) return c;
        if (int d = cmp(ta[i].coeff, tb[i].coeff)) return d;
    }
    if (ta.size() != tb.size()) return ta.size() < tb.size() ? -1 : 1;
    return 0;
}

Constant Constant::add(const Constant& a, const Constant& b) {
    if (a.is_rational() && b.is_rational())
        return Constant(a.as_rational() + b.as_rational());
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    std::vector<CTerm> t = a.data_->terms;
    t.insert(t.end(), b.data_->terms.begin(), b.data_->terms.end());
    return normalize_terms(std::move(t));
}

Constant Constant::sub(const Constant& a, const Constant& b) {
    if (a.is_rational() && b.is_rational())
        return Constant(a.as_rational() - b.as_rational());
    return add(a, neg(b));
}

Constant Constant::neg(const Constant& a) {
    if (a.is_rational()) return Constant(-a.as_rational());
    std::vector<CTerm> t = a.data_->terms;
    for (auto& term : t) term.coeff = -term.coeff;
    return from_terms(std::move(t));
}

Constant Constant::mul(const Constant& a, const Constant& b) {
    if (a.is_rational() && b.is_rational())
        return Constant(a.as_rational() * b.as_rational());
    Constant acc;
    for (const auto& ta : a.data_->terms)
        for (const auto& tb : b.data_->terms) acc = add(acc, term_mul(ta, tb));
    return acc;
}

Constant Constant::pow(const Constant& a, long k, long precision_cap) {
    if (k < 0) return pow(inv(a, precision_cap), -k, precision_cap);
    Constant acc(Rational(1));
    Constant base = a;
    unsigned long n = static_cast<unsigned long>(k);
    while (n) {
        if (n & 1) acc = mul(acc, base);
        base = mul(base, base);
        n >>= 1;
    }
    return acc;
}

Constant Constant::inv(const Constant& a, long precision_cap) {
    const auto& t = a.data_->terms;
    if (t.empty()) throw DivisionByZero();
    if (a.is_rational()) return Constant(Rational(1) / a.as_rational());
    if (t.size() == 1) {
        // Invert a single atom product factor by factor.
        Constant acc(Rational(1) / t[0].coeff);
        for (const auto& f : t[0].mono.factors) {
            Constant part;
            switch (f.atom->kind) {
                case AtomKind::Exp:
                    part = exp(neg(f.atom->arg));
                    break;
                case AtomKind::Log:
                    part = from_terms({CTerm{Mono{{Factor{f.atom, -f.exponent}}}, Rational(1)}});
                    break;
                case AtomKind::Recip:
                    part = pow(f.atom->arg, f.exponent, precision_cap);
                    break;
            }
            acc = mul(acc, part);
        }
        return acc;
    }
    // Multi-term sum: certify nonzero, wrap in a reciprocal atom with a
    // unit leading coefficient.
    if (a.sign(precision_cap) == 0) throw DivisionByZero();
    Rational scale = t[0].coeff;
    Constant scaled = mul(a, Constant(Rational(1) / scale));
    return mul(Constant(Rational(1) / scale), atom_value(AtomKind::Recip, scaled));
}

Constant Constant::exp(const Constant& a) {
    if (a.is_zero()) return Constant(Rational(1));
    // Pull out integer multiples of log atoms: exp(n log x + rest) = x^n exp(rest).
    Constant extracted(Rational(1));
    std::vector<CTerm> rest;
    for (const auto& term : a.data_->terms) {
        bool pulled = false;
        if (term.mono.factors.size() == 1 && term.mono.factors[0].exponent == 1 &&
            term.mono.factors[0].atom->kind == AtomKind::Log && is_integer(term.coeff)) {
            Int n = numerator(term.coeff);
            if (n >= -16 && n <= 16) {
                extracted = mul(extracted, pow(term.mono.factors[0].atom->arg,
                                               static_cast<long>(n)));
                pulled = true;
            }
        }
        if (!pulled) rest.push_back(term);
    }
    if (rest.empty()) return extracted;
    return mul(extracted, atom_value(AtomKind::Exp, from_terms(std::move(rest))));
}

Constant Constant::log(const Constant& a, long precision_cap) {
    if (a.is_rational()) {
        Rational q = a.as_rational();
        if (q <= 0) throw NonPositiveArgument();
        return log_rational(q);
    }
    if (a.sign(precision_cap) <= 0) throw NonPositiveArgument();
    const auto& t = a.data_->terms;
    if (t.size() == 1 && t[0].coeff > 0) {
        // log(q * prod a_i^e_i) = log q + sum e_i log(a_i), when every
        // non-exp factor is itself certified positive.
        bool splittable = true;
        for (const auto& f : t[0].mono.factors) {
            if (f.atom->kind == AtomKind::Exp) continue;
            Constant v = f.atom->kind == AtomKind::Recip
                             ? f.atom->arg
                             : from_terms({CTerm{Mono{{Factor{f.atom, 1}}}, Rational(1)}});
            try {
                if (v.sign(precision_cap) <= 0) { splittable = false; break; }
            } catch (const UndecidedAtPrecision&) {
                splittable = false;
                break;
            }
        }
        if (splittable) {
            Constant acc = log_rational(t[0].coeff);
            for (const auto& f : t[0].mono.factors) {
                Constant part;
                switch (f.atom->kind) {
                    case AtomKind::Exp:
                        part = f.atom->arg;  // log(exp(x)) = x
                        break;
                    case AtomKind::Log:
                        part = atom_value(AtomKind::Log,
                                          from_terms({CTerm{Mono{{Factor{f.atom, 1}}},
                                                            Rational(1)}}));
                        break;
                    case AtomKind::Recip:
                        part = neg(log(f.atom->arg, precision_cap));
                        break;
                }
                acc = add(acc, mul(part, Constant(Rational(f.exponent))));
            }
            return acc;
        }
    }
    // Sum (or unsplittable product): factor out a positive leading
    // rational so equal values share a wrapper.
    if (t[0].coeff > 0 && t[0].coeff != 1) {
        Rational scale = t[0].coeff;
        Constant scaled = mul(a, Constant(Rational(1) / scale));
        return add(log_rational(scale), atom_value(AtomKind::Log, scaled));
    }
    return atom_value(AtomKind::Log, a);
}

int Constant::sign(long precision_cap) const {
    if (data_->terms.empty()) return 0;
    if (is_rational()) return hahn::sign(as_rational());
    long w = std::min(8L, precision_cap);
    for (;;) {
        auto iv = eval_raw(*this, w);
        if (iv && !iv->contains_zero()) return iv->positive() ? 1 : -1;
        if (w >= precision_cap) break;
        w = std::min(w * 2, precision_cap);
    }
    throw UndecidedAtPrecision(precision_cap);
}

int Constant::compare(const Constant& a, const Constant& b, long precision_cap) {
    if (a.is_rational() && b.is_rational())
        return cmp(a.as_rational(), b.as_rational());
    return sub(a, b).sign(precision_cap);
}

Interval Constant::enclosure(long precision) const {
    {
        std::lock_guard<std::mutex> lk(data_->cache_mu);
        if (data_->cache_bits >= precision) return data_->cache_iv;
    }
    Rational target = pow2(-(precision + 1));
    for (long w = precision + 8;; w *= 2) {
        if (w > (precision + 8) * 1048576L)
            throw Error("interval refinement failed to converge");
        auto iv = eval_raw(*this, w);
        if (iv && iv->width() <= target) {
            Interval out = round_out(*iv, precision + 2);
            std::lock_guard<std::mutex> lk(data_->cache_mu);
            if (precision > data_->cache_bits) {
                data_->cache_bits = precision;
                data_->cache_iv = out;
            }
            return out;
        }
    }
}

namespace {

std::string atom_text(const Factor& f) {
    const Atom& a = *f.atom;
    switch (a.kind) {
        case AtomKind::Exp:
            return "exp(" + a.arg.to_text() + ")";
        case AtomKind::Log: {
            std::string s = "log(" + a.arg.to_text() + ")";
            if (f.exponent != 1) s += "^" + std::to_string(f.exponent);
            return s;
        }
        case AtomKind::Recip:
            return "(" + a.arg.to_text() + ")^-" + std::to_string(f.exponent);
    }
    return {};
}

std::string term_text(const CTerm& t) {
    Rational mag = t.coeff < 0 ? Rational(-t.coeff) : t.coeff;
    std::string s;
    if (t.mono.factors.empty()) return to_string(mag);
    if (mag != 1) s = to_string(mag);
    for (const auto& f : t.mono.factors) {
        if (!s.empty()) s += "*";
        s += atom_text(f);
    }
    return s;
}

}  // namespace

std::pair<int, Constant> Constant::sign_split() const {
    if (data_->terms.empty()) return {0, *this};
    if (data_->terms[0].coeff < 0) return {-1, neg(*this)};
    return {1, *this};
}

bool Constant::is_sum() const { return data_->terms.size() > 1; }

std::string Constant::to_text() const {
    if (data_->terms.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& t : data_->terms) {
        if (first) {
            if (t.coeff < 0) out += "-";
            first = false;
        } else {
            out += t.coeff < 0 ? " - " : " + ";
        }
        out += term_text(t);
    }
    return out;
}

}  // namespace hahn
