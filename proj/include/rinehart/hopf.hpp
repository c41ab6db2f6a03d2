#pragma once

#include "rinehart/convolution.hpp"

#include <map>
#include <memory>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace rinehart {

/// Memoized access to delta on PBW monomials. The flipped variant replaces
/// delta(X_i) by 1 (x) X_i + X_i (x) 1 and exists only as a negative
/// control for the axiom suite.
class DeltaMap {
public:
    explicit DeltaMap(PresentationPtr pres, bool flipped = false)
        : pres_(std::move(pres)), flipped_(flipped),
          cache_(std::make_shared<std::map<MultiIndex, TensorTerms, GrlexLess>>()) {}

    const PresentationPtr& pres() const { return pres_; }
    bool flipped() const { return flipped_; }

    const TensorTerms& monomial(const MultiIndex& alpha) const {
        if (!flipped_) return detail::translate_monomial(*pres_, alpha);
        auto it = cache_->find(alpha);
        if (it != cache_->end()) return it->second;
        TensorTerms value = compute_flipped(alpha);
        return cache_->emplace(alpha, std::move(value)).first->second;
    }

    TensorElement apply(const EnvElement& u) const {
        TensorElement out(pres_, TensorFlavor::Translate);
        for (auto& [alpha, a] : u.terms())
            for (auto& [key, c] : monomial(alpha)) out.add_term(key.first, key.second, c * a);
        return out;
    }

private:
    TensorTerms compute_flipped(const MultiIndex& alpha) const {
        const Presentation& p = *pres_;
        TensorTerms out;
        std::size_t i = mi_first(alpha);
        if (i == alpha.size()) {
            out.emplace(std::make_pair(alpha, alpha), p.poly_one());
            return out;
        }
        MultiIndex rest = mi_sub(alpha, mi_unit(alpha.size(), i));
        const TensorTerms& w = monomial(rest);
        auto add = [&](const MultiIndex& a, const MultiIndex& b, const Poly& c) {
            if (c.is_zero()) return;
            auto key = std::make_pair(a, b);
            auto [it, inserted] = out.emplace(key, c);
            if (!inserted) {
                it->second += c;
                if (it->second.is_zero()) out.erase(it);
            }
        };
        for (auto& [key, c] : w) {
            for (auto& [g, d] : detail::gen_lmul(p, static_cast<int>(i),
                                                 EnvTerms{{key.second, c}}))
                add(key.first, g, d);
            for (auto& [g, d] : detail::monomial_mul(p, key.first, mi_unit(alpha.size(), i)))
                for (auto& [h, e] : detail::coeff_times_monomial(p, d, key.second))
                    add(g, h, e * c);  // sign-flipped part
        }
        return out;
    }

    PresentationPtr pres_;
    bool flipped_;
    std::shared_ptr<std::map<MultiIndex, TensorTerms, GrlexLess>> cache_;
};

/// epsilon_*(f) = f(1).
inline Poly counit_star(const TruncatedFunctional& f) {
    return f.value(mi_zero(f.pres()->rank()));
}

/// f harpooned by X^alpha, restricted to F^m U: beta -> f(X^alpha X^beta).
inline TruncatedFunctional hook_left(const TruncatedFunctional& f, const MultiIndex& alpha,
                                     int m) {
    if (f.precision() < m + mi_degree(alpha))
        throw PrecisionError(m + mi_degree(alpha), f.precision());
    const auto& p = f.pres();
    TruncatedFunctional out(p, m);
    for (auto& beta : monomials_up_to(p->rank(), m)) {
        EnvElement prod(p, detail::monomial_mul(*p, alpha, beta));
        out.set(beta, eval_functional(f, prod));
    }
    return out;
}

/// Delta_*(f) projected to level (m, n), in dual-basis form:
/// table[beta][alpha] = f(X^alpha X^beta).
inline TensorFunctional delta_star(const TruncatedFunctional& f, int m, int n) {
    if (f.precision() < m + n) throw PrecisionError(m + n, f.precision());
    const auto& p = f.pres();
    TensorFunctional out(p, m, n);
    for (auto& alpha : monomials_up_to(p->rank(), n))
        for (auto& beta : monomials_up_to(p->rank(), m)) {
            EnvElement prod(p, detail::monomial_mul(*p, alpha, beta));
            out.add(beta, alpha, eval_functional(f, prod));
        }
    return out;
}

/// The defining rule of Delta_*: f(uv) = sum_alpha (f <- X^alpha)
/// (iota_A(lambda_alpha(u)) v), exactly at level (m, n).
inline bool fuv_check(const TruncatedFunctional& f, const EnvElement& u, const EnvElement& v,
                      int m, int n) {
    if (u.degree() > n) throw PrecisionError(u.degree(), n);
    if (v.degree() > m) throw PrecisionError(v.degree(), m);
    if (f.precision() < m + n) throw PrecisionError(m + n, f.precision());
    const auto& p = f.pres();
    Poly lhs = eval_functional(f, u * v);
    Poly rhs = p->poly_zero();
    for (auto& alpha : monomials_up_to(p->rank(), n)) {
        Poly la = u.coeff(alpha);
        if (la.is_zero()) continue;
        EnvElement inner = lmul_coeff(la, v);
        EnvElement shifted = EnvElement::monomial(p, alpha) * inner;
        rhs += eval_functional(f, shifted);
    }
    return lhs == rhs;
}

/// S_*(f)(u) = eps(iota_A(f(u_-)) u_+); precision is preserved because
/// delta is filtered.
inline TruncatedFunctional antipode_star(const TruncatedFunctional& f, const DeltaMap& dm) {
    const auto& p = f.pres();
    TruncatedFunctional out(p, f.precision());
    for (auto& alpha : monomials_up_to(p->rank(), f.precision())) {
        Poly acc = p->poly_zero();
        for (auto& [key, c] : dm.monomial(alpha)) {
            Poly fb = f.value(key.first);
            if (fb.is_zero()) continue;
            EnvTerms crossed = detail::coeff_times_monomial(*p, fb, key.second);
            auto it = crossed.find(mi_zero(p->rank()));
            if (it == crossed.end()) continue;
            acc += it->second * c;
        }
        out.set(alpha, acc);
    }
    return out;
}

inline TruncatedFunctional antipode_star(const TruncatedFunctional& f) {
    return antipode_star(f, DeltaMap(f.pres()));
}

/// Verifies both identities of the multiplicativity lemma on u:
///   (S_*(f) * h)(u) = h(iota_A(f(u_-)) u_+)
///   S_*(f * h)(u)   = S_*(f)(iota_A(h(u_-)) u_+)
inline bool antipode_pointwise_check(const TruncatedFunctional& f, const TruncatedFunctional& h,
                                     const EnvElement& u, const DeltaMap& dm) {
    const auto& p = f.pres();
    int prec = std::min(f.precision(), h.precision());
    if (u.degree() > prec) throw PrecisionError(u.degree(), prec);

    TensorTerms du;
    {
        TensorElement d = dm.apply(u);
        du = d.terms();
    }
    auto harpoon_eval = [&](const TruncatedFunctional& outer,
                            const TruncatedFunctional& inner) {
        Poly acc = p->poly_zero();
        for (auto& [key, c] : du) {
            Poly iv = inner.value(key.first);
            if (iv.is_zero()) continue;
            EnvElement w(p, detail::coeff_times_monomial(*p, iv, key.second));
            acc += eval_functional(outer, w) * c;
        }
        return acc;
    };

    Poly lhs1 = eval_functional(convolve(antipode_star(f, dm), h), u);
    Poly rhs1 = harpoon_eval(h, f);
    if (lhs1 != rhs1) return false;

    Poly lhs2 = eval_functional(antipode_star(convolve(f, h), dm), u);
    Poly rhs2 = harpoon_eval(antipode_star(f, dm), h);
    return lhs2 == rhs2;
}

inline bool antipode_pointwise_check(const TruncatedFunctional& f, const TruncatedFunctional& h,
                                     const EnvElement& u) {
    return antipode_pointwise_check(f, h, u, DeltaMap(f.pres()));
}

// --- the executable axiom suite ---

struct SuiteLine {
    bool pass;
    std::string id;
    std::string fixture;
    int level;
    std::string witness;

    std::string str() const {
        std::string s = pass ? "PASS " : "FAIL ";
        s += id + " " + fixture + " " + std::to_string(level);
        if (!witness.empty()) s += " " + witness;
        return s;
    }
};

struct SuiteReport {
    std::vector<SuiteLine> lines;
    bool all_pass() const {
        for (auto& l : lines)
            if (!l.pass) return false;
        return true;
    }
    std::string str() const {
        std::string s;
        for (auto& l : lines) s += l.str() + "\n";
        return s;
    }
};

struct SuiteOptions {
    bool mutate_delta = false;  // negative control: sign-flipped delta generators
    unsigned long seed = 0;
};

namespace detail {

inline Poly random_poly(const PresentationPtr& p, std::mt19937_64& rng, int maxdeg = 2) {
    std::uniform_int_distribution<int> num(-2, 2);
    std::uniform_int_distribution<int> den(1, 2);
    Poly out = p->poly_zero();
    for (auto& e : monomials_up_to(p->vars(), maxdeg))
        out.add_term(e, Rational(num(rng), den(rng)));
    return out;
}

inline std::vector<FunctionalOracle> suite_samples(const PresentationPtr& p,
                                                   unsigned long seed) {
    std::vector<FunctionalOracle> fs;
    Poly x1 = Poly::variable(p->vars(), 1);
    fs.push_back(FunctionalOracle::counit(p));
    fs.push_back(vartheta(p, p->poly_one(), x1));
    fs.push_back(vartheta(p, x1, p->poly_one()));
    fs.push_back(vartheta(p, x1 + Poly::one(p->vars()), x1 * x1));
    EnvTerms jet;
    jet.emplace(mi_unit(p->rank(), 0), Poly::constant(p->vars(), Rational(-1)));
    fs.push_back(FunctionalOracle::from_table(p, std::move(jet)));
    std::mt19937_64 rng(seed);
    for (int s = 0; s < 2; ++s) {
        EnvTerms table;
        for (auto& alpha : monomials_up_to(p->rank(), 2)) {
            Poly v = random_poly(p, rng);
            if (!v.is_zero()) table.emplace(alpha, v);
        }
        fs.push_back(FunctionalOracle::from_table(p, std::move(table)));
    }
    return fs;
}

} // namespace detail

/// Runs the complete-Hopf-algebroid checks on U* at the given level and
/// reports one line per check. All comparisons are exact.
inline SuiteReport hopf_axiom_suite(const PresentationPtr& pres, int level,
                                    const SuiteOptions& opts = {}) {
    SuiteReport report;
    const std::string fixture = pres->name().empty() ? "presentation" : pres->name();
    DeltaMap dm(pres, opts.mutate_delta);
    auto samples = detail::suite_samples(pres, opts.seed);
    auto monos = monomials_up_to(pres->rank(), level);

    auto emit = [&](const std::string& id, bool pass, const std::string& witness) {
        report.lines.push_back(SuiteLine{pass, id, fixture, level, pass ? "" : witness});
    };

    // Delta_* counital, through the defining rule with v = 1 and u = 1.
    {
        bool ok = true;
        std::string witness;
        for (std::size_t i = 0; i < samples.size() && ok; ++i) {
            TruncatedFunctional f = truncate(samples[i], level);
            for (auto& alpha : monos) {
                EnvElement u = EnvElement::monomial(pres, alpha);
                if (!fuv_check(f, u, EnvElement::one(pres), 0, level) ||
                    !fuv_check(f, EnvElement::one(pres), u, level, 0)) {
                    ok = false;
                    witness = "f=sample" + std::to_string(i) + " u=" + render_env(u);
                    break;
                }
            }
        }
        emit("delta-star-counital", ok, witness);
    }

    // Delta_* coassociative: both iterated expansions agree as tables of f
    // on triple products.
    {
        bool ok = true;
        std::string witness;
        for (std::size_t i = 0; i < samples.size() && ok; ++i) {
            TruncatedFunctional f = truncate(samples[i], level);
            for (auto& a : monos) {
                for (auto& b : monos) {
                    for (auto& c : monos) {
                        if (mi_degree(a) + mi_degree(b) + mi_degree(c) > level) continue;
                        EnvElement xa = EnvElement::monomial(pres, a);
                        EnvElement xb = EnvElement::monomial(pres, b);
                        EnvElement xc = EnvElement::monomial(pres, c);
                        Poly left = eval_functional(f, (xa * xb) * xc);
                        Poly right = eval_functional(f, xa * (xb * xc));
                        if (left != right) {
                            ok = false;
                            witness = "f=sample" + std::to_string(i) + " triple=" +
                                      mi_str(a) + mi_str(b) + mi_str(c);
                            break;
                        }
                    }
                    if (!ok) break;
                }
                if (!ok) break;
            }
        }
        emit("delta-star-coassociative", ok, witness);
    }

    // Delta_* multiplicative: Pi_{m,n'}(Delta_*(f*g)) equals the level-wise
    // product of the expansions of Delta_*(f) and Delta_*(g).
    {
        bool ok = true;
        std::string witness;
        for (std::size_t i = 0; i + 1 < samples.size() && ok; ++i) {
            TruncatedFunctional f = truncate(samples[i], level);
            TruncatedFunctional g = truncate(samples[i + 1], level);
            for (int m = 0; m <= level && ok; ++m) {
                int n2 = level - m;
                TensorFunctional route_a = delta_star(convolve(f, g), m, n2);
                TensorFunctional route_b(pres, m, n2);
                for (auto& gamma : monomials_up_to(pres->rank(), n2)) {
                    for (int d = 0; d <= mi_degree(gamma); ++d)
                        for (auto& alpha : monomials_of_degree(gamma.size(), d)) {
                            if (!mi_leq(alpha, gamma)) continue;
                            TruncatedFunctional fa = hook_left(f, alpha, m);
                            TruncatedFunctional gb =
                                hook_left(g, mi_sub(gamma, alpha), m);
                            TruncatedFunctional prod = convolve(fa, gb);
                            Rational w = mi_binomial(gamma, alpha);
                            for (auto& [beta, v] : prod.table())
                                route_b.add(beta, gamma, v * w);
                        }
                }
                if (route_a != route_b) {
                    ok = false;
                    witness = "f=sample" + std::to_string(i) + " g=sample" +
                              std::to_string(i + 1) + " split=(" + std::to_string(m) + "," +
                              std::to_string(n2) + ")";
                }
            }
        }
        emit("delta-star-multiplicative", ok, witness);
    }

    // Antipode identities of the lemma, pointwise on monomials.
    {
        bool ok = true;
        std::string witness;
        for (std::size_t i = 0; i < samples.size() && ok; ++i)
            for (std::size_t j = 0; j < samples.size() && ok; ++j) {
                TruncatedFunctional f = truncate(samples[i], level);
                TruncatedFunctional h = truncate(samples[j], level);
                for (auto& alpha : monos) {
                    EnvElement u = EnvElement::monomial(pres, alpha);
                    if (!antipode_pointwise_check(f, h, u, dm)) {
                        ok = false;
                        witness = "f=sample" + std::to_string(i) + " h=sample" +
                                  std::to_string(j) + " u=" + render_env(u);
                        break;
                    }
                }
            }
        emit("antipode-pointwise", ok, witness);
    }

    // Level-n projection of the limit identity sum f_(1) * S_*(f_(2)) =
    // s_*(eps_*(f)), summed over the level-n dual basis.
    {
        bool ok = true;
        std::string witness;
        for (std::size_t i = 0; i < samples.size() && ok; ++i) {
            TruncatedFunctional f2 = truncate(samples[i], 2 * level);
            TruncatedFunctional sum = TruncatedFunctional::zero(pres, level);
            for (auto& alpha : monos) {
                TruncatedFunctional fa = hook_left(f2, alpha, level);
                EnvTerms e;
                e.emplace(alpha, pres->poly_one());
                TruncatedFunctional ea =
                    truncate(FunctionalOracle::from_table(pres, std::move(e)), level);
                sum += convolve(fa, antipode_star(ea, dm));
            }
            TruncatedFunctional expect(pres, level);
            expect.set(mi_zero(pres->rank()), f2.value(mi_zero(pres->rank())));
            if (sum != expect) {
                ok = false;
                witness = "f=sample" + std::to_string(i);
            }
        }
        emit("antipode-limit", ok, witness);
    }

    // S_* is an involution.
    {
        bool ok = true;
        std::string witness;
        for (std::size_t i = 0; i < samples.size() && ok; ++i) {
            TruncatedFunctional f = truncate(samples[i], level);
            if (antipode_star(antipode_star(f, dm), dm) != f) {
                ok = false;
                witness = "f=sample" + std::to_string(i);
            }
        }
        emit("antipode-involution", ok, witness);
    }

    // S_* multiplicative.
    {
        bool ok = true;
        std::string witness;
        for (std::size_t i = 0; i + 1 < samples.size() && ok; ++i) {
            TruncatedFunctional f = truncate(samples[i], level);
            TruncatedFunctional g = truncate(samples[i + 1], level);
            if (antipode_star(convolve(f, g), dm) !=
                convolve(antipode_star(f, dm), antipode_star(g, dm))) {
                ok = false;
                witness = "f=sample" + std::to_string(i) + " g=sample" + std::to_string(i + 1);
            }
        }
        emit("antipode-multiplicative", ok, witness);
    }

    // S_* exchanges the source with the target: S_*(theta(a' (x) a)) =
    // theta(a (x) a').
    {
        bool ok = true;
        std::string witness;
        Poly x1 = Poly::variable(pres->vars(), 1);
        std::vector<std::pair<Poly, Poly>> legs = {
            {pres->poly_one(), x1},
            {x1, pres->poly_one()},
            {x1 + Poly::constant(pres->vars(), Rational(2)), x1 * x1}};
        for (std::size_t i = 0; i < legs.size() && ok; ++i) {
            auto& [ap, a] = legs[i];
            TruncatedFunctional lhs =
                antipode_star(truncate(vartheta(pres, ap, a), level), dm);
            TruncatedFunctional rhs = truncate(vartheta(pres, a, ap), level);
            if (lhs != rhs) {
                ok = false;
                witness = "a'=" + render_poly(ap) + " a=" + render_poly(a);
            }
        }
        emit("antipode-swaps-source-target", ok, witness);
    }

    // u_- u_+ = iota_A(eps(u)), probed through every sample functional.
    {
        bool ok = true;
        std::string witness;
        for (std::size_t i = 0; i < samples.size() && ok; ++i) {
            TruncatedFunctional f = truncate(samples[i], level);
            for (auto& alpha : monos) {
                EnvElement collapsed = EnvElement::zero(pres);
                for (auto& [key, c] : dm.monomial(alpha)) {
                    EnvElement prod(pres, detail::monomial_mul(*pres, key.first, key.second));
                    collapsed += prod * c;
                }
                Poly lhs = eval_functional(f, collapsed);
                Poly rhs = mi_degree(alpha) == 0 ? f.value(mi_zero(pres->rank()))
                                                 : pres->poly_zero();
                if (lhs != rhs) {
                    ok = false;
                    witness = "f=sample" + std::to_string(i) + " u=X^" + mi_str(alpha);
                    break;
                }
            }
        }
        emit("translate-counit-collapse", ok, witness);
    }

    return report;
}

} // namespace rinehart
