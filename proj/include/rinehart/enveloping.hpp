#pragma once

#include "rinehart/lie_rinehart.hpp"

#include <string>
#include <utility>
#include <vector>

namespace rinehart {

namespace detail {

inline void env_add(EnvTerms& t, const MultiIndex& a, const Poly& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = t.emplace(a, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) t.erase(it);
    }
}

inline void env_add_all(EnvTerms& t, const EnvTerms& o) {
    for (auto& [a, c] : o) env_add(t, a, c);
}

inline void env_add_scaled(EnvTerms& t, const EnvTerms& o, const Poly& s) {
    for (auto& [a, c] : o) env_add(t, a, c * s);
}

EnvTerms gen_times_monomial(const Presentation& p, int i, const MultiIndex& beta);

/// X_i . w for an arbitrary normal-form table w.
inline EnvTerms gen_lmul(const Presentation& p, int i, const EnvTerms& w) {
    EnvTerms out;
    for (auto& [g, c] : w) env_add_scaled(out, gen_times_monomial(p, i, g), c);
    return out;
}

/// iota_A(a) . X^beta, rewritten through the relation
/// iota_A(a) X_j = X_j iota_A(a) - iota_A(w_j(a)).
inline EnvTerms coeff_times_monomial(const Presentation& p, const Poly& a,
                                     const MultiIndex& beta) {
    EnvTerms out;
    if (a.is_zero()) return out;
    std::size_t j = mi_first(beta);
    if (j == beta.size()) {
        out.emplace(beta, a);
        return out;
    }
    MultiIndex rest = mi_sub(beta, mi_unit(beta.size(), j));
    // X_j . (iota_A(a) X^rest): the recursive table only involves monomials
    // supported inside rest, all of whose generators are >= j, so the left
    // factor is a plain exponent increment.
    for (auto& [g, c] : coeff_times_monomial(p, a, rest))
        env_add(out, mi_add(g, mi_unit(beta.size(), j)), c);
    EnvTerms deriv = coeff_times_monomial(p, p.anchor(static_cast<int>(j)).apply(a), rest);
    for (auto& [g, c] : deriv) env_add(out, g, -c);
    return out;
}

/// Normal form of X_i . X^beta. Out-of-order generators are bubbled through
/// X_i X_j = X_j X_i + [X_i, X_j]; terminates because each step lowers
/// (degree, inversions) lexicographically.
inline EnvTerms gen_times_monomial_compute(const Presentation& p, int i,
                                           const MultiIndex& beta) {
    const std::size_t r = beta.size();
    std::size_t j = mi_first(beta);
    if (j == r || static_cast<std::size_t>(i) <= j) {
        EnvTerms out;
        out.emplace(mi_add(beta, mi_unit(r, i)), p.poly_one());
        return out;
    }
    MultiIndex rest = mi_sub(beta, mi_unit(r, j));
    EnvTerms out = gen_lmul(p, static_cast<int>(j), gen_times_monomial(p, i, rest));
    for (int m = 0; m < p.rank(); ++m) {
        const Poly& c = p.bracket(i, static_cast<int>(j))[m];
        if (c.is_zero()) continue;
        env_add_all(out, gen_lmul(p, m, coeff_times_monomial(p, c, rest)));
    }
    return out;
}

inline EnvTerms gen_times_monomial(const Presentation& p, int i, const MultiIndex& beta) {
    auto key = std::make_pair(i, beta);
    {
        std::lock_guard<std::mutex> lk(p.caches().mutex);
        auto it = p.caches().gen_times_monomial.find(key);
        if (it != p.caches().gen_times_monomial.end()) return it->second;
    }
    EnvTerms value = gen_times_monomial_compute(p, i, beta);
    std::lock_guard<std::mutex> lk(p.caches().mutex);
    return p.caches().gen_times_monomial.emplace(key, std::move(value)).first->second;
}

/// X^alpha . w, applying the generator sequence of alpha right to left.
inline EnvTerms monomial_lmul(const Presentation& p, const MultiIndex& alpha, EnvTerms w) {
    for (std::size_t j = alpha.size(); j-- > 0;)
        for (std::uint32_t rep = 0; rep < alpha[j]; ++rep)
            w = gen_lmul(p, static_cast<int>(j), w);
    return w;
}

inline EnvTerms env_mul_terms(const Presentation& p, const EnvTerms& u, const EnvTerms& v) {
    EnvTerms out;
    for (auto& [alpha, a] : u) {
        EnvTerms w;
        for (auto& [beta, b] : v) env_add_scaled(w, coeff_times_monomial(p, a, beta), b);
        env_add_all(out, monomial_lmul(p, alpha, std::move(w)));
    }
    return out;
}

inline EnvTerms monomial_mul(const Presentation& p, const MultiIndex& a, const MultiIndex& b) {
    EnvTerms v;
    v.emplace(b, p.poly_one());
    return monomial_lmul(p, a, std::move(v));
}

} // namespace detail

/// Element of U = V_A(L) in PBW right-coefficient normal form
/// sum_alpha X^alpha . iota_A(a_alpha).
class EnvElement {
public:
    EnvElement() = default;
    EnvElement(PresentationPtr pres, EnvTerms terms)
        : pres_(std::move(pres)), terms_(std::move(terms)) {}

    static EnvElement zero(const PresentationPtr& p) { return EnvElement(p, {}); }
    static EnvElement one(const PresentationPtr& p) { return coefficient(p, p->poly_one()); }
    static EnvElement coefficient(const PresentationPtr& p, const Poly& a) {
        EnvTerms t;
        detail::env_add(t, mi_zero(p->rank()), a);
        return EnvElement(p, std::move(t));
    }
    static EnvElement generator(const PresentationPtr& p, int i) {  // 0-based
        EnvTerms t;
        t.emplace(mi_unit(p->rank(), i), p->poly_one());
        return EnvElement(p, std::move(t));
    }
    static EnvElement monomial(const PresentationPtr& p, const MultiIndex& alpha,
                               const Poly& a) {
        EnvTerms t;
        detail::env_add(t, alpha, a);
        return EnvElement(p, std::move(t));
    }
    static EnvElement monomial(const PresentationPtr& p, const MultiIndex& alpha) {
        return monomial(p, alpha, p->poly_one());
    }
    static EnvElement from_lelement(const LElement& xi) {
        EnvTerms t;
        for (int m = 0; m < xi.pres->rank(); ++m)
            detail::env_add(t, mi_unit(xi.pres->rank(), m), xi.coeffs[m]);
        return EnvElement(xi.pres, std::move(t));
    }

    const PresentationPtr& pres() const { return pres_; }
    const EnvTerms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    /// Filtration degree max |alpha|; -1 for zero.
    int degree() const { return terms_.empty() ? -1 : mi_degree(terms_.rbegin()->first); }

    /// The distinguished dual-basis read lambda_alpha(u) = a_alpha.
    Poly coeff(const MultiIndex& alpha) const {
        auto it = terms_.find(alpha);
        return it == terms_.end() ? pres_->poly_zero() : it->second;
    }

    EnvElement& operator+=(const EnvElement& o) {
        check_same(pres_, o.pres_);
        detail::env_add_all(terms_, o.terms_);
        return *this;
    }
    EnvElement& operator-=(const EnvElement& o) {
        check_same(pres_, o.pres_);
        for (auto& [a, c] : o.terms_) detail::env_add(terms_, a, -c);
        return *this;
    }
    friend EnvElement operator+(EnvElement a, const EnvElement& b) { return a += b; }
    friend EnvElement operator-(EnvElement a, const EnvElement& b) { return a -= b; }
    EnvElement operator-() const {
        EnvElement r(pres_, {});
        for (auto& [a, c] : terms_) r.terms_.emplace(a, -c);
        return r;
    }

    /// Right A-action u . iota_A(a): multiplies every coefficient.
    friend EnvElement operator*(const EnvElement& u, const Poly& a) {
        EnvElement r(u.pres_, {});
        for (auto& [g, c] : u.terms_) detail::env_add(r.terms_, g, c * a);
        return r;
    }
    friend EnvElement operator*(const EnvElement& u, const Rational& q) {
        return u * Poly::constant(u.pres_->vars(), q);
    }

    friend EnvElement operator*(const EnvElement& u, const EnvElement& v) {
        check_same(u.pres_, v.pres_);
        return EnvElement(u.pres_, detail::env_mul_terms(*u.pres_, u.terms_, v.terms_));
    }

    friend bool operator==(const EnvElement& a, const EnvElement& b) {
        return a.pres_.get() == b.pres_.get() && a.terms_ == b.terms_;
    }
    friend bool operator!=(const EnvElement& a, const EnvElement& b) { return !(a == b); }

private:
    PresentationPtr pres_;
    EnvTerms terms_;
};

inline EnvElement env_mul(const EnvElement& u, const EnvElement& v) { return u * v; }

/// iota_A(a) . u in PBW form.
inline EnvElement lmul_coeff(const Poly& a, const EnvElement& u) {
    EnvTerms out;
    for (auto& [beta, b] : u.terms())
        detail::env_add_scaled(out, detail::coeff_times_monomial(*u.pres(), a, beta), b);
    return EnvElement(u.pres(), std::move(out));
}

/// epsilon(u): the coefficient of the empty monomial.
inline Poly counit_env(const EnvElement& u) { return u.coeff(mi_zero(u.pres()->rank())); }

/// theta_n: drops all terms above filtration degree n.
inline EnvElement truncate_theta(const EnvElement& u, int n) {
    EnvTerms out;
    for (auto& [a, c] : u.terms())
        if (mi_degree(a) <= n) out.emplace(a, c);
    return EnvElement(u.pres(), std::move(out));
}

/// PBW monomials |alpha| <= n in ascending graded-lex order; the dual
/// functionals lambda_alpha are the coefficient reads EnvElement::coeff.
inline std::vector<MultiIndex> dual_basis(const PresentationPtr& p, int n) {
    return monomials_up_to(p->rank(), n);
}

enum class TensorFlavor { Coprod, Translate };

/// Two-leg tensor over A in canonical form: sum X^alpha (x) X^beta . a.
/// The flavor records which balancing moved stray left-leg coefficients:
/// Coprod crosses by the right A-action on leg two, Translate by left
/// multiplication (PBW rewriting) on leg two.
class TensorElement {
public:
    TensorElement(PresentationPtr pres, TensorFlavor flavor, TensorTerms terms = {})
        : pres_(std::move(pres)), flavor_(flavor), terms_(std::move(terms)) {}

    const PresentationPtr& pres() const { return pres_; }
    TensorFlavor flavor() const { return flavor_; }
    const TensorTerms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    int level() const {
        int n = -1;
        for (auto& [k, c] : terms_) {
            int l = mi_degree(k.first) + mi_degree(k.second);
            if (l > n) n = l;
        }
        return n;
    }

    Poly coeff(const MultiIndex& a, const MultiIndex& b) const {
        auto it = terms_.find({a, b});
        return it == terms_.end() ? pres_->poly_zero() : it->second;
    }

    void add_term(const MultiIndex& a, const MultiIndex& b, const Poly& c) {
        if (c.is_zero()) return;
        auto key = std::make_pair(a, b);
        auto [it, inserted] = terms_.emplace(key, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    /// Raw product term u (x) v with both legs in PBW form; stray left-leg
    /// coefficients cross per the flavor's balancing.
    void add_product(const EnvTerms& left, const EnvTerms& right) {
        for (auto& [mu, d] : left) {
            if (flavor_ == TensorFlavor::Translate) {
                for (auto& [nu, e] : right) {
                    EnvTerms crossed = detail::coeff_times_monomial(*pres_, d, nu);
                    for (auto& [g, c] : crossed) add_term(mu, g, c * e);
                }
            } else {
                for (auto& [nu, e] : right) add_term(mu, nu, e * d);
            }
        }
    }

    TensorElement& operator+=(const TensorElement& o) {
        require_compatible(o);
        for (auto& [k, c] : o.terms_) add_term(k.first, k.second, c);
        return *this;
    }
    TensorElement& operator-=(const TensorElement& o) {
        require_compatible(o);
        for (auto& [k, c] : o.terms_) add_term(k.first, k.second, -c);
        return *this;
    }
    friend TensorElement operator+(TensorElement a, const TensorElement& b) { return a += b; }
    friend TensorElement operator-(TensorElement a, const TensorElement& b) { return a -= b; }

    /// Right A-action on the second leg.
    friend TensorElement operator*(const TensorElement& t, const Poly& a) {
        TensorElement r(t.pres_, t.flavor_);
        for (auto& [k, c] : t.terms_) r.add_term(k.first, k.second, c * a);
        return r;
    }
    friend TensorElement operator*(const TensorElement& t, const Rational& q) {
        return t * Poly::constant(t.pres_->vars(), q);
    }

    friend bool operator==(const TensorElement& a, const TensorElement& b) {
        return a.pres_.get() == b.pres_.get() && a.flavor_ == b.flavor_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const TensorElement& a, const TensorElement& b) { return !(a == b); }

private:
    void require_compatible(const TensorElement& o) const {
        check_same(pres_, o.pres_);
        if (flavor_ != o.flavor_) throw Error("tensor flavor mismatch");
    }

    PresentationPtr pres_;
    TensorFlavor flavor_;
    TensorTerms terms_;
};

/// Delta(u): multiplicative extension of Delta(X_i) = X_i (x) 1 + 1 (x) X_i.
/// On a PBW monomial this collapses to the binomial expansion, since each
/// leg receives an ordered subword.
inline TensorElement coprod_env(const EnvElement& u) {
    TensorElement out(u.pres(), TensorFlavor::Coprod);
    for (auto& [alpha, a] : u.terms()) {
        for (int d = 0; d <= mi_degree(alpha); ++d) {
            for (auto& gamma : monomials_of_degree(alpha.size(), d)) {
                if (!mi_leq(gamma, alpha)) continue;
                out.add_term(gamma, mi_sub(alpha, gamma), a * mi_binomial(alpha, gamma));
            }
        }
    }
    return out;
}

namespace detail {

/// delta(X^alpha), folding delta(uv) = v_- u_- (x) u_+ v_+ over the ordered
/// generator sequence; memoized per presentation.
inline const TensorTerms& translate_monomial(const Presentation& p, const MultiIndex& alpha);

inline TensorTerms translate_monomial_compute(const Presentation& p, const MultiIndex& alpha) {
    MultiIndex rest = mi_sub(alpha, mi_unit(alpha.size(), mi_first(alpha)));
    std::size_t i = mi_first(alpha);
    const TensorTerms& w = translate_monomial(p, rest);
    // u = X_i with u_- (x) u_+ = 1 (x) X_i - X_i (x) 1, v = X^rest
    TensorTerms acc;
    auto add = [&](const MultiIndex& a, const MultiIndex& b, const Poly& c) {
        if (c.is_zero()) return;
        auto key = std::make_pair(a, b);
        auto [it, inserted] = acc.emplace(key, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) acc.erase(it);
        }
    };
    for (auto& [key, c] : w) {
        const MultiIndex& beta = key.first;
        const MultiIndex& gamma = key.second;
        // v_- . 1 (x) X_i . (X^gamma c)
        for (auto& [g, d] : gen_lmul(p, static_cast<int>(i), EnvTerms{{gamma, c}}))
            add(beta, g, d);
        // - v_- X_i (x) X^gamma c, the left-leg coefficient crossing by
        // left multiplication
        for (auto& [g, d] : monomial_mul(p, beta, mi_unit(alpha.size(), i)))
            for (auto& [h, e] : coeff_times_monomial(p, d, gamma)) add(g, h, -(e * c));
    }
    return acc;
}

inline const TensorTerms& translate_monomial(const Presentation& p, const MultiIndex& alpha) {
    {
        std::lock_guard<std::mutex> lk(p.caches().mutex);
        auto it = p.caches().translate_monomial.find(alpha);
        if (it != p.caches().translate_monomial.end()) return it->second;
    }
    TensorTerms value;
    std::size_t i = mi_first(alpha);
    if (i == alpha.size()) {
        value.emplace(std::make_pair(mi_zero(alpha.size()), mi_zero(alpha.size())),
                      p.poly_one());
    } else {
        value = translate_monomial_compute(p, alpha);
    }
    std::lock_guard<std::mutex> lk(p.caches().mutex);
    return p.caches().translate_monomial.emplace(alpha, std::move(value)).first->second;
}

} // namespace detail

/// The translation map delta(u) = u_- (x) u_+ = beta^{-1}(1 (x) u).
inline TensorElement translate(const EnvElement& u) {
    TensorElement out(u.pres(), TensorFlavor::Translate);
    for (auto& [alpha, a] : u.terms()) {
        for (auto& [key, c] : detail::translate_monomial(*u.pres(), alpha))
            out.add_term(key.first, key.second, c * a);
    }
    return out;
}

/// beta(u (x) v) = u v_1 (x) v_2.
inline TensorElement beta_map(const TensorElement& t) {
    if (t.flavor() != TensorFlavor::Translate) throw Error("beta expects the translate flavor");
    const auto& p = *t.pres();
    TensorElement out(t.pres(), TensorFlavor::Coprod);
    for (auto& [key, c] : t.terms()) {
        const MultiIndex& alpha = key.first;
        const MultiIndex& beta = key.second;
        for (int d = 0; d <= mi_degree(beta); ++d)
            for (auto& gamma : monomials_of_degree(beta.size(), d)) {
                if (!mi_leq(gamma, beta)) continue;
                Poly w = c * mi_binomial(beta, gamma);
                EnvTerms leg2;
                leg2.emplace(mi_sub(beta, gamma), w);
                out.add_product(detail::monomial_mul(p, alpha, gamma), leg2);
            }
    }
    return out;
}

/// beta^{-1}(v (x) u) = v u_- (x) u_+.
inline TensorElement beta_inv(const TensorElement& t) {
    if (t.flavor() != TensorFlavor::Coprod) throw Error("beta_inv expects the coprod flavor");
    const auto& p = *t.pres();
    TensorElement out(t.pres(), TensorFlavor::Translate);
    for (auto& [key, c] : t.terms()) {
        const MultiIndex& alpha = key.first;
        const MultiIndex& beta = key.second;
        for (auto& [dkey, d] : detail::translate_monomial(p, beta)) {
            EnvTerms leg2;
            leg2.emplace(dkey.second, d * c);
            out.add_product(detail::monomial_mul(p, alpha, dkey.first), leg2);
        }
    }
    return out;
}

/// Componentwise product (u1 (x) v1)(u2 (x) v2) = u1 u2 (x) v1 v2.
inline TensorElement tensor_mul(const TensorElement& s, const TensorElement& t) {
    check_same(s.pres(), t.pres());
    if (s.flavor() != t.flavor()) throw Error("tensor flavor mismatch");
    const auto& p = *s.pres();
    TensorElement out(s.pres(), s.flavor());
    for (auto& [k1, c1] : s.terms())
        for (auto& [k2, c2] : t.terms()) {
            EnvTerms leg2 = detail::env_mul_terms(p, EnvTerms{{k1.second, c1}},
                                                  EnvTerms{{k2.second, c2}});
            out.add_product(detail::monomial_mul(p, k1.first, k2.first), leg2);
        }
    return out;
}

/// Twisted product matching delta's multiplicativity: for s = delta(v) and
/// t = delta(u) this assembles v_- u_- (x) u_+ v_+.
inline TensorElement tensor_mul_twisted(const TensorElement& s, const TensorElement& t) {
    check_same(s.pres(), t.pres());
    const auto& p = *s.pres();
    TensorElement out(s.pres(), TensorFlavor::Translate);
    for (auto& [k1, c1] : s.terms())
        for (auto& [k2, c2] : t.terms()) {
            EnvTerms leg2 = detail::env_mul_terms(p, EnvTerms{{k2.second, c2}},
                                                  EnvTerms{{k1.second, c1}});
            out.add_product(detail::monomial_mul(p, k1.first, k2.first), leg2);
        }
    return out;
}

/// Left multiplication by iota_A(a) on the chosen tensor leg, reduced back
/// to canonical form (for the Takeuchi-centralizer checks).
inline TensorElement tensor_lmul_leg(const TensorElement& t, const Poly& a, int leg) {
    const auto& p = *t.pres();
    TensorElement out(t.pres(), t.flavor());
    for (auto& [key, c] : t.terms()) {
        if (leg == 1) {
            EnvTerms leg2;
            leg2.emplace(key.second, c);
            out.add_product(detail::coeff_times_monomial(p, a, key.first), leg2);
        } else {
            EnvTerms crossed = detail::coeff_times_monomial(p, a, key.second);
            EnvTerms leg1;
            leg1.emplace(key.first, p.poly_one());
            EnvTerms leg2;
            for (auto& [g, d] : crossed) detail::env_add(leg2, g, d * c);
            out.add_product(leg1, leg2);
        }
    }
    return out;
}

// --- element expression parsing and rendering ---

namespace detail {

struct EnvOps {
    PresentationPtr pres;
    EnvElement number(const Rational& c) const {
        return EnvElement::coefficient(pres, Poly::constant(pres->vars(), c));
    }
    EnvElement variable(int j, std::size_t pos) const {
        if (j > pres->vars())
            throw ParseError("unknown variable x" + std::to_string(j) + " (only " +
                                 std::to_string(pres->vars()) + " variables)", pos);
        return EnvElement::coefficient(pres, Poly::variable(pres->vars(), j));
    }
    EnvElement generator(int j, std::size_t pos) const {
        if (j > pres->rank())
            throw ParseError("unknown generator X" + std::to_string(j) + " (rank " +
                                 std::to_string(pres->rank()) + ")", pos);
        return EnvElement::generator(pres, j - 1);
    }
    EnvElement add(const EnvElement& a, const EnvElement& b) const { return a + b; }
    EnvElement sub(const EnvElement& a, const EnvElement& b) const { return a - b; }
    EnvElement mul(const EnvElement& a, const EnvElement& b) const { return a * b; }
    EnvElement neg(const EnvElement& a) const { return -a; }
};

} // namespace detail

inline EnvElement parse_env(std::string_view text, const PresentationPtr& pres) {
    detail::ExprParser p(text);
    auto ast = p.parse();
    return detail::eval_expr<EnvElement>(*ast, detail::EnvOps{pres});
}

namespace detail {

/// One PBW term "X1^2*X2" followed by its coefficient; the sign of a
/// single-term coefficient is pulled out to the joining +/-.
inline void render_env_term(std::string& out, bool& first, const std::string& mono,
                            const Poly& coeff) {
    bool single = coeff.terms().size() == 1;
    bool neg = single && coeff.terms().begin()->second.sign() < 0;
    if (first) {
        if (neg) out += "-";
        first = false;
    } else {
        out += neg ? " - " : " + ";
    }
    if (mono.empty()) {
        if (single) {
            const auto& [e, c] = *coeff.terms().begin();
            std::string m = render_monomial(e, "x");
            Rational a = c.abs();
            if (m.empty()) out += a.str();
            else if (a.is_one()) out += m;
            else out += a.str() + "*" + m;
        } else {
            out += "(" + render_poly(coeff) + ")";
        }
        return;
    }
    out += mono;
    if (coeff.is_one()) return;
    if (single) {
        const auto& [e, c] = *coeff.terms().begin();
        std::string m = render_monomial(e, "x");
        Rational a = c.abs();
        if (!a.is_one() || m.empty()) out += "*" + a.str();
        if (!m.empty()) out += "*" + m;
    } else {
        out += "*(" + render_poly(coeff) + ")";
    }
}

} // namespace detail

/// Leading term first in graded-lex order, e.g. "X1^2*(x1 + 1) + X1*x1 - 1".
inline std::string render_env(const EnvElement& u) {
    if (u.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (auto it = u.terms().rbegin(); it != u.terms().rend(); ++it) {
        std::string mono = render_monomial(it->first, "X");
        if (mono.empty()) mono = "";
        detail::render_env_term(out, first, mono, it->second);
    }
    return out;
}

/// Terms ordered by ascending (leg1, leg2); rational coefficients lead,
/// polynomial coefficients trail the second leg.
inline std::string render_tensor(const TensorElement& t) {
    if (t.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (auto& [key, c] : t.terms()) {
        std::string l1 = render_monomial(key.first, "X");
        std::string l2 = render_monomial(key.second, "X");
        if (l1.empty()) l1 = "1";
        if (l2.empty()) l2 = "1";
        bool constant = c.is_constant();
        Rational q = c.constant_term();
        bool neg = constant ? q.sign() < 0 : false;
        if (first) {
            if (neg) out += "-";
            first = false;
        } else {
            out += neg ? " - " : " + ";
        }
        if (constant) {
            Rational a = q.abs();
            if (!a.is_one()) out += a.str() + "*";
            out += l1 + "\xE2\x8A\x97" + l2;
        } else {
            out += l1 + "\xE2\x8A\x97" + l2 + "*(" + render_poly(c) + ")";
        }
    }
    return out;
}

} // namespace rinehart
