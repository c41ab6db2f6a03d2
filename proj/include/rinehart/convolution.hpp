#pragma once

#include "rinehart/enveloping.hpp"

#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace rinehart {

/// A right A-linear functional on U known exactly on F^n U, stored by its
/// values on the PBW monomials |alpha| <= n (zeros omitted). Two
/// functionals agree at precision n iff their tables agree.
class TruncatedFunctional {
public:
    TruncatedFunctional(PresentationPtr pres, int precision, EnvTerms values = {})
        : pres_(std::move(pres)), precision_(precision), values_(std::move(values)) {}

    static TruncatedFunctional zero(const PresentationPtr& p, int n) {
        return TruncatedFunctional(p, n);
    }
    /// The counit table: 1 at alpha = 0 — the unit of the convolution algebra.
    static TruncatedFunctional counit(const PresentationPtr& p, int n) {
        TruncatedFunctional f(p, n);
        f.set(mi_zero(p->rank()), p->poly_one());
        return f;
    }

    const PresentationPtr& pres() const { return pres_; }
    int precision() const { return precision_; }
    const EnvTerms& table() const { return values_; }

    Poly value(const MultiIndex& alpha) const {
        if (mi_degree(alpha) > precision_) throw PrecisionError(mi_degree(alpha), precision_);
        auto it = values_.find(alpha);
        return it == values_.end() ? pres_->poly_zero() : it->second;
    }

    void set(const MultiIndex& alpha, const Poly& v) {
        if (mi_degree(alpha) > precision_)
            throw PrecisionError(mi_degree(alpha), precision_);
        if (v.is_zero()) values_.erase(alpha);
        else values_[alpha] = v;
    }

    /// Restriction to a smaller precision.
    TruncatedFunctional restrict_to(int n) const {
        if (n > precision_) throw PrecisionError(n, precision_);
        EnvTerms t;
        for (auto& [a, v] : values_)
            if (mi_degree(a) <= n) t.emplace(a, v);
        return TruncatedFunctional(pres_, n, std::move(t));
    }

    TruncatedFunctional& operator+=(const TruncatedFunctional& o) {
        check_same(pres_, o.pres_);
        if (o.precision_ < precision_) *this = restrict_to(o.precision_);
        for (auto& [a, v] : o.values_)
            if (mi_degree(a) <= precision_) detail::env_add(values_, a, v);
        return *this;
    }
    TruncatedFunctional& operator-=(const TruncatedFunctional& o) {
        check_same(pres_, o.pres_);
        if (o.precision_ < precision_) *this = restrict_to(o.precision_);
        for (auto& [a, v] : o.values_)
            if (mi_degree(a) <= precision_) detail::env_add(values_, a, -v);
        return *this;
    }
    friend TruncatedFunctional operator+(TruncatedFunctional a, const TruncatedFunctional& b) {
        return a += b;
    }
    friend TruncatedFunctional operator-(TruncatedFunctional a, const TruncatedFunctional& b) {
        return a -= b;
    }
    friend TruncatedFunctional operator*(const TruncatedFunctional& f, const Poly& a) {
        TruncatedFunctional r(f.pres_, f.precision_);
        for (auto& [k, v] : f.values_) r.set(k, v * a);
        return r;
    }

    friend bool operator==(const TruncatedFunctional& a, const TruncatedFunctional& b) {
        return a.pres_.get() == b.pres_.get() && a.precision_ == b.precision_ &&
               a.values_ == b.values_;
    }
    friend bool operator!=(const TruncatedFunctional& a, const TruncatedFunctional& b) {
        return !(a == b);
    }

private:
    PresentationPtr pres_;
    int precision_;
    EnvTerms values_;
};

/// Rule form of an element of the complete algebra U*: a pure, total rule
/// alpha -> f(X^alpha), truncatable at any depth (the Cauchy-tower
/// representation of completed elements).
struct FunctionalOracle {
    PresentationPtr pres;
    std::function<Poly(const MultiIndex&)> rule;

    static FunctionalOracle counit(const PresentationPtr& p) {
        return {p, [p](const MultiIndex& a) {
                    return mi_degree(a) == 0 ? p->poly_one() : p->poly_zero();
                }};
    }
    static FunctionalOracle zero(const PresentationPtr& p) {
        return {p, [p](const MultiIndex&) { return p->poly_zero(); }};
    }
    /// Extend-by-zero of a finite table (the E_lambda construction).
    static FunctionalOracle from_table(const PresentationPtr& p, EnvTerms table) {
        auto shared = std::make_shared<EnvTerms>(std::move(table));
        return {p, [p, shared](const MultiIndex& a) {
                    auto it = shared->find(a);
                    return it == shared->end() ? p->poly_zero() : it->second;
                }};
    }
};

inline TruncatedFunctional truncate(const FunctionalOracle& f, int n) {
    TruncatedFunctional out(f.pres, n);
    for (auto& alpha : monomials_up_to(f.pres->rank(), n)) out.set(alpha, f.rule(alpha));
    return out;
}

/// f(u) = sum f(X^alpha) . a_alpha by right A-linearity.
inline Poly eval_functional(const TruncatedFunctional& f, const EnvElement& u) {
    check_same(f.pres(), u.pres());
    if (u.degree() > f.precision()) throw PrecisionError(u.degree(), f.precision());
    Poly r = f.pres()->poly_zero();
    for (auto& [alpha, a] : u.terms()) r += f.value(alpha) * a;
    return r;
}

inline Poly eval_oracle(const FunctionalOracle& f, const EnvElement& u) {
    check_same(f.pres, u.pres());
    Poly r = f.pres->poly_zero();
    for (auto& [alpha, a] : u.terms()) r += f.rule(alpha) * a;
    return r;
}

/// Convolution (f*g)(u) = f(u_1) g(u_2), evaluated through the binomial
/// form of Delta on PBW monomials. The result carries the minimum of the
/// two precisions; Delta is filtered, so that is exact there.
inline TruncatedFunctional convolve(const TruncatedFunctional& f, const TruncatedFunctional& g) {
    check_same(f.pres(), g.pres());
    int n = std::min(f.precision(), g.precision());
    TruncatedFunctional out(f.pres(), n);
    for (auto& alpha : monomials_up_to(f.pres()->rank(), n)) {
        Poly acc = f.pres()->poly_zero();
        for (int d = 0; d <= mi_degree(alpha); ++d)
            for (auto& gamma : monomials_of_degree(alpha.size(), d)) {
                if (!mi_leq(gamma, alpha)) continue;
                Poly fv = f.value(gamma);
                if (fv.is_zero()) continue;
                Poly gv = g.value(mi_sub(alpha, gamma));
                if (gv.is_zero()) continue;
                acc += fv * gv * mi_binomial(alpha, gamma);
            }
        out.set(alpha, acc);
    }
    return out;
}

/// vartheta(a' (x) a): u -> eps(iota_A(a) u) . a', the source/target pair
/// of the convolution algebra.
inline FunctionalOracle vartheta(const PresentationPtr& p, const Poly& aPrime, const Poly& a) {
    return {p, [p, aPrime, a](const MultiIndex& alpha) {
                EnvTerms t = detail::coeff_times_monomial(*p, a, alpha);
                auto it = t.find(mi_zero(p->rank()));
                Poly eps = it == t.end() ? p->poly_zero() : it->second;
                return eps * aPrime;
            }};
}

/// Largest k <= precision+1 such that f vanishes on F^{k-1} U, i.e. the
/// deepest Ann-filtration stage the truncation can certify.
inline int vanishing_level(const TruncatedFunctional& f) {
    int best = f.precision() + 1;
    for (auto& [alpha, v] : f.table()) {
        if (v.is_zero()) continue;
        if (mi_degree(alpha) < best) best = mi_degree(alpha);
    }
    return best;
}

/// An element of (F^m U)* (x)_A (F^n U)* in the canonical dual-basis form
/// sum_alpha g_alpha (x) lambda_alpha, stored as table[(beta, alpha)] =
/// g_alpha(X^beta).
class TensorFunctional {
public:
    TensorFunctional(PresentationPtr pres, int m, int n, TensorTerms table = {})
        : pres_(std::move(pres)), m_(m), n_(n), table_(std::move(table)) {}

    const PresentationPtr& pres() const { return pres_; }
    int first_level() const { return m_; }
    int second_level() const { return n_; }
    const TensorTerms& table() const { return table_; }

    Poly value(const MultiIndex& beta, const MultiIndex& alpha) const {
        auto it = table_.find({beta, alpha});
        return it == table_.end() ? pres_->poly_zero() : it->second;
    }
    void add(const MultiIndex& beta, const MultiIndex& alpha, const Poly& v) {
        if (mi_degree(beta) > m_ || mi_degree(alpha) > n_)
            throw PrecisionError(mi_degree(beta) + mi_degree(alpha), m_ + n_);
        if (v.is_zero()) return;
        auto key = std::make_pair(beta, alpha);
        auto [it, inserted] = table_.emplace(key, v);
        if (!inserted) {
            it->second += v;
            if (it->second.is_zero()) table_.erase(it);
        }
    }

    /// The column g_alpha as a truncated functional at level m.
    TruncatedFunctional column(const MultiIndex& alpha) const {
        TruncatedFunctional g(pres_, m_);
        for (auto& [key, v] : table_)
            if (key.second == alpha) g.set(key.first, v);
        return g;
    }

    friend bool operator==(const TensorFunctional& a, const TensorFunctional& b) {
        return a.pres_.get() == b.pres_.get() && a.m_ == b.m_ && a.n_ == b.n_ &&
               a.table_ == b.table_;
    }
    friend bool operator!=(const TensorFunctional& a, const TensorFunctional& b) {
        return !(a == b);
    }

private:
    PresentationPtr pres_;
    int m_;
    int n_;
    TensorTerms table_;
};

/// phi_{m,n}(sum f_i (x) g_i): the canonical isomorphism onto
/// (F^n U (x) F^m U)*, assembled in dual-basis form:
/// table[beta][alpha] = sum_i f_i(iota_A(g_i(X^alpha)) . X^beta).
inline TensorFunctional phi_mn(
    const std::vector<std::pair<TruncatedFunctional, TruncatedFunctional>>& parts, int m, int n) {
    if (parts.empty()) throw Error("phi_mn needs at least one tensor part");
    const PresentationPtr& p = parts.front().first.pres();
    for (auto& [f, g] : parts) {
        if (f.precision() != m || g.precision() != n)
            throw Error("phi_mn level mismatch: expected (" + std::to_string(m) + "," +
                        std::to_string(n) + ")");
        check_same(f.pres(), p);
        check_same(g.pres(), p);
    }
    TensorFunctional out(p, m, n);
    for (auto& alpha : monomials_up_to(p->rank(), n)) {
        for (auto& beta : monomials_up_to(p->rank(), m)) {
            Poly acc = p->poly_zero();
            for (auto& [f, g] : parts) {
                Poly ga = g.value(alpha);
                if (ga.is_zero()) continue;
                acc += eval_functional(
                    f, EnvElement(p, detail::coeff_times_monomial(*p, ga, beta)));
            }
            out.add(beta, alpha, acc);
        }
    }
    return out;
}

/// Evaluation rule of a TensorFunctional on F^n U (x) F^m U through
/// phi_{m,n}: (x, y) -> sum_alpha g_alpha(iota_A(lambda_alpha(x)) . y).
inline Poly phi_mn_eval(const TensorFunctional& t, const EnvElement& x, const EnvElement& y) {
    check_same(t.pres(), x.pres());
    check_same(t.pres(), y.pres());
    if (x.degree() > t.second_level()) throw PrecisionError(x.degree(), t.second_level());
    if (y.degree() > t.first_level()) throw PrecisionError(y.degree(), t.first_level());
    const auto& p = t.pres();
    Poly acc = p->poly_zero();
    for (auto& [alpha, xa] : x.terms()) {
        EnvElement shifted = lmul_coeff(xa, y);
        for (auto& [beta, yb] : shifted.terms()) acc += t.value(beta, alpha) * yb;
    }
    return acc;
}

inline std::function<Poly(const EnvElement&, const EnvElement&)>
phi_mn_back(const TensorFunctional& t) {
    return [t](const EnvElement& x, const EnvElement& y) { return phi_mn_eval(t, x, y); };
}

/// Deterministic table rendering: "precision n" then one "[alpha] value"
/// line per monomial in ascending graded-lex order.
inline std::string render_functional(const TruncatedFunctional& f) {
    std::string out = "precision " + std::to_string(f.precision()) + "\n";
    for (auto& alpha : monomials_up_to(f.pres()->rank(), f.precision()))
        out += mi_str(alpha) + " " + render_poly(f.value(alpha)) + "\n";
    return out;
}

} // namespace rinehart
