#pragma once

#include "rinehart/multi_index.hpp"
#include "rinehart/rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace rinehart {

/// Sparse multivariate polynomial over Q in a fixed number of variables.
/// Terms are kept in graded-lex order with no stored zero coefficients;
/// the empty term map is the zero polynomial.
class Poly {
public:
    using Terms = std::map<MultiIndex, Rational, GrlexLess>;

    explicit Poly(int vars = 1) : vars_(vars) {}

    static Poly constant(int vars, const Rational& c) {
        Poly p(vars);
        p.add_term(mi_zero(vars), c);
        return p;
    }
    static Poly zero(int vars) { return Poly(vars); }
    static Poly one(int vars) { return constant(vars, Rational(1)); }
    /// x_j with 1-based index j in 1..vars.
    static Poly variable(int vars, int j) {
        Poly p(vars);
        p.add_term(mi_unit(vars, j - 1), Rational(1));
        return p;
    }
    static Poly monomial(int vars, const MultiIndex& e, const Rational& c = Rational(1)) {
        Poly p(vars);
        p.add_term(e, c);
        return p;
    }

    int vars() const { return vars_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && mi_degree(terms_.begin()->first) == 0);
    }
    bool is_one() const { return is_constant() && constant_term().is_one(); }

    Rational constant_term() const {
        auto it = terms_.find(mi_zero(vars_));
        return it == terms_.end() ? Rational(0) : it->second;
    }

    Rational coeff(const MultiIndex& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    int total_degree() const {  // -1 for the zero polynomial
        if (terms_.empty()) return -1;
        return mi_degree(terms_.rbegin()->first);
    }

    void add_term(const MultiIndex& e, const Rational& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    Poly& operator+=(const Poly& o) {
        check_vars(o);
        for (auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        check_vars(o);
        for (auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }
    Poly operator-() const {
        Poly r(vars_);
        for (auto& [e, c] : terms_) r.terms_.emplace(e, -c);
        return r;
    }
    Poly& operator*=(const Rational& c) {
        if (c.is_zero()) { terms_.clear(); return *this; }
        for (auto& [e, v] : terms_) v *= c;
        return *this;
    }

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b) {
        a.check_vars(b);
        Poly r(a.vars_);
        for (auto& [ea, ca] : a.terms_)
            for (auto& [eb, cb] : b.terms_)
                r.add_term(mi_add(ea, eb), ca * cb);
        return r;
    }
    friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
    friend Poly operator*(const Rational& c, Poly a) { return a *= c; }

    friend bool operator==(const Poly& a, const Poly& b) {
        return a.vars_ == b.vars_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    /// Partial derivative with respect to x_{j+1} (0-based j).
    Poly partial(int j) const {
        Poly r(vars_);
        for (auto& [e, c] : terms_) {
            if (e[j] == 0) continue;
            MultiIndex d(e);
            d[j] -= 1;
            r.add_term(d, c * Rational(static_cast<long>(e[j])));
        }
        return r;
    }

    void check_vars(const Poly& o) const {
        if (vars_ != o.vars_)
            throw Error("polynomial variable-count mismatch: " + std::to_string(vars_) +
                        " vs " + std::to_string(o.vars_));
    }

private:
    int vars_;
    Terms terms_;
};

/// A k-linear derivation of Q[x_1..x_k], stored by its coefficients on
/// d/dx_j; applying it realizes the Leibniz rule by construction.
class Derivation {
public:
    explicit Derivation(int vars) : comps_(vars, Poly(vars)) {}
    explicit Derivation(std::vector<Poly> comps) : comps_(std::move(comps)) {}

    /// d/dx_j (1-based j).
    static Derivation coordinate(int vars, int j) {
        Derivation d(vars);
        d.comps_[j - 1] = Poly::one(vars);
        return d;
    }

    int vars() const { return static_cast<int>(comps_.size()); }
    const Poly& component(int j) const { return comps_[j]; }
    const std::vector<Poly>& components() const { return comps_; }

    Poly apply(const Poly& p) const {
        if (p.vars() != vars())
            throw Error("derivation/polynomial variable-count mismatch");
        Poly r(p.vars());
        for (int j = 0; j < vars(); ++j) {
            if (comps_[j].is_zero()) continue;
            r += comps_[j] * p.partial(j);
        }
        return r;
    }

    friend Derivation operator+(const Derivation& a, const Derivation& b) {
        std::vector<Poly> c;
        for (int j = 0; j < a.vars(); ++j) c.push_back(a.comps_[j] + b.comps_[j]);
        return Derivation(std::move(c));
    }
    friend Derivation operator*(const Poly& p, const Derivation& d) {
        std::vector<Poly> c;
        for (auto& comp : d.comps_) c.push_back(p * comp);
        return Derivation(std::move(c));
    }
    /// Commutator D1 o D2 - D2 o D1, again a derivation.
    static Derivation commutator(const Derivation& a, const Derivation& b) {
        std::vector<Poly> c;
        for (int j = 0; j < a.vars(); ++j)
            c.push_back(a.apply(b.comps_[j]) - b.apply(a.comps_[j]));
        return Derivation(std::move(c));
    }

    friend bool operator==(const Derivation& a, const Derivation& b) {
        return a.comps_ == b.comps_;
    }

private:
    std::vector<Poly> comps_;
};

inline Poly poly_sum(const Poly& p, const Poly& q) { return p + q; }
inline Poly poly_product(const Poly& p, const Poly& q) { return p * q; }
inline Poly poly_derive(const Derivation& d, const Poly& p) { return d.apply(p); }

} // namespace rinehart
