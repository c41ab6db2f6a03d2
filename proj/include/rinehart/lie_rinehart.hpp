#pragma once

#include "rinehart/expr.hpp"
#include "rinehart/poly.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

namespace rinehart {

/// Right-coefficient term table of an enveloping-algebra element.
using EnvTerms = std::map<MultiIndex, Poly, GrlexLess>;
/// Term table of a two-leg tensor, coefficients on the right of leg two.
using TensorTerms = std::map<std::pair<MultiIndex, MultiIndex>, Poly, PairGrlexLess>;

class Presentation;
using PresentationPtr = std::shared_ptr<const Presentation>;

/// A Lie-Rinehart algebra (A, L) with A = Q[x_1..x_k] and L free of rank r
/// on X_1..X_r. Structure data: the anchor derivations w(X_i) and the
/// right-coefficient structure functions [X_i, X_j] = sum_m X_m c[i][j][m].
/// Immutable after construction; carries write-once memo tables for the
/// rewriting engine of the enveloping algebra.
class Presentation {
public:
    Presentation(int vars, int rank, std::vector<Derivation> anchor,
                 std::vector<std::vector<std::vector<Poly>>> bracket, std::string name = "")
        : vars_(vars), rank_(rank), anchor_(std::move(anchor)), bracket_(std::move(bracket)),
          name_(std::move(name)) {}

    int vars() const { return vars_; }
    int rank() const { return rank_; }
    const std::string& name() const { return name_; }
    const Derivation& anchor(int i) const { return anchor_[i]; }              // 0-based
    const std::vector<Poly>& bracket(int i, int j) const { return bracket_[i][j]; }

    Poly poly_zero() const { return Poly::zero(vars_); }
    Poly poly_one() const { return Poly::one(vars_); }

    // write-once memo tables; guarded by mutex, entries never change
    struct Caches {
        std::map<std::pair<int, MultiIndex>, EnvTerms> gen_times_monomial;
        std::map<MultiIndex, TensorTerms> translate_monomial;
        std::mutex mutex;
    };
    Caches& caches() const { return caches_; }

private:
    int vars_;
    int rank_;
    std::vector<Derivation> anchor_;
    std::vector<std::vector<std::vector<Poly>>> bracket_;
    std::string name_;
    mutable Caches caches_;
};

/// Element of L with right coefficients: sum_m X_m . coeff[m].
struct LElement {
    PresentationPtr pres;
    std::vector<Poly> coeffs;  // length r

    static LElement zero(const PresentationPtr& p) {
        return LElement{p, std::vector<Poly>(p->rank(), p->poly_zero())};
    }
    static LElement basis(const PresentationPtr& p, int i) {  // 0-based
        auto e = zero(p);
        e.coeffs[i] = p->poly_one();
        return e;
    }

    friend bool operator==(const LElement& a, const LElement& b) {
        return a.coeffs == b.coeffs;
    }
};

inline void check_same(const PresentationPtr& a, const PresentationPtr& b) {
    if (a.get() != b.get()) throw Error("elements belong to different presentations");
}

/// A-linear extension of the anchor: (sum X_m a_m)(a) = sum a_m . w_m(a).
inline Poly anchor_apply(const LElement& xi, const Poly& a) {
    Poly r = xi.pres->poly_zero();
    for (int m = 0; m < xi.pres->rank(); ++m) {
        if (xi.coeffs[m].is_zero()) continue;
        r += xi.coeffs[m] * xi.pres->anchor(m).apply(a);
    }
    return r;
}

inline Derivation anchor_derivation(const LElement& xi) {
    Derivation d(xi.pres->vars());
    for (int m = 0; m < xi.pres->rank(); ++m)
        d = d + (xi.coeffs[m] * xi.pres->anchor(m));
    return d;
}

/// Bilinear bracket extension via antisymmetry and the Leibniz rule:
/// [a_i X_i, b_j X_j] = a_i b_j [X_i,X_j] + a_i w_i(b_j) X_j - b_j w_j(a_i) X_i.
inline LElement bracket(const LElement& xi, const LElement& eta) {
    check_same(xi.pres, eta.pres);
    const auto& p = xi.pres;
    const int r = p->rank();
    LElement out = LElement::zero(p);
    for (int m = 0; m < r; ++m) {
        Poly acc = p->poly_zero();
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < r; ++j) {
                const Poly& cij = p->bracket(i, j)[m];
                if (cij.is_zero()) continue;
                acc += xi.coeffs[i] * eta.coeffs[j] * cij;
            }
        acc += anchor_apply(xi, eta.coeffs[m]);
        acc -= anchor_apply(eta, xi.coeffs[m]);
        out.coeffs[m] = acc;
    }
    return out;
}

inline LElement lelement_scale(const LElement& xi, const Poly& a) {
    LElement out = xi;
    for (auto& c : out.coeffs) c = c * a;
    return out;
}
inline LElement lelement_add(const LElement& a, const LElement& b) {
    check_same(a.pres, b.pres);
    LElement out = a;
    for (int m = 0; m < a.pres->rank(); ++m) out.coeffs[m] += b.coeffs[m];
    return out;
}

/// Validates the Lie-Rinehart axioms on basis data: antisymmetry of the
/// structure functions, the anchor being a Lie morphism on basis pairs, and
/// the Jacobi identity on basis triples (sufficient by bilinearity).
inline PresentationPtr make_presentation(int vars, int rank, std::vector<Derivation> anchor,
                                         std::vector<std::vector<std::vector<Poly>>> brackets,
                                         std::string name = "") {
    if (vars < 1) throw ValidationError("variable count must be >= 1");
    if (rank < 1) throw ValidationError("rank must be >= 1");
    if (static_cast<int>(anchor.size()) != rank)
        throw ValidationError("anchor list must have one derivation per generator");
    for (int i = 0; i < rank; ++i)
        if (anchor[i].vars() != vars)
            throw ValidationError("anchor derivation " + std::to_string(i + 1) +
                                  " has wrong variable count");
    if (static_cast<int>(brackets.size()) != rank)
        throw ValidationError("bracket table must be r x r");
    for (auto& row : brackets) {
        if (static_cast<int>(row.size()) != rank)
            throw ValidationError("bracket table must be r x r");
        for (auto& entry : row)
            if (static_cast<int>(entry.size()) != rank)
                throw ValidationError("bracket entries must have r coefficients");
    }

    auto pres = std::make_shared<Presentation>(vars, rank, std::move(anchor),
                                               std::move(brackets), std::move(name));

    for (int i = 0; i < rank; ++i)
        for (int j = 0; j < rank; ++j)
            for (int m = 0; m < rank; ++m)
                if (pres->bracket(i, j)[m] != -pres->bracket(j, i)[m])
                    throw ValidationError("bracket antisymmetry fails at (i,j,m)=(" +
                                          std::to_string(i + 1) + "," + std::to_string(j + 1) +
                                          "," + std::to_string(m + 1) + ")");

    PresentationPtr cpres = pres;
    for (int i = 0; i < rank; ++i)
        for (int j = i + 1; j < rank; ++j) {
            Derivation lhs = Derivation::commutator(pres->anchor(i), pres->anchor(j));
            LElement bij{cpres, pres->bracket(i, j)};
            if (!(lhs == anchor_derivation(bij)))
                throw ValidationError("anchor is not a Lie morphism at (i,j)=(" +
                                      std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
        }

    for (int i = 0; i < rank; ++i)
        for (int j = i + 1; j < rank; ++j)
            for (int l = j + 1; l <= rank - 1; ++l) {
                LElement xi = LElement::basis(cpres, i);
                LElement eta = LElement::basis(cpres, j);
                LElement zeta = LElement::basis(cpres, l);
                LElement s = lelement_add(
                    lelement_add(bracket(xi, bracket(eta, zeta)), bracket(eta, bracket(zeta, xi))),
                    bracket(zeta, bracket(xi, eta)));
                if (!(s == LElement::zero(cpres)))
                    throw ValidationError("Jacobi identity fails at basis triple (" +
                                          std::to_string(i + 1) + "," + std::to_string(j + 1) +
                                          "," + std::to_string(l + 1) + ")");
            }

    return cpres;
}

} // namespace rinehart
