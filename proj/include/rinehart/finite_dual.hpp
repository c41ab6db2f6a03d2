#pragma once

#include "rinehart/convolution.hpp"
#include "rinehart/hopf.hpp"
#include "rinehart/linalg.hpp"

#include <string>
#include <utility>
#include <vector>

namespace rinehart {

/// A free right U-module of finite rank, given by the action matrices of
/// the generators on coordinate columns: c . X_i = R_i c - w_i(c).
struct URep {
    PresentationPtr pres;
    int rank = 0;
    std::vector<PolyMatrix> mats;  // one d x d matrix per generator
};

/// Module law on basis pairs: the action operators must satisfy
/// rho_j rho_i - rho_i rho_j = sum_m (. c_ij^m) rho_m for i < j, which for
/// the matrix parts reads R_j R_i - R_i R_j - w_j(R_i) + w_i(R_j) =
/// sum_m c_ij^m R_m (the derivation parts cancel by the anchor axiom).
inline void validate_rep(const URep& rep) {
    const auto& p = *rep.pres;
    if (rep.rank < 1) throw ValidationError("representation rank must be >= 1");
    if (static_cast<int>(rep.mats.size()) != p.rank())
        throw ValidationError("expected one action matrix per generator");
    for (auto& m : rep.mats)
        if (m.rows() != rep.rank || m.cols() != rep.rank)
            throw ValidationError("action matrices must be rank x rank");
    for (int i = 0; i < p.rank(); ++i)
        for (int j = i + 1; j < p.rank(); ++j) {
            PolyMatrix lhs = rep.mats[j] * rep.mats[i] - rep.mats[i] * rep.mats[j] -
                             rep.mats[i].map_derivation(p.anchor(j)) +
                             rep.mats[j].map_derivation(p.anchor(i));
            PolyMatrix rhs(rep.rank, rep.rank, p.vars());
            for (int m = 0; m < p.rank(); ++m) {
                const Poly& c = p.bracket(i, j)[m];
                if (c.is_zero()) continue;
                rhs = rhs + c * rep.mats[m];
            }
            if (!(lhs == rhs))
                throw ValidationError("flatness fails at generator pair (i,j)=(" +
                                      std::to_string(i + 1) + "," + std::to_string(j + 1) +
                                      ")");
        }
}

/// The identity object: A with a . u = eps(iota_A(a) u).
inline URep trivial_rep(const PresentationPtr& p) {
    URep rep{p, 1, {}};
    for (int i = 0; i < p->rank(); ++i) rep.mats.emplace_back(1, 1, p->vars());
    return rep;
}

inline std::vector<Poly> act_gen(const URep& rep, int i, const std::vector<Poly>& c) {
    const auto& p = *rep.pres;
    std::vector<Poly> out(rep.rank, p.poly_zero());
    for (int a = 0; a < rep.rank; ++a) {
        Poly acc = p.poly_zero();
        for (int b = 0; b < rep.rank; ++b) {
            if (rep.mats[i].at(a, b).is_zero()) continue;
            acc += rep.mats[i].at(a, b) * c[b];
        }
        acc -= p.anchor(i).apply(c[a]);
        out[a] = acc;
    }
    return out;
}

/// m . X^alpha: right action composes contravariantly, so the generator
/// sequence of alpha is applied left to right.
inline std::vector<Poly> act_monomial(const URep& rep, std::vector<Poly> m,
                                      const MultiIndex& alpha) {
    for (std::size_t i = 0; i < alpha.size(); ++i)
        for (std::uint32_t rep_count = 0; rep_count < alpha[i]; ++rep_count)
            m = act_gen(rep, static_cast<int>(i), m);
    return m;
}

inline std::vector<Poly> act_element(const URep& rep, const std::vector<Poly>& m,
                                     const EnvElement& u) {
    std::vector<Poly> out(rep.rank, rep.pres->poly_zero());
    for (auto& [alpha, a] : u.terms()) {
        std::vector<Poly> v = act_monomial(rep, m, alpha);
        for (int q = 0; q < rep.rank; ++q) out[q] += v[q] * a;
    }
    return out;
}

/// A representative phi (x) m of the finite dual; equality in U degree is
/// only ever decided through zeta at finite precision.
struct DualRep {
    URep rep;
    std::vector<Poly> phi;  // row vector, element of M*
    std::vector<Poly> vec;  // column vector, element of M
};

inline Poly pair_row_col(const PresentationPtr& p, const std::vector<Poly>& row,
                         const std::vector<Poly>& col) {
    Poly acc = p->poly_zero();
    for (std::size_t q = 0; q < row.size(); ++q) acc += row[q] * col[q];
    return acc;
}

/// zeta(phi (x) m)(u) = phi(m . u), as a total oracle on PBW monomials.
inline FunctionalOracle zeta(const DualRep& w) {
    const PresentationPtr p = w.rep.pres;
    URep rep = w.rep;
    std::vector<Poly> phi = w.phi, vec = w.vec;
    return {p, [p, rep, phi, vec](const MultiIndex& alpha) {
                return pair_row_col(p, phi, act_monomial(rep, vec, alpha));
            }};
}

inline Poly dualrep_counit(const DualRep& w) {
    return pair_row_col(w.rep.pres, w.phi, w.vec);
}

/// eta(a' (x) a): the source/target pair landing in the trivial module.
inline DualRep eta_elem(const PresentationPtr& p, const Poly& aPrime, const Poly& a) {
    return DualRep{trivial_rep(p), {aPrime}, {a}};
}

/// (m (x) n) . u = m . u_1 (x) n . u_2; the matrices add Kronecker-wise
/// because the entrywise derivation arises once in the combined operator.
inline URep tensor_rep(const URep& a, const URep& b) {
    check_same(a.pres, b.pres);
    URep out{a.pres, a.rank * b.rank, {}};
    PolyMatrix ia = PolyMatrix::identity(a.rank, a.pres->vars());
    PolyMatrix ib = PolyMatrix::identity(b.rank, b.pres->vars());
    for (int i = 0; i < a.pres->rank(); ++i)
        out.mats.push_back(a.mats[i].kron(ib) + ia.kron(b.mats[i]));
    validate_rep(out);
    return out;
}

/// Dual action (phi . u)(m) = phi(m . u_-) . u_+, i.e. matrices -R_i^T.
inline URep dual_rep(const URep& a) {
    URep out{a.pres, a.rank, {}};
    for (auto& m : a.mats) out.mats.push_back(-m.transpose());
    return out;
}

inline std::vector<Poly> kron_vec(const std::vector<Poly>& a, const std::vector<Poly>& b) {
    std::vector<Poly> out;
    out.reserve(a.size() * b.size());
    for (auto& x : a)
        for (auto& y : b) out.push_back(x * y);
    return out;
}

/// Product of representatives: (psi (x) n)(phi (x) m) lands in M (x) N
/// with the star functional m (x) n -> phi(m) psi(n).
inline DualRep dualrep_mul(const DualRep& w1, const DualRep& w2) {
    URep rep = tensor_rep(w1.rep, w2.rep);
    return DualRep{rep, kron_vec(w1.phi, w2.phi), kron_vec(w1.vec, w2.vec)};
}

/// Delta at representative level over the coordinate dual basis:
/// sum_q (phi (x) e_q) (x) (e_q^* (x) m).
inline std::vector<std::pair<DualRep, DualRep>> dualrep_coprod(const DualRep& w) {
    const auto& p = w.rep.pres;
    std::vector<std::pair<DualRep, DualRep>> out;
    for (int q = 0; q < w.rep.rank; ++q) {
        std::vector<Poly> eq(w.rep.rank, p->poly_zero());
        eq[q] = p->poly_one();
        out.emplace_back(DualRep{w.rep, w.phi, eq}, DualRep{w.rep, eq, w.vec});
    }
    return out;
}

/// S at representative level: ev_m (x) phi on the dual module.
inline DualRep dualrep_antipode(const DualRep& w) {
    return DualRep{dual_rep(w.rep), w.vec, w.phi};
}

/// Formal sum of representatives; zeta extends linearly.
using DualRepSum = std::vector<DualRep>;

inline FunctionalOracle zeta_sum(const PresentationPtr& p, const DualRepSum& ws) {
    std::vector<FunctionalOracle> parts;
    for (auto& w : ws) parts.push_back(zeta(w));
    return {p, [p, parts](const MultiIndex& alpha) {
                Poly acc = p->poly_zero();
                for (auto& f : parts) acc += f.rule(alpha);
                return acc;
            }};
}

/// w - eta(eps(w) (x) 1), a representative sum lying in ker eps.
inline DualRepSum normalize_kernel(const DualRep& w) {
    const auto& p = w.rep.pres;
    return DualRepSum{w, eta_elem(p, -dualrep_counit(w), p->poly_one())};
}

inline DualRepSum sum_mul(const DualRepSum& a, const DualRepSum& b) {
    DualRepSum out;
    for (auto& x : a)
        for (auto& y : b) out.push_back(dualrep_mul(x, y));
    return out;
}

/// zeta(K^len) subset F_len U*: normalizes every factor into ker eps,
/// multiplies, and certifies the vanishing level of the truncation at n.
inline bool k_order_check(const std::vector<DualRep>& ws, int n) {
    if (ws.empty()) return true;
    const auto& p = ws.front().rep.pres;
    DualRepSum prod = normalize_kernel(ws.front());
    for (std::size_t i = 1; i < ws.size(); ++i)
        prod = sum_mul(prod, normalize_kernel(ws[i]));
    TruncatedFunctional f = truncate(zeta_sum(p, prod), n);
    int want = std::min(static_cast<int>(ws.size()), n + 1);
    return vanishing_level(f) >= want;
}

/// Rank over Frac(A) of the span of the truncated zeta images inside
/// (F^n U)*, against the full rank of that module.
inline std::pair<int, int> density_diagnostic(const PresentationPtr& p,
                                              const std::vector<DualRep>& ws, int n) {
    auto monos = monomials_up_to(p->rank(), n);
    int full = static_cast<int>(monos.size());
    if (ws.empty()) return {0, full};
    PolyMatrix m(static_cast<int>(ws.size()), full, p->vars());
    for (std::size_t i = 0; i < ws.size(); ++i) {
        TruncatedFunctional f = truncate(zeta(ws[i]), n);
        for (int j = 0; j < full; ++j) m.at(static_cast<int>(i), j) = f.value(monos[j]);
    }
    return {bareiss_rank(m), full};
}

} // namespace rinehart
