#pragma once

#include "rinehart/finite_dual.hpp"
#include "rinehart/lie_rinehart.hpp"

#include <random>
#include <string>
#include <vector>

namespace rinehart {

/// Desk fixtures:
///   W1  — k=1, r=1, w(X1) = d/dx (the first Weyl algebra)
///   W2  — k=2, r=2, coordinate anchors, zero bracket
///   AFF — k=1, r=2, w(X1) = d/dx, w(X2) = x d/dx, [X2,X1] = -X1
inline PresentationPtr make_fixture(const std::string& name) {
    if (name == "W1") {
        std::vector<Derivation> anchor{Derivation::coordinate(1, 1)};
        std::vector<std::vector<std::vector<Poly>>> bracket(
            1, std::vector<std::vector<Poly>>(1, std::vector<Poly>(1, Poly::zero(1))));
        return make_presentation(1, 1, std::move(anchor), std::move(bracket), "W1");
    }
    if (name == "W2") {
        std::vector<Derivation> anchor{Derivation::coordinate(2, 1),
                                       Derivation::coordinate(2, 2)};
        std::vector<std::vector<std::vector<Poly>>> bracket(
            2, std::vector<std::vector<Poly>>(2, std::vector<Poly>(2, Poly::zero(2))));
        return make_presentation(2, 2, std::move(anchor), std::move(bracket), "W2");
    }
    if (name == "AFF") {
        Poly x = Poly::variable(1, 1);
        std::vector<Derivation> anchor{Derivation::coordinate(1, 1),
                                       Derivation(std::vector<Poly>{x})};
        std::vector<std::vector<std::vector<Poly>>> bracket(
            2, std::vector<std::vector<Poly>>(2, std::vector<Poly>(2, Poly::zero(1))));
        bracket[1][0][0] = Poly::constant(1, Rational(-1));  // [X2,X1] = -X1
        bracket[0][1][0] = Poly::constant(1, Rational(1));
        return make_presentation(1, 2, std::move(anchor), std::move(bracket), "AFF");
    }
    throw ValidationError("unknown fixture '" + name + "' (expected W1, W2 or AFF)");
}

inline bool is_builtin_fixture(const std::string& name) {
    return name == "W1" || name == "W2" || name == "AFF";
}

namespace detail {

inline Rational random_rational(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-2, 2);
    std::uniform_int_distribution<int> den(1, 2);
    return Rational(num(rng), den(rng));
}

} // namespace detail

/// Deterministic family of valid rank-1 modules for a fixture; the module
/// law constrains the matrices differently per bracket, so the sampling is
/// fixture-aware. Each result passes validate_rep.
inline URep sample_rank1_rep(const PresentationPtr& p, std::mt19937_64& rng) {
    const std::string& name = p->name();
    if (name == "AFF") {
        // rho_2 rho_1 - rho_1 rho_2 = rho_1 forces R1 = [c], R2 = [c x + d]
        Rational c = detail::random_rational(rng);
        Rational d = detail::random_rational(rng);
        Poly x = Poly::variable(1, 1);
        URep rep{p, 1, {}};
        rep.mats.emplace_back(1, 1, 1);
        rep.mats.back().at(0, 0) = Poly::constant(1, c);
        rep.mats.emplace_back(1, 1, 1);
        rep.mats.back().at(0, 0) = x * c + Poly::constant(1, d);
        validate_rep(rep);
        return rep;
    }
    if (name == "W2") {
        // commuting flat connections in one dimension come from a potential
        Poly f = detail::random_poly(p, rng, 2);
        URep rep{p, 1, {}};
        for (int i = 0; i < 2; ++i) {
            rep.mats.emplace_back(1, 1, 2);
            rep.mats.back().at(0, 0) = f.partial(i);
        }
        validate_rep(rep);
        return rep;
    }
    // rank 1 over a single generator carries no bracket constraint
    URep rep{p, 1, {}};
    for (int i = 0; i < p->rank(); ++i) {
        rep.mats.emplace_back(1, 1, p->vars());
        rep.mats.back().at(0, 0) = detail::random_poly(p, rng, 2);
    }
    validate_rep(rep);
    return rep;
}

/// Random representative of the finite dual: a module drawn from the
/// rank-1 family, its dual, or a rank-2 tensor product, with random legs.
inline DualRep sample_dualrep(const PresentationPtr& p, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> kind(0, 3);
    URep rep = trivial_rep(p);
    switch (kind(rng)) {
        case 0: rep = trivial_rep(p); break;
        case 1: rep = sample_rank1_rep(p, rng); break;
        case 2: rep = dual_rep(sample_rank1_rep(p, rng)); break;
        default:
            rep = tensor_rep(sample_rank1_rep(p, rng), sample_rank1_rep(p, rng));
            break;
    }
    std::vector<Poly> phi, vec;
    for (int q = 0; q < rep.rank; ++q) {
        phi.push_back(detail::random_poly(p, rng, 1));
        vec.push_back(detail::random_poly(p, rng, 1));
    }
    return DualRep{rep, phi, vec};
}

/// The exponential module of W1: rank 1 with R = [1].
inline URep exponential_rep(const PresentationPtr& p) {
    URep rep{p, 1, {}};
    for (int i = 0; i < p->rank(); ++i) {
        rep.mats.emplace_back(1, 1, p->vars());
        rep.mats.back().at(0, 0) = p->poly_one();
    }
    validate_rep(rep);
    return rep;
}

} // namespace rinehart
