#include "rinehart/documents.hpp"
#include "rinehart/fixtures.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace rinehart;

namespace {

LElement random_lelement(const PresentationPtr& p, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-3, 3);
    LElement xi = LElement::zero(p);
    for (int m = 0; m < p->rank(); ++m) {
        Poly c(p->vars());
        for (auto& e : monomials_up_to(p->vars(), 2)) c.add_term(e, Rational(num(rng)));
        xi.coeffs[m] = c;
    }
    return xi;
}

} // namespace

TEST_CASE("builtin fixtures validate") {
    for (auto name : {"W1", "W2", "AFF"}) {
        auto p = make_fixture(name);
        CHECK(p->name() == name);
    }
}

TEST_CASE("presentation documents load and validate") {
    Json w1 = Json::parse(R"({"variables":1,"rank":1,"anchor":[["1"]],"bracket":{}})");
    CHECK(presentation_from_json(w1)->rank() == 1);

    Json aff = Json::parse(
        R"({"variables":1,"rank":2,"anchor":[["1"],["x1"]],"bracket":{"2,1":["-1","0"]}})");
    auto p = presentation_from_json(aff);
    CHECK(p->bracket(0, 1)[0] == Poly::one(1));  // filled by antisymmetry

    // same data with the sign flipped: the anchor is no longer a Lie morphism
    Json bad = Json::parse(
        R"({"variables":1,"rank":2,"anchor":[["1"],["x1"]],"bracket":{"2,1":["1","0"]}})");
    CHECK_THROWS_WITH(presentation_from_json(bad),
                      Catch::Matchers::ContainsSubstring("anchor is not a Lie morphism"));

    Json mismatched = Json::parse(
        R"({"variables":1,"rank":2,"anchor":[["1"],["x1"]],
            "bracket":{"2,1":["-1","0"],"1,2":["-1","0"]}})");
    CHECK_THROWS_WITH(presentation_from_json(mismatched),
                      Catch::Matchers::ContainsSubstring("antisymmetry"));

    Json schema = Json::parse(R"({"variables":1,"rank":2,"anchor":[["1"]]})");
    CHECK_THROWS_AS(presentation_from_json(schema), ValidationError);
}

TEST_CASE("bracket examples") {
    auto w1 = make_fixture("W1");
    LElement x1 = LElement::basis(w1, 0);

    // antisymmetry on the diagonal
    LElement self = random_lelement(w1, *([] {
                        static std::mt19937_64 rng(1);
                        return &rng;
                    })());
    CHECK(bracket(self, self) == LElement::zero(w1));

    // [d/dx, x d/dx] = d/dx
    LElement x_times = lelement_scale(x1, Poly::variable(1, 1));
    CHECK(bracket(x1, x_times) == x1);

    auto aff = make_fixture("AFF");
    LElement a1 = LElement::basis(aff, 0), a2 = LElement::basis(aff, 1);
    LElement expect = LElement::zero(aff);
    expect.coeffs[0] = Poly::constant(1, Rational(-1));
    CHECK(bracket(a2, a1) == expect);
}

TEST_CASE("anchor_apply examples") {
    auto w1 = make_fixture("W1");
    CHECK(anchor_apply(LElement::basis(w1, 0), parse_poly("x1^2", 1)) ==
          parse_poly("2*x1", 1));

    auto aff = make_fixture("AFF");
    CHECK(anchor_apply(LElement::basis(aff, 1), Poly::variable(1, 1)) ==
          Poly::variable(1, 1));

    std::mt19937_64 rng(5);
    CHECK(anchor_apply(random_lelement(aff, rng), Poly::one(1)).is_zero());
}

TEST_CASE("Lie-Rinehart properties on random elements") {
    std::mt19937_64 rng(9);
    for (auto name : {"W1", "W2", "AFF"}) {
        auto p = make_fixture(name);
        for (int it = 0; it < 10; ++it) {
            LElement xi = random_lelement(p, rng);
            LElement eta = random_lelement(p, rng);
            LElement zeta = random_lelement(p, rng);
            Poly a = Poly::variable(p->vars(), 1) + Poly::constant(p->vars(), Rational(2));

            LElement jac = lelement_add(
                lelement_add(bracket(xi, bracket(eta, zeta)), bracket(eta, bracket(zeta, xi))),
                bracket(zeta, bracket(xi, eta)));
            CHECK(jac == LElement::zero(p));

            LElement lhs = bracket(xi, lelement_scale(eta, a));
            LElement rhs = lelement_add(lelement_scale(bracket(xi, eta), a),
                                        lelement_scale(eta, anchor_apply(xi, a)));
            CHECK(lhs == rhs);

            CHECK(anchor_apply(bracket(xi, eta), a) ==
                  anchor_apply(xi, anchor_apply(eta, a)) -
                      anchor_apply(eta, anchor_apply(xi, a)));
        }
    }
}
