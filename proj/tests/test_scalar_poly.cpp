#include "rinehart/expr.hpp"
#include "rinehart/poly.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace rinehart;

namespace {

Poly random_poly(int vars, std::mt19937_64& rng, int maxdeg = 3) {
    std::uniform_int_distribution<int> num(-4, 4);
    std::uniform_int_distribution<int> den(1, 3);
    std::uniform_int_distribution<int> keep(0, 2);
    Poly p(vars);
    for (auto& e : monomials_up_to(vars, maxdeg)) {
        if (keep(rng) == 0) continue;
        p.add_term(e, Rational(num(rng), den(rng)));
    }
    return p;
}

} // namespace

TEST_CASE("rational arithmetic is canonical") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-2, -4) == Rational(1, 2));
    CHECK((Rational(1, 2) + Rational(1, 3)).str() == "5/6");
    CHECK(Rational(3).str() == "3");
    CHECK(Rational(0).is_zero());
    CHECK_THROWS_AS(Rational(1, 0), Error);
}

TEST_CASE("poly_sum examples") {
    Poly x = Poly::variable(1, 1);
    CHECK((x + (-x)).is_zero());

    Poly p = parse_poly("x1^2 + 1", 1);
    CHECK(p + x == parse_poly("x1^2 + x1 + 1", 1));

    CHECK(parse_poly("1/2*x1", 1) + parse_poly("1/3*x1", 1) == parse_poly("5/6*x1", 1));
}

TEST_CASE("poly_product examples") {
    CHECK(parse_poly("(x1+1)*(x1-1)", 1) == parse_poly("x1^2 - 1", 1));

    std::mt19937_64 rng(7);
    Poly p = random_poly(2, rng);
    CHECK(p * Poly::one(2) == p);

    CHECK(parse_poly("(x1+x2)*(x1+x2)", 2) == parse_poly("x1^2 + 2*x1*x2 + x2^2", 2));
}

TEST_CASE("poly_derive examples") {
    Derivation ddx = Derivation::coordinate(1, 1);
    CHECK(ddx.apply(parse_poly("x1^3", 1)) == parse_poly("3*x1^2", 1));

    Derivation euler(std::vector<Poly>{Poly::variable(1, 1)});
    CHECK(euler.apply(Poly::variable(1, 1)) == Poly::variable(1, 1));

    std::mt19937_64 rng(11);
    Derivation d(std::vector<Poly>{random_poly(1, rng)});
    CHECK(d.apply(Poly::constant(1, Rational(5, 3))).is_zero());
}

TEST_CASE("variable-count mismatch is rejected") {
    CHECK_THROWS_AS(Poly::one(1) + Poly::one(2), Error);
    CHECK_THROWS_AS(Poly::one(1) * Poly::one(2), Error);
    CHECK_THROWS_AS(Derivation::coordinate(2, 1).apply(Poly::one(1)), Error);
}

TEST_CASE("ring axioms on random triples") {
    std::mt19937_64 rng(42);
    for (int it = 0; it < 40; ++it) {
        int vars = 1 + static_cast<int>(it % 2);
        Poly a = random_poly(vars, rng), b = random_poly(vars, rng), c = random_poly(vars, rng);
        CHECK(a + b == b + a);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * Poly::one(vars) == a);
        CHECK((a + Poly::zero(vars)) == a);
        CHECK((a - a).is_zero());
    }
}

TEST_CASE("Leibniz rule for derivations") {
    std::mt19937_64 rng(43);
    for (int it = 0; it < 25; ++it) {
        int vars = 2;
        Poly p = random_poly(vars, rng), q = random_poly(vars, rng);
        Derivation d(std::vector<Poly>{random_poly(vars, rng, 2), random_poly(vars, rng, 2)});
        CHECK(d.apply(p * q) == d.apply(p) * q + p * d.apply(q));
    }
}

TEST_CASE("parse_poly literal reading") {
    Poly p = parse_poly("3*x1^2 - 1/2", 1);
    CHECK(p.coeff(MultiIndex{2}) == Rational(3));
    CHECK(p.coeff(MultiIndex{0}) == Rational(-1, 2));

    CHECK(parse_poly("x1*x1", 1) == parse_poly("x1^2", 1));
    CHECK(render_poly(parse_poly("0*x1", 1)) == "0");
}

TEST_CASE("parse/render round-trip is the identity") {
    std::mt19937_64 rng(44);
    for (int it = 0; it < 40; ++it) {
        int vars = 1 + static_cast<int>(it % 3);
        Poly p = random_poly(vars, rng);
        CHECK(parse_poly(render_poly(p), vars) == p);
    }
}

TEST_CASE("render is deterministic, leading term first") {
    CHECK(render_poly(parse_poly("1 + x1 + x1^2", 1)) == "x1^2 + x1 + 1");
    CHECK(render_poly(parse_poly("-x1 - 1/2", 1)) == "-x1 - 1/2");
    CHECK(render_poly(parse_poly("x2 + x1", 2)) == "x1 + x2");
}

TEST_CASE("parse errors carry positions") {
    CHECK_THROWS_AS(parse_poly("x1 +", 1), ParseError);
    CHECK_THROWS_AS(parse_poly("x3", 2), ParseError);
    CHECK_THROWS_AS(parse_poly("x1^-2", 1), ParseError);
    CHECK_THROWS_AS(parse_poly("(x1", 1), ParseError);
    CHECK_THROWS_AS(parse_poly("X1", 1), ParseError);  // generators are not polynomials
    try {
        parse_poly("x1 + @", 1);
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.position == 5);
    }
}
