#include "rinehart/enveloping.hpp"
#include "rinehart/fixtures.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <random>
#include <set>
#include <tuple>

using namespace rinehart;

namespace {

EnvElement random_env(const PresentationPtr& p, std::mt19937_64& rng, int maxdeg = 2) {
    std::uniform_int_distribution<int> num(-2, 2);
    std::uniform_int_distribution<int> keep(0, 1);
    EnvElement u = EnvElement::zero(p);
    for (auto& alpha : monomials_up_to(p->rank(), maxdeg)) {
        if (keep(rng)) continue;
        Poly c(p->vars());
        for (auto& e : monomials_up_to(p->vars(), 1)) c.add_term(e, Rational(num(rng)));
        u += EnvElement::monomial(p, alpha, c);
    }
    return u;
}

} // namespace

TEST_CASE("lmul_coeff rewriting") {
    auto w1 = make_fixture("W1");
    Poly x = Poly::variable(1, 1);
    EnvElement X1 = EnvElement::generator(w1, 0);

    CHECK(lmul_coeff(x, X1) == parse_env("X1*x1 - 1", w1));
    std::mt19937_64 rng(3);
    EnvElement u = random_env(w1, rng);
    CHECK(lmul_coeff(Poly::one(1), u) == u);
    CHECK(lmul_coeff(x, X1 * X1) == parse_env("X1^2*x1 - 2*X1", w1));
}

TEST_CASE("env_mul rewriting") {
    auto w1 = make_fixture("W1");
    Poly x = Poly::variable(1, 1);
    EnvElement X1 = EnvElement::generator(w1, 0);
    CHECK(EnvElement::coefficient(w1, x) * X1 == parse_env("X1*x1 - 1", w1));

    auto aff = make_fixture("AFF");
    CHECK(parse_env("X2*X1", aff) == parse_env("X1*X2 - X1", aff));

    std::mt19937_64 rng(4);
    EnvElement u = random_env(aff, rng);
    CHECK(u * EnvElement::one(aff) == u);
    CHECK(EnvElement::one(aff) * u == u);
}

TEST_CASE("env_mul associativity on random triples") {
    std::mt19937_64 rng(5);
    for (auto name : {"W1", "AFF", "W2"}) {
        auto p = make_fixture(name);
        for (int it = 0; it < 6; ++it) {
            EnvElement a = random_env(p, rng), b = random_env(p, rng), c = random_env(p, rng);
            CHECK((a * b) * c == a * (b * c));
        }
    }
}

TEST_CASE("counit examples and counit law") {
    auto w1 = make_fixture("W1");
    Poly x = Poly::variable(1, 1);
    CHECK(counit_env(EnvElement::coefficient(w1, x)) == x);
    CHECK(counit_env(EnvElement::monomial(w1, MultiIndex{3})).is_zero());
    CHECK(counit_env(lmul_coeff(x, EnvElement::generator(w1, 0))) ==
          Poly::constant(1, Rational(-1)));

    std::mt19937_64 rng(6);
    for (auto name : {"W1", "AFF"}) {
        auto p = make_fixture(name);
        for (int it = 0; it < 10; ++it) {
            EnvElement u = random_env(p, rng), v = random_env(p, rng);
            CHECK(counit_env(u * v) ==
                  counit_env(lmul_coeff(counit_env(u), v)));
        }
    }
}

TEST_CASE("coproduct examples") {
    auto w1 = make_fixture("W1");
    EnvElement X1 = EnvElement::generator(w1, 0);

    TensorElement d = coprod_env(X1);
    TensorElement expect(w1, TensorFlavor::Coprod);
    expect.add_term(MultiIndex{1}, MultiIndex{0}, Poly::one(1));
    expect.add_term(MultiIndex{0}, MultiIndex{1}, Poly::one(1));
    CHECK(d == expect);

    Poly a = parse_poly("x1^2 - 2", 1);
    TensorElement da = coprod_env(EnvElement::coefficient(w1, a));
    TensorElement expa(w1, TensorFlavor::Coprod);
    expa.add_term(MultiIndex{0}, MultiIndex{0}, a);
    CHECK(da == expa);

    TensorElement d2 = coprod_env(X1 * X1);
    TensorElement exp2(w1, TensorFlavor::Coprod);
    exp2.add_term(MultiIndex{2}, MultiIndex{0}, Poly::one(1));
    exp2.add_term(MultiIndex{1}, MultiIndex{1}, Poly::constant(1, Rational(2)));
    exp2.add_term(MultiIndex{0}, MultiIndex{2}, Poly::one(1));
    CHECK(d2 == exp2);
}

TEST_CASE("coassociativity and counitality of the coproduct") {
    for (auto name : {"W1", "AFF"}) {
        auto p = make_fixture(name);
        for (auto& alpha : monomials_up_to(p->rank(), 5)) {
            EnvElement u = EnvElement::monomial(p, alpha);
            TensorElement d = coprod_env(u);
            // counitality on both legs
            EnvElement left = EnvElement::zero(p), right = EnvElement::zero(p);
            for (auto& [key, c] : d.terms()) {
                if (mi_degree(key.first) == 0)
                    right += EnvElement::monomial(p, key.second, c);
                if (mi_degree(key.second) == 0)
                    left += EnvElement::monomial(p, key.first, c);
            }
            CHECK(left == u);
            CHECK(right == u);
            // coassociativity via the binomial form: both iterated splits
            // give multinomials; compare (Delta x id) and (id x Delta)
            std::map<std::tuple<MultiIndex, MultiIndex, MultiIndex>, Poly> t1, t2;
            for (auto& [key, c] : d.terms()) {
                TensorElement dl = coprod_env(EnvElement::monomial(p, key.first, c));
                for (auto& [k2, c2] : dl.terms()) {
                    auto key3 = std::make_tuple(k2.first, k2.second, key.second);
                    auto [it, ins] = t1.emplace(key3, c2);
                    if (!ins) it->second += c2;
                }
                TensorElement dr = coprod_env(EnvElement::monomial(p, key.second, c));
                for (auto& [k2, c2] : dr.terms()) {
                    auto key3 = std::make_tuple(key.first, k2.first, k2.second);
                    auto [it, ins] = t2.emplace(key3, c2);
                    if (!ins) it->second += c2;
                }
            }
            for (auto& [k, v] : t2) {
                auto [it, ins] = t1.emplace(k, -v);
                if (!ins) it->second -= v;
            }
            bool zero = true;
            for (auto& [k, v] : t1)
                if (!v.is_zero()) zero = false;
            CHECK(zero);
        }
    }
}

TEST_CASE("coproduct image lies in the Takeuchi centralizer") {
    std::mt19937_64 rng(8);
    for (auto name : {"W1", "AFF"}) {
        auto p = make_fixture(name);
        Poly a = Poly::variable(p->vars(), 1);
        for (int it = 0; it < 8; ++it) {
            EnvElement u = random_env(p, rng);
            TensorElement d = coprod_env(u);
            CHECK(tensor_lmul_leg(d, a, 1) == tensor_lmul_leg(d, a, 2));
        }
    }
}

TEST_CASE("translation map examples") {
    auto w1 = make_fixture("W1");
    EnvElement X1 = EnvElement::generator(w1, 0);

    TensorElement d = translate(X1);
    TensorElement expect(w1, TensorFlavor::Translate);
    expect.add_term(MultiIndex{0}, MultiIndex{1}, Poly::one(1));
    expect.add_term(MultiIndex{1}, MultiIndex{0}, Poly::constant(1, Rational(-1)));
    CHECK(d == expect);

    Poly a = parse_poly("2*x1 + 1", 1);
    TensorElement da = translate(EnvElement::coefficient(w1, a));
    TensorElement expa(w1, TensorFlavor::Translate);
    expa.add_term(MultiIndex{0}, MultiIndex{0}, a);
    CHECK(da == expa);

    TensorElement d2 = translate(X1 * X1);
    TensorElement exp2(w1, TensorFlavor::Translate);
    exp2.add_term(MultiIndex{0}, MultiIndex{2}, Poly::one(1));
    exp2.add_term(MultiIndex{1}, MultiIndex{1}, Poly::constant(1, Rational(-2)));
    exp2.add_term(MultiIndex{2}, MultiIndex{0}, Poly::one(1));
    CHECK(d2 == exp2);
}

TEST_CASE("beta examples and invertibility") {
    auto w1 = make_fixture("W1");
    EnvElement X1 = EnvElement::generator(w1, 0);

    TensorElement b = beta_map(translate(X1));
    TensorElement expect(w1, TensorFlavor::Coprod);
    expect.add_term(MultiIndex{0}, MultiIndex{1}, Poly::one(1));
    CHECK(b == expect);

    std::mt19937_64 rng(10);
    EnvElement u = random_env(w1, rng);
    TensorElement u1(w1, TensorFlavor::Translate);
    for (auto& [alpha, c] : u.terms()) u1.add_term(alpha, mi_zero(1), c);
    CHECK(beta_map(u1).terms() == u1.terms());  // beta(u (x) 1) = u (x) 1

    for (auto name : {"W1", "AFF"}) {
        auto p = make_fixture(name);
        for (auto& alpha : monomials_up_to(p->rank(), 4))
            for (auto& betam : monomials_up_to(p->rank(), 4)) {
                if (mi_degree(alpha) + mi_degree(betam) > 4) continue;
                TensorElement t(p, TensorFlavor::Translate);
                t.add_term(alpha, betam, p->poly_one());
                CHECK(beta_inv(beta_map(t)) == t);
                TensorElement s(p, TensorFlavor::Coprod);
                s.add_term(alpha, betam, p->poly_one());
                CHECK(beta_map(beta_inv(s)) == s);
            }
    }
}

TEST_CASE("Schauenburg identities on monomials of degree <= 5") {
    for (auto name : {"W1", "AFF"}) {
        auto p = make_fixture(name);
        for (auto& alpha : monomials_up_to(p->rank(), 5)) {
            EnvElement u = EnvElement::monomial(p, alpha);
            TensorElement du = translate(u);

            // B4: u_- u_+1 (x) u_+2 = 1 (x) u      (coprod flavor)
            TensorElement b4(p, TensorFlavor::Coprod);
            for (auto& [key, c] : du.terms()) {
                TensorElement inner = coprod_env(EnvElement::monomial(p, key.second, c));
                for (auto& [k2, c2] : inner.terms()) {
                    EnvTerms leg2;
                    leg2.emplace(k2.second, c2);
                    b4.add_product(detail::monomial_mul(*p, key.first, k2.first), leg2);
                }
            }
            TensorElement b4want(p, TensorFlavor::Coprod);
            b4want.add_term(mi_zero(p->rank()), alpha, p->poly_one());
            CHECK(b4 == b4want);

            // B555: u_- u_+ = iota_A(eps(u))
            EnvElement collapse = EnvElement::zero(p);
            for (auto& [key, c] : du.terms())
                collapse += EnvElement(p, detail::monomial_mul(*p, key.first, key.second)) * c;
            CHECK(collapse == EnvElement::coefficient(p, counit_env(u)));

            // B5: u_1- (x) u_1+ (x) u_2 = u_- (x) u_+1 (x) u_+2
            // (legs 1-2 translate-balanced, legs 2-3 right-balanced)
            std::map<std::tuple<MultiIndex, MultiIndex, MultiIndex>, Poly> lhs5, rhs5;
            auto add3 = [](auto& m, const MultiIndex& a, const MultiIndex& b,
                           const MultiIndex& c, const Poly& v) {
                if (v.is_zero()) return;
                auto key = std::make_tuple(a, b, c);
                auto [it, ins] = m.emplace(key, v);
                if (!ins) {
                    it->second += v;
                    if (it->second.is_zero()) m.erase(it);
                }
            };
            for (auto& [key, c] : coprod_env(u).terms()) {
                for (auto& [k2, c2] : translate(EnvElement::monomial(p, key.first)).terms())
                    add3(lhs5, k2.first, k2.second, key.second, c2 * c);
            }
            for (auto& [key, c] : du.terms()) {
                for (auto& [k2, c2] :
                     coprod_env(EnvElement::monomial(p, key.second, c)).terms())
                    add3(rhs5, key.first, k2.first, k2.second, c2);
            }
            CHECK(lhs5 == rhs5);

            // B55: u_+- (x) u_- (x) u_++ = u_-1 (x) u_-2 (x) u_+
            std::map<std::tuple<MultiIndex, MultiIndex, MultiIndex>, Poly> lhs55, rhs55;
            for (auto& [key, c] : du.terms()) {
                for (auto& [k2, c2] :
                     translate(EnvElement::monomial(p, key.second, c)).terms())
                    add3(lhs55, k2.first, key.first, k2.second, c2);
            }
            for (auto& [key, c] : du.terms()) {
                for (auto& [k2, c2] : coprod_env(EnvElement::monomial(p, key.first)).terms())
                    add3(rhs55, k2.first, k2.second, key.second, c2 * c);
            }
            CHECK(lhs55 == rhs55);
        }

        // B66: delta(uv) = v_- u_- (x) u_+ v_+ on monomial pairs
        for (auto& alpha : monomials_up_to(p->rank(), 3))
            for (auto& betam : monomials_up_to(p->rank(), 3)) {
                if (mi_degree(alpha) + mi_degree(betam) > 5) continue;
                EnvElement u = EnvElement::monomial(p, alpha);
                EnvElement v = EnvElement::monomial(p, betam);
                CHECK(translate(u * v) == tensor_mul_twisted(translate(v), translate(u)));
            }

        // B6: delta(iota_A(a)) = 1 (x) 1 . a
        Poly a = parse_poly("x1^2 - 3*x1", 1);
        if (p->vars() >= 1) {
            TensorElement d = translate(EnvElement::coefficient(p, Poly(a)));
            TensorElement want(p, TensorFlavor::Translate);
            want.add_term(mi_zero(p->rank()), mi_zero(p->rank()), Poly(a));
            CHECK(d == want);
        }
    }
}

TEST_CASE("filtration properties") {
    std::mt19937_64 rng(12);
    for (auto name : {"W1", "AFF"}) {
        auto p = make_fixture(name);
        for (int it = 0; it < 20; ++it) {
            EnvElement u = random_env(p, rng), v = random_env(p, rng);
            if (u.is_zero() || v.is_zero()) continue;
            CHECK((u * v).degree() <= u.degree() + v.degree());
            CHECK(coprod_env(u).level() <= u.degree());
            CHECK(translate(u).level() <= u.degree());
        }
    }
}

TEST_CASE("truncate_theta and dual basis") {
    auto w1 = make_fixture("W1");
    EnvElement u = parse_env("X1^2 + X1*x1 + 1", w1);
    CHECK(truncate_theta(u, 1) == parse_env("X1*x1 + 1", w1));
    CHECK(truncate_theta(u, u.degree()) == u);
    CHECK(truncate_theta(parse_env("X1^3", w1), 2).is_zero());

    auto basis = dual_basis(w1, 2);
    REQUIRE(basis.size() == 3);
    CHECK(basis[0] == MultiIndex{0});
    CHECK(basis[1] == MultiIndex{1});
    CHECK(basis[2] == MultiIndex{2});

    // lambda_alpha reads the coefficient: sum X^alpha lambda_alpha(u) = u
    std::mt19937_64 rng(13);
    EnvElement v = random_env(w1, rng);
    EnvElement rebuilt = EnvElement::zero(w1);
    for (auto& alpha : dual_basis(w1, v.degree() < 0 ? 0 : v.degree()))
        rebuilt += EnvElement::monomial(w1, alpha, v.coeff(alpha));
    CHECK(rebuilt == v);

    auto aff = make_fixture("AFF");
    CHECK(dual_basis(aff, 1).size() == 3);
}

TEST_CASE("gr ranks match symmetric algebra dimensions") {
    for (auto name : {"W1", "W2", "AFF"}) {
        auto p = make_fixture(name);
        const int r = p->rank();
        for (int n = 1; n <= 5; ++n) {
            // every length-n generator word reduces with leading term the
            // sorted monomial, so the top-degree classes span gr^n
            auto word_product = [&](const std::vector<int>& gens) {
                EnvElement u = EnvElement::one(p);
                for (int g : gens) u = u * EnvElement::generator(p, g);
                return u;
            };
            // enumerate all r^n words
            int total = 1;
            for (int i = 0; i < n; ++i) total *= r;
            std::set<MultiIndex> tops;
            for (int w = 0; w < total; ++w) {
                int acc = w;
                std::vector<int> gens;
                MultiIndex sorted = mi_zero(r);
                for (int i = 0; i < n; ++i) {
                    gens.push_back(acc % r);
                    sorted[acc % r] += 1;
                    acc /= r;
                }
                EnvElement u = word_product(gens);
                EnvElement top = u - truncate_theta(u, n - 1);
                CHECK(top == EnvElement::monomial(p, sorted));
                tops.insert(sorted);
            }
            CHECK(tops.size() == monomials_of_degree(r, n).size());
        }
    }
}

TEST_CASE("element rendering matches the grammar") {
    auto w1 = make_fixture("W1");
    CHECK(render_env(parse_env("x1*X1", w1)) == "X1*x1 - 1");
    CHECK(render_env(EnvElement::zero(w1)) == "0");
    CHECK(render_env(parse_env("X1^2*(3*x1) + X2 - 1/2", make_fixture("AFF"))) ==
          "X1^2*3*x1 + X2 - 1/2");

    std::mt19937_64 rng(14);
    for (auto name : {"W1", "AFF"}) {
        auto p = make_fixture(name);
        for (int it = 0; it < 10; ++it) {
            EnvElement u = random_env(p, rng);
            CHECK(parse_env(render_env(u), p) == u);
        }
    }
}

TEST_CASE("tensor rendering") {
    auto w1 = make_fixture("W1");
    CHECK(render_tensor(translate(parse_env("X1^2", w1))) ==
          "1\xE2\x8A\x97X1^2 - 2*X1\xE2\x8A\x97X1 + X1^2\xE2\x8A\x97" "1");
}
