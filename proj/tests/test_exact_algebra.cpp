#include "doctest.h"
#include "dpcert/error.hpp"
#include "dpcert/polynomial.hpp"

#include <random>

using namespace dpcert;

namespace {

BiPoly P(const char *s) { return parse_bipoly(s); }

BiPoly random_poly(std::mt19937 &rng, int max_deg, int terms) {
    std::uniform_int_distribution<int> deg(0, max_deg), num(-5, 5), den(1, 3);
    BiPoly p;
    for (int i = 0; i < terms; ++i) {
        int s = deg(rng), t = deg(rng);
        p.add_term({s, t}, Rational(num(rng), den(rng)));
    }
    return p;
}

} // namespace

TEST_CASE("rational basics") {
    CHECK(Rational(6, -4).str() == "-3/2");
    CHECK(Rational(4, 2).str() == "2");
    CHECK(Rational::parse("10/4") == Rational(5, 2));
    CHECK(Rational::parse("-7") == Rational(-7));
    CHECK_THROWS_AS(Rational::parse("1/0"), ParseError);
    CHECK_THROWS_AS(Rational::parse("a"), ParseError);
    CHECK(Rational(15, 14).decimal(4) == "1.0714");
    CHECK(Rational(-1, 3).decimal(2) == "-0.33");
    CHECK(Rational(7, 2).floor() == 3);
    CHECK(Rational(-7, 2).floor() == -4);
    CHECK(Rational(-7, 2).ceil() == -3);
    CHECK(Rational(1, 3) < Rational(1, 2));
}

TEST_CASE("parse_bipoly examples") {
    BiPoly a = P("x^2*y + 3");
    CHECK(a.size() == 2);
    CHECK(a.coefficient({2, 1}) == Rational(1));
    CHECK(a.coefficient({0, 0}) == Rational(3));

    BiPoly b = P("1/2*y^3 - x");
    CHECK(b.size() == 2);
    CHECK(b.coefficient({0, 3}) == Rational(1, 2));
    CHECK(b.coefficient({1, 0}) == Rational(-1));

    CHECK(P("x - x").is_zero());
    CHECK(P(" - x y ") == -(BiPoly::x() * BiPoly::y()));
    CHECK(P("3*x*y^2") == BiPoly::monomial({1, 2}, Rational(3)));
}

TEST_CASE("parse_bipoly errors carry positions") {
    try {
        P("x^-2");
        FAIL("expected error");
    } catch (const ParseError &e) {
        CHECK(std::string(e.what()).find("negative exponent") != std::string::npos);
        CHECK(e.position() == 2);
    }
    CHECK_THROWS_AS(P("x +"), ParseError);
    CHECK_THROWS_AS(P("2*"), ParseError);
    CHECK_THROWS_AS(P("x y z"), ParseError);
    CHECK_THROWS_AS(P(""), ParseError);
    CHECK_THROWS_AS(P("1/0*x"), ParseError);
}

TEST_CASE("printing round-trips through the parser") {
    std::mt19937 rng(7);
    for (int i = 0; i < 50; ++i) {
        BiPoly p = random_poly(rng, 5, 6);
        CHECK(P(p.str().c_str()) == p);
    }
    CHECK(BiPoly().str() == "0");
    CHECK(P("x^2 - 2*x*y + 1/3").str() == "x^2 - 2*x*y + 1/3");
}

TEST_CASE("ring axioms on random triples") {
    std::mt19937 rng(11);
    for (int i = 0; i < 40; ++i) {
        BiPoly a = random_poly(rng, 4, 4), b = random_poly(rng, 4, 4), c = random_poly(rng, 4, 4);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        CHECK((a - a).is_zero());
    }
}

TEST_CASE("weighted_leading examples and multiplicativity") {
    auto [w1, f1] = weighted_leading(P("x^2 + y^3"), Weight(3, 2));
    CHECK(w1 == 6);
    CHECK(f1 == P("x^2 + y^3"));
    auto [w2, f2] = weighted_leading(P("x^2 + y^3"), Weight(1, 1));
    CHECK(w2 == 2);
    CHECK(f2 == P("x^2"));
    auto [w3, f3] = weighted_leading(P("x*y + x^3 + y^5"), Weight(2, 1));
    CHECK(w3 == 3);
    CHECK(f3 == P("x*y"));
    CHECK_THROWS_AS(weighted_leading(BiPoly(), Weight(1, 1)), DomainError);
    CHECK(Weight(4, 6) == Weight(2, 3));

    std::mt19937 rng(5);
    std::uniform_int_distribution<int> wd(1, 5);
    for (int i = 0; i < 60; ++i) {
        BiPoly a = random_poly(rng, 5, 5), b = random_poly(rng, 5, 5);
        if (a.is_zero() || b.is_zero())
            continue;
        Weight w(wd(rng), wd(rng));
        auto [wa, fa] = weighted_leading(a, w);
        auto [wb, fb] = weighted_leading(b, w);
        auto [wab, fab] = weighted_leading(a * b, w);
        CHECK(wab == wa + wb);
        CHECK(fab == fa * fb);
    }
}

TEST_CASE("shear") {
    CHECK(shear(P("x"), Rational(1), 2) == P("x - y^2"));
    // f(x - A y^2, y) with A = 1 removes the +y^2.
    CHECK(shear(pow(P("x + y^2"), 2), Rational(1), 2) == P("x^2"));
    CHECK(shear(P("x^2 + y^3"), Rational(1), 1) == P("x^2 - 2*x*y + y^2 + y^3"));
    CHECK_THROWS_AS(shear(P("x"), Rational(1), 0), DomainError);

    std::mt19937 rng(3);
    std::uniform_int_distribution<int> num(-4, 4), bd(1, 4);
    for (int i = 0; i < 40; ++i) {
        BiPoly f = random_poly(rng, 4, 5);
        Rational A(num(rng), bd(rng));
        int beta = bd(rng);
        BiPoly g = shear(f, A, beta);
        CHECK(shear(g, -A, beta) == f);
        CHECK(g.degree_x() == f.degree_x());
        Rational a(num(rng), 3), b(num(rng), 2);
        CHECK(g.eval(a, b) == f.eval(a - A * pow(b, beta), b));
    }
}

TEST_CASE("monomial orders") {
    auto xy = monomials_up_to(MonomialOrder::GrlexXY, 2);
    std::vector<Monomial2> want{{0, 0}, {1, 0}, {0, 1}, {2, 0}, {1, 1}, {0, 2}};
    CHECK(xy == want);
    auto yx = monomials_up_to(MonomialOrder::GrlexYX, 2);
    std::vector<Monomial2> want_yx{{0, 0}, {0, 1}, {1, 0}, {0, 2}, {1, 1}, {2, 0}};
    CHECK(yx == want_yx);
    CHECK(precedes(MonomialOrder::GrlexXY, {2, 1}, {1, 2}));
    CHECK(precedes(MonomialOrder::GrlexYX, {1, 2}, {2, 1}));

    for (auto order : {MonomialOrder::GrlexXY, MonomialOrder::GrlexYX, MonomialOrder::DiagonalFirst}) {
        auto all = monomials_up_to(order, 20);
        for (std::size_t i = 0; i < all.size(); ++i)
            for (std::size_t j = 0; j < all.size(); ++j) {
                bool ab = precedes(order, all[i], all[j]);
                bool ba = precedes(order, all[j], all[i]);
                if (i == j) {
                    CHECK_FALSE(ab);
                } else {
                    CHECK(ab != ba);
                    if (all[i].degree() < all[j].degree())
                        CHECK(ab);
                }
            }
    }
    // The two properties required of the diagonal-first order.
    auto diag = monomials_up_to(MonomialOrder::DiagonalFirst, 20);
    for (const auto &a : diag)
        for (const auto &b : diag) {
            if (a.s == a.t && b.s != b.t && b.degree() == a.degree())
                CHECK(precedes(MonomialOrder::DiagonalFirst, a, b));
        }
    CHECK(parse_order("diag") == MonomialOrder::DiagonalFirst);
    CHECK_FALSE(parse_order("lex").has_value());
}

TEST_CASE("squarefree decomposition") {
    UniPoly u({Rational(0), Rational(1)});
    UniPoly um1({Rational(-1), Rational(1)});
    auto d1 = squarefree_decomposition(u * u * um1);
    REQUIRE(d1.size() == 2);
    CHECK(d1[0].factor == um1);
    CHECK(d1[0].multiplicity == 1);
    CHECK(d1[1].factor == u);
    CHECK(d1[1].multiplicity == 2);

    auto d2 = squarefree_decomposition(pow(u, 3));
    REQUIRE(d2.size() == 1);
    CHECK(d2[0].factor == u);
    CHECK(d2[0].multiplicity == 3);

    // u^4 - 2u^3 + u^2 = (u(u-1))^2
    auto d3 = squarefree_decomposition(UniPoly({0, 0, 1, -2, 1}));
    REQUIRE(d3.size() == 1);
    CHECK(d3[0].factor == u * um1);
    CHECK(d3[0].multiplicity == 2);
    CHECK_THROWS_AS(squarefree_decomposition(UniPoly()), DomainError);

    std::mt19937 rng(17);
    std::uniform_int_distribution<int> r(-6, 6), e(1, 4);
    for (int i = 0; i < 40; ++i) {
        UniPoly p({Rational(e(rng))});
        for (int k = 0; k < 3; ++k)
            p = p * pow(UniPoly({Rational(r(rng), 2), Rational(1)}), e(rng));
        p = p * UniPoly({1, 0, 1}); // irreducible u^2 + 1
        auto dec = squarefree_decomposition(p);
        UniPoly prod({p.leading()});
        for (std::size_t k = 0; k < dec.size(); ++k) {
            prod = prod * pow(dec[k].factor, dec[k].multiplicity);
            CHECK(gcd(dec[k].factor, dec[k].factor.derivative()).degree() == 0);
            for (std::size_t j = k + 1; j < dec.size(); ++j) {
                CHECK(gcd(dec[k].factor, dec[j].factor).degree() == 0);
                CHECK(dec[k].multiplicity < dec[j].multiplicity);
            }
        }
        CHECK(prod == p);
    }
}

TEST_CASE("rational roots") {
    std::mt19937 rng(23);
    std::uniform_int_distribution<int> n(-9, 9), d(1, 7);
    for (int i = 0; i < 60; ++i) {
        std::vector<Rational> roots;
        for (int k = 0; k < 3; ++k)
            roots.push_back(Rational(n(rng), d(rng)));
        UniPoly p = UniPoly::from_roots(roots) * UniPoly({-2, 0, 1}) * Rational(n(rng) == 0 ? 5 : 3, 7);
        std::sort(roots.begin(), roots.end());
        roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
        CHECK(rational_roots(p) == roots);
    }
    CHECK(rational_roots(UniPoly({1, 0, 1})).empty());
    CHECK(rational_roots(UniPoly({-2, 0, 1})).empty());
    CHECK(rational_roots(UniPoly({3, 2})) == std::vector<Rational>{Rational(-3, 2)});
}
