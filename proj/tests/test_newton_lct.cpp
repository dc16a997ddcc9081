#include "doctest.h"
#include "dpcert/error.hpp"
#include "dpcert/newton.hpp"

#include <random>

using namespace dpcert;

namespace {

BiPoly P(const char *s) { return parse_bipoly(s); }
Rational R(long n, long d = 1) { return Rational(n, d); }

// lct at the origin of prod (x - r_i y)^{e_i}: a homogeneous line arrangement
// of degree D has threshold min(2/D, 1/max e_i).
Rational line_arrangement_lct(const std::vector<int> &mults) {
    int D = 0, top = 0;
    for (int e : mults) {
        D += e;
        top = std::max(top, e);
    }
    return min(R(2, D), R(1, top));
}

} // namespace

TEST_CASE("newton polygon examples") {
    CHECK(newton_polygon(P("x^2 + y^3")).vertices == std::vector<Monomial2>{{0, 3}, {2, 0}});
    CHECK(newton_polygon(P("x^2 + x*y + y^3")).vertices ==
          std::vector<Monomial2>{{0, 3}, {1, 1}, {2, 0}});
    CHECK(newton_polygon(P("x*y")).vertices == std::vector<Monomial2>{{1, 1}});
    // Collinear and interior points are dropped; shifted points are dominated.
    CHECK(newton_polygon(P("y^4 + x*y^2 + x^2 + x^3*y^5 + x^4")).vertices ==
          std::vector<Monomial2>{{0, 4}, {2, 0}});
    CHECK_THROWS_AS(newton_polygon(BiPoly()), DomainError);
}

TEST_CASE("newton polygon supports every weighted leading form") {
    std::mt19937 rng(29);
    std::uniform_int_distribution<int> e(0, 7), c(-3, 3), w(1, 6);
    for (int i = 0; i < 200; ++i) {
        BiPoly f;
        for (int k = 0; k < 6; ++k)
            f.add_term({e(rng), e(rng)}, R(c(rng)));
        if (f.is_zero())
            continue;
        auto np = newton_polygon(f);
        for (std::size_t k = 0; k + 1 < np.vertices.size(); ++k) {
            CHECK(np.vertices[k].s < np.vertices[k + 1].s);
            CHECK(np.vertices[k].t > np.vertices[k + 1].t);
        }
        for (const auto &[m, coef] : f.terms())
            CHECK(np.contains(R(m.s), R(m.t)));
        Weight wt(w(rng), w(rng));
        long wmult = weighted_leading(f, wt).first;
        long best = 1L << 40;
        for (const auto &v : np.vertices)
            best = std::min(best, long(wt.wx) * v.s + long(wt.wy) * v.t);
        CHECK(best == wmult);
    }
}

TEST_CASE("diagonal crossing") {
    auto c1 = diagonal_crossing(newton_polygon(P("x*y")));
    CHECK(c1.kind == DiagonalCrossing::Kind::Vertex);
    CHECK(c1.vertex == Monomial2{1, 1});
    auto c2 = diagonal_crossing(newton_polygon(P("x^2 + y^3")));
    CHECK(c2.kind == DiagonalCrossing::Kind::Edge);
    CHECK(c2.edge_from == Monomial2{0, 3});
    CHECK(c2.edge_to == Monomial2{2, 0});
    CHECK(c2.weight == Weight(3, 2));
    auto c3 = diagonal_crossing(newton_polygon(P("x^3 + x*y + y^3")));
    CHECK(c3.kind == DiagonalCrossing::Kind::Vertex);
    CHECK(c3.vertex == Monomial2{1, 1});
    CHECK(diagonal_crossing(newton_polygon(P("x*y^3 + x^2*y^5"))).kind ==
          DiagonalCrossing::Kind::HorizontalRay);
    CHECK(diagonal_crossing(newton_polygon(P("x^4"))).kind == DiagonalCrossing::Kind::VerticalRay);
}

TEST_CASE("factor profile") {
    auto p1 = factor_profile(P("x") * pow(P("x + y^2"), 3), Weight(2, 1));
    CHECK(p1.a == 1);
    CHECK(p1.b == 0);
    CHECK(p1.multiplicities() == std::vector<int>{3});
    CHECK(p1.blocks[0].alpha == 1);
    CHECK(p1.max_multiplicity == 3);
    REQUIRE(p1.root.has_value());
    CHECK(*p1.root == R(-1));
    CHECK(p1.beta == 2);
    CHECK(shear(pow(P("x + y^2"), 3), *p1.shear_coefficient(), p1.beta) == P("x^3"));

    auto p2 = factor_profile(P("x^2*y^3"), Weight(1, 1));
    CHECK(p2.a == 2);
    CHECK(p2.b == 3);
    CHECK(p2.blocks.empty());

    auto p3 = factor_profile(pow(P("x^2 + y^3"), 2), Weight(3, 2));
    CHECK(p3.a == 0);
    CHECK(p3.b == 0);
    REQUIRE(p3.blocks.size() == 1);
    CHECK(p3.blocks[0].alpha == 2);
    CHECK(p3.blocks[0].multiplicity == 2);
    CHECK_FALSE(p3.root.has_value());

    CHECK_THROWS_AS(factor_profile(P("x^2 + y^3"), Weight(1, 1)), DomainError);
}

TEST_CASE("factor profile reconstructs the form up to a scalar") {
    std::mt19937 rng(31);
    std::uniform_int_distribution<int> r(-4, 4), e(1, 3), ab(0, 2);
    for (int i = 0; i < 60; ++i) {
        int beta = e(rng);
        BiPoly f = BiPoly::monomial({ab(rng), ab(rng)}, R(r(rng) == 0 ? 2 : -3));
        for (int k = 0; k < 3; ++k) {
            BiPoly lin = BiPoly::x() + BiPoly::monomial({0, beta}, R(r(rng), e(rng)));
            f *= pow(lin, e(rng));
        }
        Weight w(beta, 1);
        auto prof = factor_profile(f, w);
        // rebuild: x^a y^b prod block(x / y^beta)^mult homogenized
        BiPoly g = BiPoly::monomial({prof.a, prof.b});
        for (const auto &blk : prof.blocks) {
            BiPoly h;
            int deg = blk.squarefree.degree();
            for (int k = 0; k <= deg; ++k)
                h.add_term({k, beta * (deg - k)}, blk.squarefree.coeff(k));
            g *= pow(h, blk.multiplicity);
        }
        Monomial2 lead = f.terms().begin()->first;
        Rational scale = f.coefficient(lead) / g.coefficient(lead);
        CHECK(g * BiPoly(scale) == f);
    }
}

TEST_CASE("lct of weighted homogeneous germs") {
    auto b1 = lct_weighted_homog(P("x^2 + y^3"), Weight(3, 2));
    CHECK(b1.bound == R(5, 6));
    CHECK(b1.exact);
    auto b2 = lct_weighted_homog(P("x^3*y^5"), Weight(1, 1));
    CHECK(b2.bound == R(1, 5));
    CHECK(b2.exact);
    auto b3 = lct_weighted_homog(P("x") * pow(P("x + y"), 4), Weight(1, 1));
    CHECK(b3.bound == R(1, 4));
}

TEST_CASE("lct oracle corpus") {
    for (int a = 1; a <= 9; ++a) {
        auto b = lct_lower_bound(BiPoly::monomial({a, 0}), 100);
        CHECK(b.bound == R(1, a));
        CHECK(b.exact);
        for (int c = 1; c <= 9; ++c) {
            auto m = lct_lower_bound(BiPoly::monomial({a, c}), 100);
            CHECK(m.bound == min(R(1, a), R(1, c)));
            CHECK(m.exact);
            // Brieskorn-Pham x^a + y^c: min(1, 1/a + 1/c).
            auto bp = lct_lower_bound(BiPoly::monomial({a, 0}) + BiPoly::monomial({0, c}), 100);
            CHECK(bp.bound == min(R(1), R(1, a) + R(1, c)));
            CHECK(bp.exact);
        }
    }
    CHECK(lct_lower_bound(P("x^2 + y^3"), 10).bound == R(5, 6));
    CHECK(lct_lower_bound(P("x^2 + y^5"), 10).bound == R(7, 10));
    auto xy = lct_lower_bound(P("x*y"), 1);
    CHECK(xy.bound == R(1));
    CHECK(xy.exact);
    // y (x + y^2)^2: the doubled smooth branch dominates.
    auto db = lct_lower_bound(P("y") * pow(P("x + y^2"), 2), 10);
    CHECK(db.bound == lct_weighted_homog(P("y") * pow(P("x + y^2"), 2), Weight(2, 1)).bound);
    CHECK(db.bound == R(1, 2));
    CHECK(db.exact);
}

TEST_CASE("lct loop with shears") {
    auto b = lct_lower_bound(pow(P("x + y^2"), 10) + P("y^30"), 5);
    // after x + y^2 -> x the germ is x^10 + y^30 with threshold 1/10 + 1/30
    CHECK(b.bound == R(2, 15));
    CHECK(b.bound >= R(1, 10));
    CHECK(b.exact);
    REQUIRE(b.trace.size() == 2);
    CHECK(b.trace[0].action == "shear");
    CHECK(*b.trace[0].shear_A == R(1));
    CHECK(b.trace[0].shear_beta == 2);

    // slope -1 crossing: linear shear
    auto lin = lct_lower_bound(pow(P("x - y"), 5) + P("x^7"), 2);
    CHECK(lin.bound == R(12, 35));
    CHECK(lin.exact);
    CHECK(lin.trace[0].shear_beta == 1);

    // alpha >= 2, beta = 1: swap the variables first
    auto sw = lct_lower_bound(pow(P("y + x^2"), 4) + P("x^9"), 2);
    CHECK(sw.bound == R(13, 36));
    CHECK(sw.exact);
    CHECK(sw.trace[0].action == "swap");
    CHECK(sw.trace[1].action == "shear");

    // An irrational maximal factor comes with a conjugate of the same
    // multiplicity, so the pair is lc outside the origin and no shear is needed.
    auto st = lct_lower_bound(P("y^3") * pow(P("x^2 - 2*y^4"), 3) + P("x^40"), 1);
    CHECK(st.status == "converged");
    CHECK(st.exact);
    CHECK(st.bound == R(1, 5));
    auto conj = lct_lower_bound(pow(P("x^2 - 2*y^2"), 3) + P("y^7"), 2);
    CHECK(conj.exact);
    CHECK(conj.bound == R(1, 3));

    CHECK_THROWS_AS(lct_lower_bound(P("x + 1"), 3), DomainError);
    CHECK_THROWS_AS(lct_lower_bound(P("x"), 0), DomainError);
}

TEST_CASE("line arrangements match the closed form") {
    std::mt19937 rng(41);
    std::uniform_int_distribution<int> r(-6, 6), e(1, 5), n(1, 4);
    for (int i = 0; i < 80; ++i) {
        std::vector<Rational> roots;
        std::vector<int> mults;
        BiPoly f(R(1));
        int lines = n(rng);
        for (int k = 0; k < lines; ++k) {
            Rational root(r(rng), e(rng));
            if (std::find(roots.begin(), roots.end(), root) != roots.end())
                continue;
            roots.push_back(root);
            mults.push_back(e(rng));
            f *= pow(BiPoly::x() - BiPoly::monomial({0, 1}, root), mults.back());
        }
        auto b = lct_lower_bound(f, 1000);
        CHECK(b.bound == line_arrangement_lct(mults));
        CHECK(b.exact);
    }
}

TEST_CASE("certified bound never exceeds the weighted upper bound") {
    std::mt19937 rng(43);
    std::uniform_int_distribution<int> e(0, 6), c(-3, 3), w(1, 5), th(1, 6);
    int checked = 0;
    for (int i = 0; i < 300; ++i) {
        BiPoly f;
        for (int k = 0; k < 5; ++k)
            f.add_term({e(rng), e(rng)}, R(c(rng)));
        f.add_term({0, 0}, -f.coefficient({0, 0}));
        if (f.is_zero())
            continue;
        auto b = lct_lower_bound(f, th(rng));
        CHECK(b.bound > R(0));
        for (int k = 0; k < 5; ++k) {
            Weight wt(w(rng), w(rng));
            long wm = weighted_leading(f, wt).first;
            CHECK(b.bound <= Rational(Integer(wt.wx + wt.wy), Integer(wm)));
        }
        ++checked;
    }
    CHECK(checked > 200);
}

TEST_CASE("adding factors cannot raise an exact bound") {
    std::mt19937 rng(47);
    std::uniform_int_distribution<int> r(-5, 5), e(1, 4);
    for (int i = 0; i < 60; ++i) {
        BiPoly f = pow(P("x") - BiPoly::monomial({0, e(rng)}, R(r(rng))), e(rng));
        BiPoly g = pow(P("y") - BiPoly::monomial({e(rng), 0}, R(r(rng))), e(rng)) *
                   BiPoly::monomial({e(rng) - 1, 0});
        auto bf = lct_lower_bound(f, 100);
        auto bfg = lct_lower_bound(f * g, 100);
        REQUIRE(bf.exact);
        CHECK(bfg.bound <= bf.bound);
    }
}

TEST_CASE("shear chains: slopes increase, stage bounds never drop, loops bounded") {
    std::mt19937 rng(53);
    std::uniform_int_distribution<int> r(-3, 3), e(2, 4);
    for (int i = 0; i < 60; ++i) {
        // nested smooth branches: x + a y^2 + b y^3 + ... with high multiplicity
        BiPoly branch = P("x");
        for (int k = 2; k <= 5; ++k)
            branch += BiPoly::monomial({0, k}, R(r(rng)));
        int c = e(rng) + 3;
        BiPoly f = pow(branch, c) + BiPoly::monomial({0, 7 * c + 1}) + BiPoly::monomial({c + 1, 0});
        int T = c * 8;
        LctOptions opt;
        opt.anchor = T;
        auto b = lct_lower_bound(f, 1, opt);
        int shears = 0;
        Rational prev_slope(0);
        for (std::size_t k = 0; k < b.trace.size(); ++k) {
            const auto &rec = b.trace[k];
            if (k > 0)
                CHECK(rec.stage_bound >= b.trace[k - 1].stage_bound);
            if (rec.crossing == "edge") {
                Rational slope(Integer(rec.weight.wx), Integer(rec.weight.wy));
                CHECK(slope > prev_slope);
                prev_slope = slope;
            }
            if (rec.action == "shear")
                ++shears;
        }
        CHECK(shears <= T);
        CHECK(b.status == "converged");
    }
}

TEST_CASE("product anchor") {
    std::vector<Monomial2> cubic;
    for (int d = 0; d <= 3; ++d)
        for (int s = 0; s <= d; ++s)
            cubic.push_back({s, d - s});
    CHECK(product_anchor(cubic) == Monomial2{10, 10});
    CHECK(product_anchor({{1, 0}, {0, 1}}) == Monomial2{1, 1});
    std::vector<Monomial2> quad;
    for (int d = 0; d <= 2; ++d)
        for (int s = 0; s <= d; ++s)
            quad.push_back({s, d - s});
    CHECK(product_anchor(quad) == Monomial2{4, 4});
    CHECK_THROWS_AS(product_anchor({}), DomainError);

    BiPoly prod(R(1));
    for (const auto &m : cubic)
        prod *= BiPoly::monomial(m);
    auto b = lct_lower_bound(prod, 10);
    CHECK(b.bound == R(1, 10));
    CHECK(b.exact);
}
