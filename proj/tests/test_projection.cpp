#include "doctest.h"
#include "dpcert/projection.hpp"

#include <functional>
#include <random>

using namespace dpcert;

namespace {

Rational R(long n, long d = 1) { return Rational(n, d); }
Point pt(long s, long t) { return {R(s), R(t)}; }

// Solves a square system exactly; false when singular.
bool solve(std::vector<std::vector<Rational>> a, std::vector<Rational> b, std::vector<Rational> &x) {
    std::size_t n = a.size();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && a[piv][c].is_zero())
            ++piv;
        if (piv == n)
            return false;
        std::swap(a[c], a[piv]);
        std::swap(b[c], b[piv]);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || a[r][c].is_zero())
                continue;
            Rational k = a[r][c] / a[c][c];
            for (std::size_t j = c; j < n; ++j)
                a[r][j] -= k * a[c][j];
            b[r] -= k * b[c];
        }
    }
    x.resize(n);
    for (std::size_t i = 0; i < n; ++i)
        x[i] = b[i] / a[i][i];
    return true;
}

// Vertex enumeration of the lifted polyhedron in (vars, s, t) at fixed m,
// followed by the hull of the projected vertices.
Polygon oracle_projection(const ConstraintSystem &sys, long m) {
    std::size_t n = sys.variables.size(), D = n + 2;
    std::vector<std::vector<Rational>> A; // A x + k >= 0
    std::vector<Rational> K;
    auto add = [&](const LinExpr &e, int s_coef, int t_coef) {
        std::vector<Rational> row(D);
        for (std::size_t i = 0; i < n; ++i) {
            auto it = e.coeffs.find(sys.variables[i]);
            if (it != e.coeffs.end())
                row[i] = it->second;
        }
        row[n] = R(s_coef);
        row[n + 1] = R(t_coef);
        A.push_back(row);
        K.push_back(e.constant.at(m));
    };
    for (const auto &e : sys.inequalities)
        add(e, 0, 0);
    for (const auto &v : sys.variables)
        add(LinExpr::parse(v), 0, 0);
    for (int sign : {1, -1}) {
        add(sys.s_expr * R(-sign), sign, 0);
        add(sys.t_expr * R(-sign), 0, sign);
    }
    std::vector<Point> verts;
    std::vector<std::size_t> pick(D);
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t start, std::size_t depth) {
        if (depth == D) {
            std::vector<std::vector<Rational>> a;
            std::vector<Rational> b;
            for (auto i : pick) {
                a.push_back(A[i]);
                b.push_back(-K[i]);
            }
            std::vector<Rational> x;
            if (!solve(a, b, x))
                return;
            for (std::size_t i = 0; i < A.size(); ++i) {
                Rational v = K[i];
                for (std::size_t j = 0; j < D; ++j)
                    v += A[i][j] * x[j];
                if (v.sign() < 0)
                    return;
            }
            verts.push_back({x[n], x[n + 1]});
            return;
        }
        for (std::size_t i = start; i < A.size(); ++i) {
            pick[depth] = i;
            rec(i + 1, depth + 1);
        }
    };
    rec(0, 0);
    return convex_hull(verts);
}

} // namespace

TEST_CASE("linear expressions") {
    LinExpr e = LinExpr::parse("3/2*(m - i) - 2*n1 + 4");
    CHECK(e.coeffs.at("i") == R(-3, 2));
    CHECK(e.coeffs.at("n1") == R(-2));
    CHECK(e.constant.slope == R(3, 2));
    CHECK(e.constant.offset == R(4));
    CHECK(LinExpr::parse("a - a").coeffs.empty());
    CHECK_THROWS_AS(LinExpr::parse("a*b"), ParseError);
    CHECK_THROWS_AS(LinExpr::parse("a +"), ParseError);
    CHECK_THROWS_AS(LinExpr::parse("(a"), ParseError);
    CHECK_THROWS_AS(ConstraintSystem::build({"a"}, {"a + b <= m"}, "a", "a"), DomainError);
    CHECK_THROWS_AS(ConstraintSystem::build({"a"}, {"a m"}, "a", "a"), ParseError);
    CHECK_THROWS_AS(ConstraintSystem::build({"m"}, {}, "m", "m"), DomainError);
}

TEST_CASE("projection examples") {
    auto d1 = ConstraintSystem::build({"n1", "n2"}, {"n1 + n2 <= m"}, "n1", "n2");
    CHECK(region_equal(project(d1), RegionSpec::scaled({pt(0, 0), pt(1, 0), pt(0, 1)})));

    auto seg = ConstraintSystem::build({"n1", "n2"}, {"n1 <= 0", "n2 <= m"}, "n1", "n2");
    RegionSpec r = project(seg);
    CHECK(instantiate(r, 3).degenerate);
    CHECK(region_equal(r, RegionSpec::scaled({pt(0, 0), pt(0, 1)})));

    // non-homogeneous: offsets tracked symbolically
    auto shifted = ConstraintSystem::build({"a", "b"}, {"a + b <= m + 1", "a >= 1"}, "a", "b");
    RegionSpec sr = project(shifted);
    RegionSpec want;
    want.vertices = {{{R(0), R(1)}, {R(0), R(0)}}, {{R(1), R(1)}, {R(0), R(0)}}, {{R(0), R(1)}, {R(1), R(0)}}};
    CHECK(region_equal(sr, want));

    // the shape changes at m = 3
    auto regimes = ConstraintSystem::build({"a", "b"}, {"a + b <= m", "a <= 3"}, "a", "b");
    CHECK_THROWS_AS(project(regimes), ProjectionError);

    CHECK_THROWS_AS(project(ConstraintSystem::build({"a", "b"}, {"a + b <= 0 - 1"}, "a", "b")), ProjectionError);
    CHECK_THROWS_AS(project(ConstraintSystem::build({"a", "b"}, {"a <= m"}, "a", "b")), ProjectionError);
}

TEST_CASE("region_equal") {
    RegionSpec t1 = RegionSpec::scaled({pt(0, 0), pt(1, 0), pt(0, 1)});
    RegionSpec t2 = RegionSpec::scaled({pt(1, 0), pt(0, 1), pt(0, 0)});
    RegionSpec t3 = RegionSpec::scaled({pt(0, 1), pt(1, 0), pt(0, 0)}); // clockwise
    CHECK(region_equal(t1, t2));
    CHECK(region_equal(t1, t3));
    RegionSpec a = RegionSpec::scaled({pt(0, 0), pt(2, 0), pt(0, 1)});
    RegionSpec mirror = RegionSpec::scaled({pt(0, 0), pt(1, 0), pt(0, 2)});
    CHECK_FALSE(region_equal(a, mirror));
    RegionSpec hex = RegionSpec::scaled({pt(0, 0), pt(1, 0), pt(2, 1), pt(2, 2), pt(1, 2), pt(0, 1)});
    RegionSpec hex_mid = RegionSpec::scaled({pt(0, 0), pt(1, 0), pt(2, 1), pt(2, 2), {R(3, 2), R(2)}, pt(1, 2), pt(0, 1)});
    CHECK(region_equal(hex, hex_mid));
    // same shape at m = 1 only
    RegionSpec off;
    off.vertices = {{{R(0), R(0)}, {R(0), R(0)}}, {{R(0), R(1)}, {R(0), R(0)}}, {{R(0), R(0)}, {R(0), R(1)}}};
    CHECK_FALSE(region_equal(t1, off));
}

TEST_CASE("containment") {
    RegionSpec big = RegionSpec::scaled({pt(0, 0), pt(2, 0), pt(0, 2)});
    RegionSpec small = RegionSpec::scaled({pt(0, 0), pt(1, 0), pt(0, 1)});
    CHECK(region_contained(small, {big}));
    CHECK_FALSE(region_contained(big, {small}));
    RegionSpec left = RegionSpec::scaled({pt(0, 0), pt(1, 0), pt(1, 2), pt(0, 2)});
    RegionSpec right = RegionSpec::scaled({pt(1, 0), pt(2, 0), pt(2, 2), pt(1, 2)});
    CHECK(region_contained(big, {left, right}));
    CHECK(region_contained(RegionSpec::scaled({pt(1, 0), pt(1, 1)}), {left}));
    CHECK_FALSE(region_contained(RegionSpec::scaled({pt(3, 0), pt(3, 1)}), {left, right}));
}

TEST_CASE("projection agrees with vertex enumeration and contains every integer point") {
    std::mt19937 rng(73);
    std::uniform_int_distribution<int> coef(0, 3), nv(2, 3), cnt(1, 3), slope(1, 3);
    int compared = 0;
    for (int iter = 0; iter < 60; ++iter) {
        int n = nv(rng);
        std::vector<std::string> vars;
        for (int i = 0; i < n; ++i)
            vars.push_back("v" + std::to_string(i));
        std::vector<std::string> rels;
        std::string total;
        for (int i = 0; i < n; ++i)
            total += (i ? " + " : "") + vars[i];
        rels.push_back(total + " <= " + std::to_string(slope(rng)) + "*m");
        int extra = cnt(rng);
        for (int k = 0; k < extra; ++k) {
            std::string lhs;
            for (int i = 0; i < n; ++i)
                lhs += (i ? " + " : "") + std::to_string(coef(rng)) + "*" + vars[i];
            rels.push_back(lhs + " <= " + std::to_string(slope(rng)) + "*m");
        }
        std::string s, t;
        for (int i = 0; i < n; ++i) {
            s += (i ? " + " : "") + std::to_string(coef(rng)) + "*" + vars[i];
            t += (i ? " + " : "") + std::to_string(coef(rng)) + "*" + vars[i];
        }
        auto sys = ConstraintSystem::build(vars, rels, s, t);
        RegionSpec r = project(sys);
        for (long m : {1L, 2L, 3L}) {
            Polygon want = oracle_projection(sys, m);
            CHECK(canonical_polygon(r.at(m)) == want);
            CHECK(project_at(sys, m) == want);
        }
        ++compared;
        // integer assignments at m = 3 land inside the projection
        Polygon at3 = r.at(3);
        std::vector<int> x(n, 0);
        std::function<void(int)> enumerate = [&](int i) {
            if (i == n) {
                std::map<std::string, Rational> val;
                for (int k = 0; k < n; ++k)
                    val[vars[k]] = R(x[k]);
                auto eval = [&](const LinExpr &e) {
                    Rational v = e.constant.at(3);
                    for (const auto &[name, c] : e.coeffs)
                        v += c * val[name];
                    return v;
                };
                for (const auto &e : sys.inequalities)
                    if (eval(e).sign() < 0)
                        return;
                CHECK(contains(at3, {eval(sys.s_expr), eval(sys.t_expr)}));
                return;
            }
            for (x[i] = 0; x[i] <= 9; ++x[i])
                enumerate(i + 1);
        };
        enumerate(0);
    }
    CHECK(compared == 60);
}
