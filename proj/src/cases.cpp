#include "dpcert/cases.hpp"

#include "dpcert/injection.hpp"
#include "dpcert/toric.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace dpcert {

namespace {

using Vtx = std::pair<const char *, const char *>;

RegionSpec region(std::initializer_list<Vtx> unit) {
    Polygon poly;
    for (const auto &[s, t] : unit)
        poly.push_back({Rational::parse(s), Rational::parse(t)});
    return RegionSpec::scaled(poly);
}

Derivation derive(std::string label, DerivationKind kind, std::vector<std::string> vars,
                  const std::vector<std::string> &rels, std::string_view s, std::string_view t, int piece = 0) {
    return {std::move(label), ConstraintSystem::build(std::move(vars), rels, s, t), kind, piece};
}

CaseSpec make_case(std::string surface, int degree, std::string label, std::string title) {
    CaseSpec c;
    c.surface = std::move(surface);
    c.degree = degree;
    c.label = std::move(label);
    c.title = std::move(title);
    return c;
}

Derivation from_generators(const std::vector<std::string> &gens) {
    return {"generators", generator_system(gens), DerivationKind::Equal, 0};
}

std::vector<CaseSpec> build_registry() {
    using K = DerivationKind;
    std::vector<CaseSpec> reg;
    auto add = [&](CaseSpec c) { reg.push_back(std::move(c)); };

    const RegionSpec unit_tri = region({{"0", "0"}, {"1", "0"}, {"0", "1"}});
    const RegionSpec unit_square = region({{"0", "0"}, {"1", "0"}, {"1", "1"}, {"0", "1"}});
    const RegionSpec tri2 = region({{"0", "0"}, {"2", "0"}, {"0", "2"}});
    const std::vector<std::string> diag_i = {"i", "n1", "n2"};

    {
        CaseSpec c = make_case("dp1", 1, "c1", "degree 1, Case 1: cubic smooth at q");
        c.pieces = {unit_tri};
        c.derivations = {derive("system", K::Equal, {"n1", "n2"}, {"n1 + n2 <= m"}, "n1", "n2")};
        c.printed_ratio = Rational(3);
        add(c);
    }
    {
        CaseSpec c = make_case("dp1", 1, "c2", "degree 1, Case 2: cubic singular at q");
        c.pieces = {region({{"0", "0"}, {"1", "0"}, {"1", "1"}})};
        c.comparison = region({{"0", "0"}, {"1/2", "0"}, {"1", "1"}, {"0", "1/2"}});
        c.generators = {"1", "x*y"};
        c.tangent_bases = {{"1", "x*y"}, {"1", "x^2 + 2*x*y + y^2"}};
        c.order = MonomialOrder::DiagonalFirst;
        c.derivations = {derive("system", K::Comparison, diag_i, {"i <= m", "2n1 + 2n2 <= m - i"}, "i + n1", "i + n2")};
        c.printed_ratio = Rational(3, 2);
        add(c);
    }
    {
        CaseSpec c = make_case("dp2", 2, "c1", "degree 2, Case 1: tangent degrees 0,1,1");
        c.pieces = {unit_tri, region({{"1", "0"}, {"2", "0"}, {"1", "1"}})};
        c.generators = {"1", "x", "y"};
        c.tangent_bases = {c.generators};
        c.derivations = {from_generators(c.generators),
                         derive("outer", K::Selection, {"n1", "n2"}, {"n1 + n2 <= 2m"}, "n1", "n2", 1)};
        c.printed_ratio = Rational(6, 5);
        add(c);
    }
    {
        CaseSpec c = make_case("dp2", 2, "c2s1", "degree 2, Case 2, Subcase 1: C irreducible");
        c.pieces = {unit_square};
        c.derivations = {derive("system", K::Equal, diag_i, {"i <= m", "n1 + n2 <= m - i"}, "i + n1", "i + n2")};
        c.printed_ratio = Rational(2);
        add(c);
    }
    {
        CaseSpec c = make_case("dp2", 2, "c2s2", "degree 2, Case 2, Subcase 2: line and conic");
        c.pieces = {unit_square};
        const std::vector<std::string> v = {"m1", "m2", "n1", "n2"};
        c.derivations = {
            derive("m1<=m2", K::Equal, v, {"m1 <= m2", "m2 <= m", "n1 + n2 <= m + m1 - 2m2"}, "m1 + n1", "m2 + n2"),
            derive("m2<=m1", K::Equal, v, {"m2 <= m1", "m1 <= m", "n1 + n2 <= m - 2m1 + m2"}, "m1 + n1", "m2 + n2")};
        c.printed_ratio = Rational(2);
        add(c);
    }
    {
        CaseSpec c = make_case("dp3", 3, "c1", "degree 3, Case 1: C irreducible");
        c.pieces = {region({{"0", "0"}, {"3/2", "0"}, {"1", "1"}, {"0", "3/2"}})};
        c.derivations = {
            derive("system", K::Equal, diag_i, {"i <= m", "n1 + n2 <= 3/2(m - i)"}, "i + n1", "i + n2")};
        c.printed_ratio = Rational(12, 7);
        add(c);
    }
    const std::vector<std::string> two = {"m1", "m2", "n1", "n2"};
    {
        CaseSpec c = make_case("dp3", 3, "c2s1a", "degree 3, Case 2, Subcase 1: line and conic, line through one point");
        c.pieces = {region({{"0", "0"}, {"1", "0"}, {"3/2", "1/2"}, {"0", "2"}})};
        c.derivations = {derive("system", K::Contained, two,
                                {"m2 <= m", "2m1 - m2 <= m", "n1 + n2 <= m - 2m1 + m2", "n1 + n2 <= 2m - 2m2"},
                                "m1 + n1", "m2 + n2")};
        add(c);
    }
    {
        CaseSpec c = make_case("dp3", 3, "c2s1b", "degree 3, Case 2, Subcase 1: line and conic, line through two points");
        c.pieces = {region({{"0", "0"}, {"2", "0"}, {"1/2", "3/2"}, {"0", "1"}})};
        c.derivations = {derive("system", K::Contained, two,
                                {"m1 <= m", "2m2 - m1 <= m", "n1 + n2 <= m - 2m2 + m1", "n1 + n2 <= 2m - 2m1"},
                                "m1 + n1", "m2 + n2")};
        c.printed_ratio = Rational(36, 31);
        add(c);
    }
    const std::vector<std::string> three = {"m1", "m2", "m3", "n1", "n2"};
    {
        CaseSpec c = make_case("dp3", 3, "c2s2", "degree 3, Case 2, Subcase 2: three lines, double point");
        c.pieces = {region({{"0", "0"}, {"1", "0"}, {"3/2", "1/2"}, {"1/2", "3/2"}, {"0", "1"}})};
        c.derivations = {derive("system", K::Equal, three,
                                {"m1 <= m", "m2 <= m", "m3 <= m", "m1 + m2 <= m3 + m",
                                 "n1 + n2 <= m - m1 + m2 - m3", "n1 + n2 <= m + m1 - m2 - m3"},
                                "m1 + n1", "m2 + n2")};
        c.printed_ratio = Rational(18, 11);
        add(c);
    }
    {
        CaseSpec c = make_case("dp3", 3, "c2s3", "degree 3, Case 2, Subcase 3: three lines, triple point");
        c.pieces = {region({{"0", "0"}, {"1", "0"}, {"2", "1"}, {"0", "1"}})};
        c.derivations = {derive("system", K::Equal, three,
                                {"m1 <= m", "m2 <= m", "m3 <= m", "n1 + n2 <= m + m1 - m2 - m3",
                                 "n1 + n2 <= m - m1 + m2 - m3", "n1 + n2 <= m - m1 - m2 + m3"},
                                "m1 + m3 + n1", "m2 + n2")};
        c.printed_ratio = Rational(9, 7);
        add(c);
    }
    {
        CaseSpec c = make_case("dp4", 4, "c1", "degree 4, Case 1: no (-1)-curve through p");
        c.pieces = {tri2};
        c.derivations = {
            derive("system", K::Equal, diag_i, {"i <= m", "n1 + n2 <= 2(m - i)"}, "i + n1", "i + n2")};
        c.printed_ratio = Rational(3, 2);
        add(c);
    }
    {
        CaseSpec c = make_case("dp4", 4, "c2", "degree 4, Case 2: one (-1)-curve through p");
        c.pieces = {tri2};
        c.derivations = {derive("system", K::Contained, two, {"n1 + n2 <= m + m1 - 2m2", "n1 + n2 <= 2m - 2m1"},
                                "m1 + n1", "m2 + n2")};
        c.printed_ratio = Rational(3, 2);
        add(c);
    }
    {
        CaseSpec c = make_case("dp4", 4, "c3", "degree 4, Case 3: two (-1)-curves through p");
        c.pieces = {region({{"0", "0"}, {"1", "0"}, {"2", "1"}, {"0", "1"}}),
                    region({{"1", "1"}, {"2", "1"}, {"1", "2"}})};
        c.generators = {"1", "x", "y", "x*y", "x^2*y"};
        c.tangent_bases = {{"1", "x", "y", "x*y", "x^2*y + x*y^2"}};
        // the lowest term of (x+y)^m3 contributes x^j y^(m3-j)
        c.derivations = {from_generators(c.generators),
                         derive("lines", K::Selection, {"m1", "m2", "m3", "j", "n1", "n2"},
                                {"j <= m3", "n1 + n2 <= m + m1 - m2 - m3", "n1 + n2 <= m - m1 + m2 - m3",
                                 "n1 + n2 <= 2m - m1 - m2"},
                                "m1 + j + n1", "m2 + m3 - j + n2", 1)};
        c.printed_ratio = Rational(12, 11);
        add(c);
    }
    {
        CaseSpec c = make_case("dp5", 5, "c1", "degree 5, Case 1: no anticanonical divisor of multiplicity 3 at p");
        c.pieces = {tri2, region({{"2", "0"}, {"5/2", "0"}, {"5/4", "5/4"}, {"5/4", "3/4"}})};
        c.generators = {"1", "x", "y", "x^2", "x*y", "y^2"};
        c.tangent_bases = {c.generators};
        c.derivations = {from_generators(c.generators),
                         derive("outer", K::Selection, {"n1", "n2"}, {"2n1 + 2n2 <= 5m"}, "n1", "n2", 1)};
        c.printed_ratio = Rational(15, 14);
        add(c);
    }
    {
        CaseSpec c = make_case("dp5", 5, "c2", "degree 5, Case 2: anticanonical divisor of multiplicity 3 at p");
        c.pieces = {region({{"0", "0"}, {"2", "0"}, {"1", "2"}, {"0", "1"}})};
        c.generators = {"1", "x", "y", "x^2", "x*y", "x*y^2"};
        c.tangent_bases = {{"1", "x", "y", "x^2", "x*y", "x^2*y + x*y^2"}};
        c.order = MonomialOrder::GrlexYX;
        c.derivations = {from_generators(c.generators)};
        c.printed_ratio = Rational(15, 13);
        c.count_exact = true;
        add(c);
    }
    {
        CaseSpec c = make_case("dp6", 6, "c1s1", "degree 6, Case 1, Subcase 1: p on no (-1)-curve");
        c.pieces = {region({{"0", "0"}, {"2", "0"}, {"2", "1"}, {"0", "2"}})};
        c.generators = {"1", "x", "y", "x^2", "x*y", "y^2", "x^2*y"};
        c.tangent_bases = {{"1", "x", "y", "x^2", "x*y", "y^2", "x^2*y + x*y^2"}};
        c.derivations = {from_generators(c.generators)};
        c.printed_ratio = Rational(9, 8);
        c.count_exact = true;
        add(c);
    }
    {
        CaseSpec c = make_case("dp6", 6, "c1s2", "degree 6, Case 1, Subcase 2: p on a single (-1)-curve");
        c.pieces = {region({{"0", "0"}, {"2", "0"}, {"2", "1"}, {"1", "2"}, {"0", "1"}})};
        c.generators = {"1", "x", "y", "x^2", "x*y", "x^2*y", "x*y^2"};
        c.tangent_bases = {c.generators};
        c.derivations = {from_generators(c.generators)};
        c.printed_ratio = Rational(1);
        c.count_exact = true;
        add(c);
    }
    {
        CaseSpec c = make_case("dp6", 6, "c2", "degree 6, Case 2: p on two (-1)-curves, bidegree chart");
        c.chart = Chart::Bidegree;
        c.pieces = {region({{"0", "0"}, {"1", "0"}, {"2", "1"}, {"2", "2"}, {"1", "2"}, {"0", "1"}})};
        // s, t <= 2m: monomials of bidegree (2m, 2m)
        c.derivations = {derive("system", K::Equal, two,
                                {"m1 <= 2m", "m2 <= 2m", "m1 - m2 <= m", "m2 - m1 <= m", "n1 + n2 <= m - m1 + m2",
                                 "n1 + n2 <= m + m1 - m2", "m1 + n1 <= 2m", "m2 + n2 <= 2m"},
                                "m1 + n1", "m2 + n2")};
        c.printed_ratio = Rational(1);
        c.count_exact = true;
        add(c);
    }
    {
        CaseSpec c = make_case("p1xp1", 8, "c1", "P1xP1, bidegree chart");
        c.chart = Chart::Bidegree;
        c.pieces = {region({{"0", "0"}, {"2", "0"}, {"2", "2"}, {"0", "2"}})};
        c.derivations = {derive("system", K::Equal, two,
                                {"m1 <= 2m", "m2 <= 2m", "n1 + n2 <= 2m - m1", "n1 + n2 <= 2m - m2"}, "m1 + n1",
                                "m2 + n2")};
        c.printed_ratio = Rational(1);
        c.count_exact = true;
        add(c);
    }
    {
        CaseSpec c = make_case("p2", 9, "c1", "P2, all monomials of degree <= 3m");
        c.pieces = {region({{"0", "0"}, {"3", "0"}, {"0", "3"}})};
        c.derivations = {derive("system", K::Equal, {"n1", "n2"}, {"n1 + n2 <= 3m"}, "n1", "n2")};
        c.printed_ratio = Rational(1);
        c.count_exact = true;
        add(c);
    }
    return reg;
}

} // namespace

std::string kind_name(DerivationKind k) {
    switch (k) {
    case DerivationKind::Equal:
        return "equal";
    case DerivationKind::Contained:
        return "contained";
    case DerivationKind::Selection:
        return "selection";
    case DerivationKind::Comparison:
        return "comparison";
    }
    return "?";
}

const std::vector<CaseSpec> &case_registry() {
    static const std::vector<CaseSpec> reg = build_registry();
    return reg;
}

std::vector<std::string> surfaces() { return {"dp1", "dp2", "dp3", "dp4", "dp5", "dp6", "p2", "p1xp1"}; }

const CaseSpec &find_case(std::string_view surface, std::string_view label) {
    for (const auto &c : case_registry())
        if (c.surface == surface && c.label == label)
            return c;
    throw DomainError("no case '" + std::string(label) + "' for surface '" + std::string(surface) + "'");
}

std::vector<const CaseSpec *> cases_of(std::string_view surface) {
    std::vector<const CaseSpec *> out;
    for (const auto &c : case_registry())
        if (c.surface == surface)
            out.push_back(&c);
    if (out.empty())
        throw DomainError("unknown surface '" + std::string(surface) + "'");
    return out;
}

Rational case_kappa(const CaseSpec &c) { return leading_coefficient(c.pieces); }

Rational case_ratio(const CaseSpec &c) {
    Rational kappa = case_kappa(c);
    if (kappa.sign() <= 0)
        throw DomainError("degenerate region for case " + c.surface + " " + c.label);
    return Rational(c.degree, 2) / kappa;
}

std::vector<Monomial2> generator_monomials(const std::vector<std::string> &generators) {
    std::vector<Monomial2> out;
    for (const auto &g : generators) {
        BiPoly p = parse_bipoly(g);
        if (p.size() != 1)
            throw DomainError("generator '" + g + "' is not a monomial");
        out.push_back(p.terms().begin()->first);
    }
    return out;
}

ConstraintSystem generator_system(const std::vector<std::string> &generators) {
    auto monos = generator_monomials(generators);
    std::vector<std::string> vars;
    std::string sum, s, t;
    for (std::size_t i = 0; i < monos.size(); ++i) {
        std::string v = "g" + std::to_string(i + 1);
        vars.push_back(v);
        sum += (i ? " + " : "") + v;
        auto term = [&](std::string &acc, int e) {
            if (e != 0)
                acc += (acc.empty() ? "" : " + ") + std::to_string(e) + v;
        };
        term(s, monos[i].s);
        term(t, monos[i].t);
    }
    return ConstraintSystem::build(vars, {sum + " = m"}, s.empty() ? "0" : s, t.empty() ? "0" : t);
}

std::set<LatticePoint> generator_products(const std::vector<std::string> &generators, long m) {
    auto monos = generator_monomials(generators);
    std::set<LatticePoint> level = {{0, 0}};
    for (long k = 0; k < m; ++k) {
        std::set<LatticePoint> next;
        for (const auto &[s, t] : level)
            for (const auto &g : monos)
                next.insert({s + g.s, t + g.t});
        level = std::move(next);
    }
    return level;
}

namespace {

Polygon convex_at1(const RegionSpec &r) { return canonical_polygon(r.at(1)); }

Polygon halfplane_s_ge(const Rational &sigma, const Rational &far) {
    return {{sigma, -far}, {far, -far}, {far, far}, {sigma, far}};
}

} // namespace

std::vector<DerivationCheck> check_derivations(const CaseSpec &c) {
    std::vector<DerivationCheck> out;
    for (const auto &d : c.derivations) {
        DerivationCheck chk{d.label, d.kind, {}, false, ""};
        try {
            chk.projected = project(d.system);
        } catch (const Error &e) {
            chk.detail = std::string("projection failed: ") + e.what();
            out.push_back(chk);
            continue;
        }
        switch (d.kind) {
        case DerivationKind::Equal:
            chk.ok = region_equal(chk.projected, c.pieces.at(d.piece));
            if (!chk.ok)
                chk.detail = "projection " + chk.projected.str() + " differs from " + c.pieces.at(d.piece).str();
            break;
        case DerivationKind::Contained:
            chk.ok = region_contained(chk.projected, c.pieces);
            chk.detail = region_equal(chk.projected, c.pieces.front()) ? "equal" : "strictly inside";
            if (!chk.ok)
                chk.detail = "projection " + chk.projected.str() + " leaves the region";
            break;
        case DerivationKind::Comparison: {
            if (!c.comparison) {
                chk.detail = "no comparison region";
                break;
            }
            Rational inner = leading_coefficient(*c.comparison), outer = case_kappa(c);
            bool same = region_equal(chk.projected, *c.comparison);
            chk.ok = same && inner <= outer;
            chk.detail = "comparison moment " + inner.str() + " vs " + outer.str();
            if (!same)
                chk.detail = "projection " + chk.projected.str() + " differs from the comparison region";
            break;
        }
        case DerivationKind::Selection: {
            Polygon outer = convex_at1(chk.projected);
            Polygon piece = convex_at1(c.pieces.at(d.piece));
            Rational others_area(0);
            bool disjoint = true;
            for (std::size_t k = 0; k < c.pieces.size(); ++k) {
                if (static_cast<int>(k) == d.piece)
                    continue;
                Polygon q = convex_at1(c.pieces[k]);
                others_area += area(q);
                disjoint = disjoint && area(clip_convex(piece, q)).is_zero();
            }
            bool inside = region_contained(c.pieces.at(d.piece), {chk.projected});
            bool sized = area(piece) == Rational(c.degree, 2) - others_area;
            Rational sigma = piece.front().s;
            for (const auto &p : piece)
                sigma = min(sigma, p.s);
            Rational far(1000);
            Polygon strip = clip_convex(outer, halfplane_s_ge(sigma, far));
            Rational free_area = area(strip);
            for (std::size_t k = 0; k < c.pieces.size(); ++k)
                if (static_cast<int>(k) != d.piece)
                    free_area -= area(clip_convex(strip, convex_at1(c.pieces[k])));
            bool greedy = free_area == area(piece);
            chk.ok = disjoint && inside && sized && greedy;
            chk.detail = "outer " + chk.projected.str() + "; threshold s >= " + sigma.str() + "m";
            if (!disjoint)
                chk.detail += "; overlaps another piece";
            if (!inside)
                chk.detail += "; leaves the outer region";
            if (!sized)
                chk.detail += "; area " + area(piece).str() + " is not the missing " +
                              (Rational(c.degree, 2) - others_area).str();
            if (!greedy)
                chk.detail += "; largest-s part of the outer region has area " + free_area.str();
            break;
        }
        }
        out.push_back(chk);
    }
    return out;
}

Integer greedy_vm(const CaseSpec &c, long m) {
    const Derivation *sel = nullptr;
    for (const auto &d : c.derivations)
        if (d.kind == DerivationKind::Selection)
            sel = &d;
    if (!sel)
        throw DomainError("case " + c.surface + " " + c.label + " has no selection");
    std::vector<RegionSpec> fixed;
    for (std::size_t k = 0; k < c.pieces.size(); ++k)
        if (static_cast<int>(k) != sel->piece)
            fixed.push_back(c.pieces[k]);
    auto base = lattice_points_union(fixed, m);
    InstantiatedPolygon outer = instantiate(project(sel->system), m);
    std::vector<long> free;
    for (const auto &p : lattice_points(outer.vertices))
        if (!base.count(p))
            free.push_back(p.first);
    Integer need = ell(c.degree, m) - Integer(static_cast<long>(base.size()));
    if (need < 0 || need > Integer(static_cast<long>(free.size())))
        throw DomainError("outer region cannot supply the missing monomials");
    std::sort(free.begin(), free.end(), std::greater<>());
    Integer sum = 0;
    for (const auto &p : base)
        sum += p.first;
    for (long k = 0; k < need.get_si(); ++k)
        sum += free[k];
    return sum;
}

CaseCertificate certify_case(const CaseSpec &c) {
    CaseCertificate cert;
    cert.label = c.label;
    cert.title = c.title;
    cert.pieces = c.pieces;
    cert.kappa = case_kappa(c);
    cert.ratio = case_ratio(c);
    cert.printed = c.printed_ratio;
    cert.matches_printed = !c.printed_ratio || *c.printed_ratio == cert.ratio;
    long period = lattice_period(c.pieces);
    long step = 4 % period == 0 ? 4 : period;
    std::vector<std::pair<Rational, Rational>> pts;
    for (long k = 1; k <= 4; ++k) {
        long m = step * k;
        Integer v = lattice_sum_s_union(c.pieces, m);
        cert.samples.push_back({m, v});
        pts.push_back({Rational(m), Rational(v)});
    }
    cert.fit = cubic_fit(pts);
    cert.fit_agrees = cert.fit.c3 == cert.kappa;
    cert.checks = check_derivations(c);
    return cert;
}

bool DeltaCertificate::all_matched() const {
    if (expected && bound != *expected)
        return false;
    for (const auto &c : cases) {
        if (!c.matches_printed || !c.fit_agrees)
            return false;
        for (const auto &chk : c.checks)
            if (!chk.ok)
                return false;
    }
    return true;
}

std::optional<Rational> expected_delta(std::string_view surface) {
    static const std::map<std::string, Rational, std::less<>> table = {
        {"dp1", Rational(3, 2)},  {"dp2", Rational(6, 5)}, {"dp3", Rational(36, 31)}, {"dp4", Rational(12, 11)},
        {"dp5", Rational(15, 14)}, {"dp6", Rational(1)},    {"p2", Rational(1)},       {"p1xp1", Rational(1)}};
    auto it = table.find(surface);
    if (it == table.end())
        return std::nullopt;
    return it->second;
}

DeltaCertificate delta_lower_bound(std::string_view surface) {
    DeltaCertificate cert;
    cert.surface = std::string(surface);
    for (const CaseSpec *c : cases_of(surface)) {
        cert.cases.push_back(certify_case(*c));
        const auto &cc = cert.cases.back();
        if (cert.cases.size() == 1 || cc.ratio < cert.bound)
            cert.bound = cc.ratio;
        if (!cc.matches_printed)
            cert.notes.push_back("case " + cc.label + ": computed " + cc.ratio.str() + ", printed " +
                                 cc.printed->str());
        if (c->comparison)
            cert.notes.push_back("case " + cc.label + ": bound certified through the dominating region");
    }
    cert.expected = expected_delta(surface);
    static const std::map<std::string, ToricId, std::less<>> toric = {
        {"p2", ToricId::P2}, {"p1xp1", ToricId::P1xP1}, {"dp6", ToricId::dP6}};
    if (auto it = toric.find(surface); it != toric.end()) {
        cert.toric_upper = delta_upper_limit(it->second);
        if (*cert.toric_upper == cert.bound)
            cert.notes.push_back("lower and upper bounds agree: delta = " + cert.bound.str());
    }
    return cert;
}

const std::vector<Figure1Polygon> &figure1_polygons() {
    static const std::vector<Figure1Polygon> table = [] {
        std::vector<Figure1Polygon> t;
        auto add = [&](int panel, std::initializer_list<Vtx> vs, const char *label) {
            Polygon p;
            for (const auto &[s, tt] : vs)
                p.push_back({Rational::parse(s), Rational::parse(tt)});
            t.push_back({panel, p, Rational::parse(label)});
        };
        add(1, {{"0", "0"}, {"1", "0"}, {"1/2", "1/2"}}, "3/24");
        add(1, {{"0", "0"}, {"1/2", "1/2"}, {"0", "1"}}, "1/24");
        add(1, {{"0", "1"}, {"1/2", "1/2"}, {"1", "1"}}, "3/24");
        add(1, {{"1", "0"}, {"1", "1"}, {"1/2", "1/2"}}, "5/24");
        add(1, {{"1", "0"}, {"3/2", "1/2"}, {"1", "1"}}, "7/24");
        add(1, {{"1", "0"}, {"2", "0"}, {"3/2", "1/2"}}, "9/24");
        add(1, {{"1", "1"}, {"3/2", "1/2"}, {"2", "1"}}, "9/24");
        add(1, {{"2", "0"}, {"2", "1"}, {"3/2", "1/2"}}, "11/24");
        add(1, {{"0", "1"}, {"1/2", "3/2"}, {"0", "2"}}, "1/24");
        add(1, {{"0", "1"}, {"1", "1"}, {"1/2", "3/2"}}, "3/24");
        add(1, {{"0", "2"}, {"1/2", "3/2"}, {"1", "2"}}, "3/24");
        add(1, {{"1", "1"}, {"1", "2"}, {"1/2", "3/2"}}, "5/24");
        add(1, {{"0", "2"}, {"1", "2"}, {"0", "3"}}, "4/24");
        add(1, {{"1", "1"}, {"2", "1"}, {"1", "2"}}, "16/24");
        add(1, {{"2", "1"}, {"2", "2"}, {"1", "2"}}, "20/24");
        add(1, {{"2", "0"}, {"3", "0"}, {"2", "1"}}, "28/24");
        add(2, {{"2", "0"}, {"5/2", "0"}, {"5/4", "5/4"}, {"5/4", "3/4"}}, "1");
        add(3, {{"1", "0"}, {"3/2", "0"}, {"1", "1"}}, "7/24");
        add(3, {{"3/2", "0"}, {"2", "0"}, {"1", "2"}, {"1", "1"}}, "25/24");
        add(4, {{"0", "1"}, {"1", "1"}, {"0", "3/2"}}, "2/24");
        add(4, {{"0", "3/2"}, {"1", "1"}, {"2", "1"}, {"0", "2"}}, "14/24");
        return t;
    }();
    return table;
}

long p2_ell(long m) { return (3 * m + 1) * (3 * m + 2) / 2; }

std::vector<BiPoly> monomial_p2_basis(long m) {
    std::vector<BiPoly> out;
    for (const auto &mono : monomials_up_to(MonomialOrder::GrlexXY, static_cast<int>(3 * m)))
        out.push_back(BiPoly::monomial(mono));
    return out;
}

std::vector<BiPoly> random_p2_basis(long m, std::mt19937_64 &rng) {
    std::vector<BiPoly> b = monomial_p2_basis(m);
    std::uniform_int_distribution<std::size_t> pick(0, b.size() - 1);
    std::uniform_int_distribution<int> coef(-3, 3);
    for (std::size_t k = 0; k < 3 * b.size(); ++k) {
        std::size_t i = pick(rng), j = pick(rng);
        if (i == j)
            continue;
        if (k % 5 == 0)
            std::swap(b[i], b[j]);
        else
            b[i] += b[j] * BiPoly(Rational(coef(rng)));
    }
    return b;
}

AnchorReport verify_anchor_bound(long m, const std::vector<BiPoly> &basis) {
    if (m < 1)
        throw DomainError("m must be positive");
    AnchorReport rep;
    rep.threshold = m * p2_ell(m);
    if (static_cast<long>(basis.size()) != p2_ell(m))
        throw DomainError("basis must have " + std::to_string(p2_ell(m)) + " elements");
    for (const auto &f : basis)
        if (f.is_zero())
            throw DomainError("zero basis element");
    rep.assignment = injective_assignment(basis, MonomialOrder::GrlexXY);
    rep.anchor = product_anchor(rep.assignment.monomial);
    BiPoly product(Rational(1));
    for (const auto &f : basis) {
        if (!f.coefficient({0, 0}).is_zero())
            continue;
        product *= f;
        ++rep.factors;
    }
    if (rep.factors == 0) {
        rep.result.bound = Rational(1);
        rep.result.status = "trivial: no basis element vanishes at the origin";
        rep.certified = true;
        return rep;
    }
    LctOptions opt;
    opt.anchor = std::max(rep.anchor.s, rep.anchor.t);
    rep.result = lct_lower_bound(product, static_cast<int>(rep.threshold), opt);
    rep.certified = rep.result.bound >= Rational(1, rep.threshold);
    return rep;
}

} // namespace dpcert
