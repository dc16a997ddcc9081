#include "dpcert/regions.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace dpcert {

namespace {

Rational cross(const Point &o, const Point &a, const Point &b) {
    return (a.s - o.s) * (b.t - o.t) - (a.t - o.t) * (b.s - o.s);
}

Polygon dedupe_cyclic(const Polygon &poly) {
    Polygon out;
    for (const auto &p : poly)
        if (out.empty() || !(out.back() == p))
            out.push_back(p);
    while (out.size() > 1 && out.front() == out.back())
        out.pop_back();
    return out;
}

} // namespace

std::string AffineInM::str() const {
    if (slope.is_zero())
        return offset.str();
    std::string out = slope == Rational(1) ? "m" : slope.str() + "m";
    if (offset.sign() > 0)
        out += "+" + offset.str();
    else if (offset.sign() < 0)
        out += offset.str();
    return out;
}

std::string polygon_str(const Polygon &poly) {
    std::string out;
    for (std::size_t i = 0; i < poly.size(); ++i) {
        if (i)
            out += ",";
        out += "(" + poly[i].s.str() + "," + poly[i].t.str() + ")";
    }
    return out;
}

RegionSpec RegionSpec::scaled(const Polygon &unit) {
    RegionSpec r;
    for (const auto &p : unit)
        r.vertices.push_back({AffineInM{p.s, Rational(0)}, AffineInM{p.t, Rational(0)}});
    return r;
}

Polygon RegionSpec::at(long m) const {
    Polygon out;
    for (const auto &[s, t] : vertices)
        out.push_back({s.at(m), t.at(m)});
    return out;
}

Polygon RegionSpec::slope_polygon() const {
    Polygon out;
    for (const auto &[s, t] : vertices)
        out.push_back({s.slope, t.slope});
    return out;
}

std::string RegionSpec::str() const {
    std::string out;
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        if (i)
            out += ",";
        out += "(" + vertices[i].first.str() + "," + vertices[i].second.str() + ")";
    }
    return out;
}

bool is_convex_cycle(const Polygon &raw) {
    Polygon poly = dedupe_cyclic(raw);
    std::size_t n = poly.size();
    if (n <= 2)
        return true;
    int orientation = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const Point &a = poly[i], &b = poly[(i + 1) % n];
        for (std::size_t k = 0; k < n; ++k) {
            int sgn = cross(a, b, poly[k]).sign();
            if (sgn == 0)
                continue;
            if (orientation == 0)
                orientation = sgn;
            else if (sgn != orientation)
                return false;
        }
    }
    if (orientation == 0) // collinear: the cycle must not backtrack inside the segment
        return convex_hull(poly).size() <= 2;
    // every vertex on one side of every edge; also require a single winding
    Polygon hull = convex_hull(poly);
    std::set<Point> seen(poly.begin(), poly.end());
    return seen.size() == poly.size() && signed_area(poly).abs() == area(hull);
}

Rational signed_area(const Polygon &poly) {
    Rational twice(0);
    std::size_t n = poly.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Point &a = poly[i], &b = poly[(i + 1) % n];
        twice += a.s * b.t - b.s * a.t;
    }
    return twice / Rational(2);
}

Rational area(const Polygon &poly) { return signed_area(poly).abs(); }

namespace {

bool on_segment(const Point &a, const Point &b, const Point &p) {
    return cross(a, b, p).is_zero() && min(a.s, b.s) <= p.s && p.s <= max(a.s, b.s) &&
           min(a.t, b.t) <= p.t && p.t <= max(a.t, b.t);
}

bool segments_meet(const Point &a, const Point &b, const Point &c, const Point &d) {
    int d1 = cross(a, b, c).sign(), d2 = cross(a, b, d).sign();
    int d3 = cross(c, d, a).sign(), d4 = cross(c, d, b).sign();
    if (d1 * d2 < 0 && d3 * d4 < 0)
        return true;
    return on_segment(a, b, c) || on_segment(a, b, d) || on_segment(c, d, a) || on_segment(c, d, b);
}

} // namespace

bool is_simple_cycle(const Polygon &raw) {
    Polygon poly = dedupe_cyclic(raw);
    std::size_t n = poly.size();
    if (n <= 3)
        return is_convex_cycle(poly);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            bool adjacent = j == i + 1 || (i == 0 && j == n - 1);
            if (adjacent)
                continue;
            if (segments_meet(poly[i], poly[(i + 1) % n], poly[j], poly[(j + 1) % n]))
                return false;
        }
    return !signed_area(poly).is_zero() || is_convex_cycle(poly);
}

Rational first_moment_s(const Polygon &poly) {
    if (!is_simple_cycle(poly))
        throw DomainError("self-intersecting vertex list");
    Rational total(0);
    for (std::size_t i = 1; i + 1 < poly.size(); ++i) {
        Rational a2 = cross(poly[0], poly[i], poly[i + 1]);
        total += a2 / Rational(2) * (poly[0].s + poly[i].s + poly[i + 1].s) / Rational(3);
    }
    return signed_area(poly).sign() < 0 ? -total : total;
}

Polygon convex_hull(std::vector<Point> pts) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() <= 1)
        return pts;
    Polygon lower, upper;
    for (const auto &p : pts) {
        while (lower.size() >= 2 && cross(lower[lower.size() - 2], lower.back(), p).sign() <= 0)
            lower.pop_back();
        lower.push_back(p);
    }
    for (auto it = pts.rbegin(); it != pts.rend(); ++it) {
        while (upper.size() >= 2 && cross(upper[upper.size() - 2], upper.back(), *it).sign() <= 0)
            upper.pop_back();
        upper.push_back(*it);
    }
    lower.pop_back();
    upper.pop_back();
    lower.insert(lower.end(), upper.begin(), upper.end());
    return lower;
}

Polygon canonical_polygon(const Polygon &poly) { return convex_hull(poly); }

bool contains(const Polygon &convex, const Point &p) {
    Polygon hull = convex_hull(convex);
    std::size_t n = hull.size();
    if (n == 0)
        return false;
    if (n == 1)
        return hull[0] == p;
    if (n == 2) {
        if (!cross(hull[0], hull[1], p).is_zero())
            return false;
        return min(hull[0].s, hull[1].s) <= p.s && p.s <= max(hull[0].s, hull[1].s) &&
               min(hull[0].t, hull[1].t) <= p.t && p.t <= max(hull[0].t, hull[1].t);
    }
    for (std::size_t i = 0; i < n; ++i)
        if (cross(hull[i], hull[(i + 1) % n], p).sign() < 0)
            return false;
    return true;
}

Polygon clip_convex(const Polygon &subject, const Polygon &clip_raw) {
    Polygon clip = convex_hull(clip_raw);
    Polygon out = convex_hull(subject);
    if (clip.size() < 3) {
        Polygon kept;
        for (const auto &p : out)
            if (contains(clip, p))
                kept.push_back(p);
        return kept;
    }
    for (std::size_t i = 0; i < clip.size() && !out.empty(); ++i) {
        const Point &a = clip[i], &b = clip[(i + 1) % clip.size()];
        Polygon in = out;
        out.clear();
        for (std::size_t k = 0; k < in.size(); ++k) {
            const Point &p = in[k], &q = in[(k + 1) % in.size()];
            Rational cp = cross(a, b, p), cq = cross(a, b, q);
            if (cp.sign() >= 0)
                out.push_back(p);
            if ((cp.sign() > 0 && cq.sign() < 0) || (cp.sign() < 0 && cq.sign() > 0)) {
                Rational lambda = cp / (cp - cq);
                out.push_back({p.s + lambda * (q.s - p.s), p.t + lambda * (q.t - p.t)});
            }
        }
    }
    return convex_hull(out);
}

namespace {

// Integral s-range of a convex polygon on the row t = row.
bool row_range(const Polygon &poly, const Rational &row, Rational &lo, Rational &hi) {
    bool any = false;
    auto note = [&](const Rational &s) {
        if (!any) {
            lo = hi = s;
            any = true;
        } else {
            lo = min(lo, s);
            hi = max(hi, s);
        }
    };
    std::size_t n = poly.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Point &p = poly[i], &q = poly[(i + 1) % n];
        if (p.t == q.t) {
            if (p.t == row) {
                note(p.s);
                note(q.s);
            }
        } else if (min(p.t, q.t) <= row && row <= max(p.t, q.t)) {
            note(p.s + (row - p.t) * (q.s - p.s) / (q.t - p.t));
        }
    }
    return any;
}

template <class F> void for_each_row(const Polygon &poly, F &&f) {
    if (poly.empty())
        return;
    Rational tmin = poly[0].t, tmax = poly[0].t;
    for (const auto &p : poly) {
        tmin = min(tmin, p.t);
        tmax = max(tmax, p.t);
    }
    for (Integer t = tmin.ceil(); t <= tmax.floor(); ++t) {
        Rational lo, hi;
        if (!row_range(poly, Rational(t), lo, hi))
            continue;
        Integer a = lo.ceil(), b = hi.floor();
        if (a <= b)
            f(t, a, b);
    }
}

} // namespace

std::vector<LatticePoint> lattice_points(const Polygon &poly) {
    std::vector<LatticePoint> out;
    for_each_row(poly, [&](const Integer &t, const Integer &a, const Integer &b) {
        for (Integer s = a; s <= b; ++s)
            out.push_back({s.get_si(), t.get_si()});
    });
    return out;
}

Integer lattice_sum_s(const Polygon &poly) {
    Integer total(0);
    for_each_row(poly, [&](const Integer &, const Integer &a, const Integer &b) {
        total += (a + b) * (b - a + 1) / 2;
    });
    return total;
}

Integer lattice_count(const Polygon &poly) {
    Integer total(0);
    for_each_row(poly, [&](const Integer &, const Integer &a, const Integer &b) { total += b - a + 1; });
    return total;
}

InstantiatedPolygon instantiate(const RegionSpec &region, long m) {
    if (m < 1)
        throw DomainError("m must be a positive integer");
    InstantiatedPolygon out;
    out.vertices = dedupe_cyclic(region.at(m));
    if (!is_convex_cycle(out.vertices))
        throw DomainError("region is not convex at m = " + std::to_string(m));
    out.degenerate = area(out.vertices).is_zero();
    return out;
}

Integer lattice_sum_s(const RegionSpec &region, long m) {
    return lattice_sum_s(instantiate(region, m).vertices);
}

std::set<LatticePoint> lattice_points_union(const std::vector<RegionSpec> &pieces, long m) {
    std::set<LatticePoint> pts;
    for (const auto &piece : pieces)
        for (const auto &p : lattice_points(instantiate(piece, m).vertices))
            pts.insert(p);
    return pts;
}

Integer lattice_sum_s_union(const std::vector<RegionSpec> &pieces, long m) {
    if (pieces.size() == 1)
        return lattice_sum_s(pieces[0], m);
    Integer total(0);
    for (const auto &p : lattice_points_union(pieces, m))
        total += p.first;
    return total;
}

std::string CubicPoly::str() const {
    return c3.str() + "*m^3 + " + c2.str() + "*m^2 + " + c1.str() + "*m + " + c0.str();
}

CubicPoly cubic_fit(const std::vector<std::pair<Rational, Rational>> &samples) {
    if (samples.size() < 4)
        throw FitError("cubic fit needs at least four samples");
    for (std::size_t i = 0; i < samples.size(); ++i)
        for (std::size_t j = i + 1; j < samples.size(); ++j)
            if (samples[i].first == samples[j].first)
                throw FitError("cubic fit needs distinct sample points");
    // Vandermonde system on the first four samples.
    std::vector<std::vector<Rational>> a(4, std::vector<Rational>(5));
    for (int i = 0; i < 4; ++i) {
        Rational p(1);
        for (int j = 0; j < 4; ++j) {
            a[i][j] = p;
            p *= samples[i].first;
        }
        a[i][4] = samples[i].second;
    }
    for (int c = 0; c < 4; ++c) {
        int piv = c;
        while (a[piv][c].is_zero())
            ++piv;
        std::swap(a[c], a[piv]);
        for (int r = 0; r < 4; ++r) {
            if (r == c || a[r][c].is_zero())
                continue;
            Rational k = a[r][c] / a[c][c];
            for (int j = c; j < 5; ++j)
                a[r][j] -= k * a[c][j];
        }
    }
    CubicPoly out{a[3][4] / a[3][3], a[2][4] / a[2][2], a[1][4] / a[1][1], a[0][4] / a[0][0]};
    std::string residuals;
    for (std::size_t i = 4; i < samples.size(); ++i) {
        Rational r = samples[i].second - out.eval(samples[i].first);
        if (!r.is_zero())
            residuals += " m=" + samples[i].first.str() + ":" + r.str();
    }
    if (!residuals.empty())
        throw FitError("samples are not on one cubic; residuals" + residuals);
    return out;
}

Rational leading_coefficient(const RegionSpec &region) {
    Polygon unit = region.slope_polygon();
    if (!is_simple_cycle(unit))
        throw DomainError("region asymptotics are self-intersecting");
    return first_moment_s(unit);
}

Rational leading_coefficient(const std::vector<RegionSpec> &pieces) {
    Rational total(0);
    for (const auto &p : pieces)
        total += leading_coefficient(p);
    return total;
}

long lattice_period(const RegionSpec &region) {
    Integer l(1);
    for (const auto &[s, t] : region.vertices)
        for (const auto *v : {&s, &t}) {
            l = lcm(l, v->slope.den());
            l = lcm(l, v->offset.den());
        }
    return l.get_si();
}

long lattice_period(const std::vector<RegionSpec> &pieces) {
    long l = 1;
    for (const auto &p : pieces)
        l = std::lcm(l, lattice_period(p));
    return l;
}

SumFit fit_lattice_sums(const std::vector<RegionSpec> &pieces, long k0) {
    long L = lattice_period(pieces);
    SumFit out;
    std::vector<std::pair<Rational, Rational>> pts;
    for (long k = k0; k < k0 + 5; ++k) {
        long m = L * k;
        Integer v = lattice_sum_s_union(pieces, m);
        out.samples.push_back({m, v});
        pts.push_back({Rational(m), Rational(v)});
    }
    out.cubic = cubic_fit(pts);
    return out;
}

} // namespace dpcert
