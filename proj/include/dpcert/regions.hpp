#pragma once

#include "dpcert/error.hpp"
#include "dpcert/rational.hpp"

#include <set>
#include <string>
#include <utility>
#include <vector>

namespace dpcert {

// slope*m + offset
struct AffineInM {
    Rational slope;
    Rational offset;
    Rational at(long m) const { return slope * Rational(m) + offset; }
    friend bool operator==(const AffineInM &, const AffineInM &) = default;
    std::string str() const;
};

struct Point {
    Rational s;
    Rational t;
    friend bool operator==(const Point &, const Point &) = default;
    friend auto operator<=>(const Point &a, const Point &b) {
        if (auto c = a.s <=> b.s; c != 0)
            return c;
        return a.t <=> b.t;
    }
};

using Polygon = std::vector<Point>;

std::string polygon_str(const Polygon &poly);

struct RegionSpec {
    std::vector<std::pair<AffineInM, AffineInM>> vertices;

    // Region whose vertices are m times the given points.
    static RegionSpec scaled(const Polygon &unit);
    Polygon at(long m) const;
    // Vertex slopes: the region at m = 1 with offsets dropped.
    Polygon slope_polygon() const;
    std::string str() const;
};

struct InstantiatedPolygon {
    Polygon vertices;
    bool degenerate = false; // empty, point or segment
};

// Throws DomainError when the vertex cycle is not convex.
InstantiatedPolygon instantiate(const RegionSpec &region, long m);

// Convex (possibly degenerate) vertex cycle in either orientation.
bool is_convex_cycle(const Polygon &poly);
// Non-self-intersecting cycle (convex or not).
bool is_simple_cycle(const Polygon &poly);
Rational signed_area(const Polygon &poly);
Rational area(const Polygon &poly);
// Double integral of s over a simple polygon by fan triangulation.
Rational first_moment_s(const Polygon &poly);
// Drops repeated and collinear vertices; counterclockwise; starts at the
// lexicographically least vertex. Degenerate input keeps its extreme points.
Polygon canonical_polygon(const Polygon &poly);
Polygon convex_hull(std::vector<Point> pts);
bool contains(const Polygon &convex, const Point &p);
// Intersection of two convex polygons (Sutherland-Hodgman, exact).
Polygon clip_convex(const Polygon &subject, const Polygon &clip);

using LatticePoint = std::pair<long, long>;
std::vector<LatticePoint> lattice_points(const Polygon &convex);
Integer lattice_sum_s(const Polygon &convex);
Integer lattice_count(const Polygon &convex);
Integer lattice_sum_s(const RegionSpec &region, long m);
// Sum of s over the union of several regions, shared points counted once.
Integer lattice_sum_s_union(const std::vector<RegionSpec> &pieces, long m);
std::set<LatticePoint> lattice_points_union(const std::vector<RegionSpec> &pieces, long m);

class FitError : public Error {
  public:
    using Error::Error;
};

struct CubicPoly {
    Rational c3, c2, c1, c0;
    Rational eval(const Rational &m) const { return ((c3 * m + c2) * m + c1) * m + c0; }
    std::string str() const;
};

// Exact interpolation through the first four samples; any further sample
// must lie on the cubic, otherwise FitError lists the residuals.
CubicPoly cubic_fit(const std::vector<std::pair<Rational, Rational>> &samples);

Rational leading_coefficient(const RegionSpec &region);
Rational leading_coefficient(const std::vector<RegionSpec> &pieces);

// lcm of the vertex denominators; lattice sums are polynomial on multiples.
long lattice_period(const RegionSpec &region);
long lattice_period(const std::vector<RegionSpec> &pieces);

// Cubic fitted to the union lattice sums at m = L*k0, ..., L*(k0+3) and
// checked against m = L*(k0+4).
struct SumFit {
    std::vector<std::pair<long, Integer>> samples;
    CubicPoly cubic;
};
SumFit fit_lattice_sums(const std::vector<RegionSpec> &pieces, long k0 = 1);

} // namespace dpcert
