#pragma once

#include "dpcert/polynomial.hpp"

#include <optional>
#include <string>
#include <vector>

namespace dpcert {

// Lower-left boundary of the Newton polygon: s strictly increasing,
// t strictly decreasing.
struct NewtonPolygon {
    std::vector<Monomial2> vertices;
    // Whether (p.s, p.t) lies in conv(support) + R_{>=0}^2.
    bool contains(const Rational &s, const Rational &t) const;
};

NewtonPolygon newton_polygon(const BiPoly &f);

struct DiagonalCrossing {
    // Ray: every vertex lies on one side of s = t and the diagonal meets
    // the unbounded horizontal (all s < t) or vertical (all s > t) side.
    enum class Kind { Vertex, Edge, HorizontalRay, VerticalRay };
    Kind kind = Kind::Vertex;
    Monomial2 vertex;       // Vertex, or the ray's starting vertex
    Monomial2 edge_from;    // Edge: endpoint with the smaller s
    Monomial2 edge_to;
    Weight weight;          // Edge: primitive normal
};

DiagonalCrossing diagonal_crossing(const NewtonPolygon &np);

struct FactorBlock {
    int alpha = 1;        // x-degree of each factor x^alpha + ...
    int beta = 1;         // y-degree of each factor
    int multiplicity = 1; // c_i
    int count = 1;        // number of distinct factors with this multiplicity
    UniPoly squarefree;   // their product in the dehomogenized variable
};

struct FactorProfile {
    int a = 0;
    int b = 0;
    std::vector<FactorBlock> blocks;
    int max_multiplicity = 0; // 0 when fw is a monomial
    // Maximal factor of the form x + A1 * y^beta (alpha = 1) with rational A1;
    // A1 is the root of the dehomogenized polynomial in u = x / y^beta.
    std::optional<Rational> root;
    int beta = 0;
    // The shear f(x - A y^beta, y) that turns the maximal factor into x.
    std::optional<Rational> shear_coefficient() const {
        if (!root)
            return std::nullopt;
        return -*root;
    }
    // All multiplicities c_i, one entry per distinct factor.
    std::vector<int> multiplicities() const;
};

FactorProfile factor_profile(const BiPoly &fw, Weight w);

struct IterationRecord {
    int iteration = 0;
    std::string crossing; // "vertex", "edge", "ray"
    Weight weight;
    long wmult = 0;
    int a = 0;
    int b = 0;
    std::vector<int> multiplicities;
    Rational stage_bound;
    bool stage_exact = false;
    std::string action; // "done", "shear", "swap", "stalled"
    std::optional<Rational> shear_A;
    int shear_beta = 0;
};

struct CertifiedBound {
    Rational bound;
    bool exact = false;
    std::vector<IterationRecord> trace;
    std::string status = "converged"; // or "stalled: ..."
};

CertifiedBound lct_weighted_homog(const BiPoly &fw, Weight w);

struct LctOptions {
    int max_iterations = 64;
    // When given, every polynomial in the loop must keep (anchor, anchor)
    // inside its Newton polygon; shears beyond slope anchor are impossible.
    std::optional<int> anchor;
};

CertifiedBound lct_lower_bound(const BiPoly &f, int threshold, const LctOptions &opt = {});

Monomial2 product_anchor(const std::vector<Monomial2> &assigned);

} // namespace dpcert
