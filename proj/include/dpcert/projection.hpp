#pragma once

#include "dpcert/regions.hpp"

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace dpcert {

// Linear form over named variables plus a constant affine in m.
struct LinExpr {
    std::map<std::string, Rational> coeffs;
    AffineInM constant;

    // Grammar: sums/differences of [number [*]] name, numbers, m, and
    // parenthesised sub-expressions scaled by numbers. "m" is the parameter.
    static LinExpr parse(std::string_view text);
    bool is_constant() const;
    std::string str() const;

    LinExpr &operator+=(const LinExpr &o);
    LinExpr &operator-=(const LinExpr &o);
    LinExpr &operator*=(const Rational &k);
    friend LinExpr operator+(LinExpr a, const LinExpr &b) { return a += b; }
    friend LinExpr operator-(LinExpr a, const LinExpr &b) { return a -= b; }
    friend LinExpr operator*(LinExpr a, const Rational &k) { return a *= k; }
};

// Every declared variable is implicitly non-negative.
struct ConstraintSystem {
    std::vector<std::string> variables;
    std::vector<LinExpr> inequalities; // each expr >= 0
    LinExpr s_expr;
    LinExpr t_expr;
    std::vector<std::string> source; // the inequalities as written

    // Each relation is "lhs <= rhs", "lhs >= rhs" or "lhs = rhs".
    static ConstraintSystem build(std::vector<std::string> variables,
                                  const std::vector<std::string> &relations, std::string_view s,
                                  std::string_view t);
    void add_relation(std::string_view relation);
};

class ProjectionError : public Error {
  public:
    using Error::Error;
};

// Projects the system onto (s, t) for symbolic m >= 1.
RegionSpec project(const ConstraintSystem &system);

// Feasible (s,t) polygon of the system at a fixed m (independent of project's
// symbolic handling; used to validate it).
Polygon project_at(const ConstraintSystem &system, long m);

bool region_equal(const RegionSpec &a, const RegionSpec &b);
// Canonical vertex cycle: repeated and always-collinear vertices dropped,
// counterclockwise, starting at the least vertex.
RegionSpec canonical_region(const RegionSpec &r);

// inner is covered by the union of interior-disjoint convex pieces, checked
// by areas at m = 1..8.
bool region_contained(const RegionSpec &inner, const std::vector<RegionSpec> &pieces);

} // namespace dpcert
