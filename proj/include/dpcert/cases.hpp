#pragma once

#include "dpcert/injection.hpp"
#include "dpcert/newton.hpp"
#include "dpcert/polynomial.hpp"
#include "dpcert/projection.hpp"
#include "dpcert/regions.hpp"

#include <optional>
#include <random>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace dpcert {

// Local chart the monomials live in: affine plane of P2, or the (2m,2m)
// bidegree chart of P1xP1.
enum class Chart { P2, Bidegree };

enum class DerivationKind {
    Equal,      // projection equals the target piece
    Contained,  // projection lies inside the authoritative region
    Selection,  // projection is the outer region; the target piece is its
                // greedy (largest s first) complement of the other pieces
    Comparison, // projection equals the comparison region, whose moment is
                // dominated by the authoritative one
};

std::string kind_name(DerivationKind k);

struct Derivation {
    std::string label;
    ConstraintSystem system;
    DerivationKind kind = DerivationKind::Equal;
    int piece = 0;
};

struct CaseSpec {
    std::string surface; // dp1..dp6, p2, p1xp1
    int degree = 0;      // (-K)^2, so m*ell_m has leading coefficient degree/2
    std::string label;
    std::string title;
    Chart chart = Chart::P2;
    // Authoritative region: interior-disjoint convex pieces, first piece is C_m
    // when generators are given.
    std::vector<RegionSpec> pieces;
    std::optional<RegionSpec> comparison;
    std::vector<std::string> generators;
    std::vector<std::vector<std::string>> tangent_bases;
    MonomialOrder order = MonomialOrder::GrlexXY;
    std::vector<Derivation> derivations;
    std::optional<Rational> printed_ratio;
    bool count_exact = false; // C_m already has ell_m monomials
};

const std::vector<CaseSpec> &case_registry();
std::vector<std::string> surfaces();
// Throws DomainError for an unknown surface or label.
const CaseSpec &find_case(std::string_view surface, std::string_view label);
std::vector<const CaseSpec *> cases_of(std::string_view surface);

Rational case_kappa(const CaseSpec &c);
Rational case_ratio(const CaseSpec &c);

// n_i >= 0, sum n_i = m, (s, t) = sum n_i * exponent(generator_i)
ConstraintSystem generator_system(const std::vector<std::string> &generators);
std::vector<Monomial2> generator_monomials(const std::vector<std::string> &generators);
// Distinct products of m generators.
std::set<LatticePoint> generator_products(const std::vector<std::string> &generators, long m);

struct DerivationCheck {
    std::string label;
    DerivationKind kind;
    RegionSpec projected;
    bool ok = false;
    std::string detail;
};

std::vector<DerivationCheck> check_derivations(const CaseSpec &c);

// Finite-m maximum of sum s: all of C_m plus the ell_m - |C_m| largest-s
// points of the outer region outside C_m. Requires a Selection derivation.
Integer greedy_vm(const CaseSpec &c, long m);

struct CaseCertificate {
    std::string label;
    std::string title;
    std::vector<RegionSpec> pieces;
    Rational kappa;
    Rational ratio;
    std::optional<Rational> printed;
    bool matches_printed = true;
    std::vector<std::pair<long, Integer>> samples; // (m, lattice sum of s)
    CubicPoly fit;
    bool fit_agrees = false;
    std::vector<DerivationCheck> checks;
};

struct DeltaCertificate {
    std::string surface;
    std::vector<CaseCertificate> cases;
    Rational bound;
    std::optional<Rational> expected;
    std::optional<Rational> toric_upper;
    std::vector<std::string> notes;
    bool all_matched() const;
};

// Lower bounds of the main theorem, and 1 for the surfaces with delta = 1.
std::optional<Rational> expected_delta(std::string_view surface);

CaseCertificate certify_case(const CaseSpec &c);
DeltaCertificate delta_lower_bound(std::string_view surface);

struct Figure1Polygon {
    int panel;
    Polygon polygon;
    Rational label;
};

const std::vector<Figure1Polygon> &figure1_polygons();

// (3m+1)(3m+2)/2
long p2_ell(long m);
// Monomials of degree <= 3m mixed by a random unimodular integer matrix.
std::vector<BiPoly> random_p2_basis(long m, std::mt19937_64 &rng);
std::vector<BiPoly> monomial_p2_basis(long m);

struct AnchorReport {
    Assignment assignment;
    Monomial2 anchor;
    long threshold = 0; // m * ell_m
    int factors = 0;    // basis elements vanishing at the origin
    CertifiedBound result;
    bool certified = false; // result.bound >= 1 / threshold
};

AnchorReport verify_anchor_bound(long m, const std::vector<BiPoly> &basis);

} // namespace dpcert
