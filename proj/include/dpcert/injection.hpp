#pragma once

#include "dpcert/polynomial.hpp"

#include <vector>

namespace dpcert {

using Matrix = std::vector<std::vector<Rational>>;

struct CoeffMatrix {
    Matrix rows;
    std::vector<Monomial2> columns; // ascending in the order
};

// Throws DomainError when a support exceeds the cap.
CoeffMatrix coefficient_matrix(const std::vector<BiPoly> &polys, MonomialOrder order, int degree_cap);

struct EchelonResult {
    Matrix E; // row echelon, pivots normalised to 1
    Matrix T; // M = T * E
    std::vector<std::size_t> pivots;
};

// Throws DomainError on rank deficiency.
EchelonResult row_echelon(const Matrix &M);

Matrix multiply(const Matrix &a, const Matrix &b);

struct Assignment {
    std::vector<Monomial2> monomial;   // per input polynomial
    std::vector<std::size_t> column;   // index into the coefficient matrix columns
    std::vector<Monomial2> pivot_monomials;
};

Assignment injective_assignment(const std::vector<BiPoly> &polys, MonomialOrder order);

std::vector<Monomial2> pivot_monomials(const std::vector<BiPoly> &polys, MonomialOrder order);

// Whether every polynomial sheared by x -> x - A y^beta keeps the pivot set;
// beta must be at least 2.
bool assert_shear_stability(const std::vector<BiPoly> &polys, const Rational &A, int beta, MonomialOrder order);

} // namespace dpcert
