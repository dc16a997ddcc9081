#pragma once

#include "dpcert/rational.hpp"

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace dpcert {

enum class ToricId { P2, P1xP1, dP6, dP7, F1 };

std::string toric_name(ToricId id);
std::optional<ToricId> parse_toric(std::string_view name);

// (a, b, c) for x^a y^b z^c with a+b+c = 3m; for P1xP1 (a, b, 0) stands for
// x^a u^{2m-a} y^b v^{2m-b}.
using Exponent = std::array<int, 3>;

// Vanishing order along a torus-invariant curve: an affine form in (a,b,c,m).
struct BoundaryDivisor {
    std::string id;
    std::array<long, 4> form;
    long order(const Exponent &e, long m) const {
        return form[0] * e[0] + form[1] * e[1] + form[2] * e[2] + form[3] * m;
    }
};

struct ToricSurface {
    ToricId id;
    int degree; // (-K)^2
    std::vector<BoundaryDivisor> boundary;
};

const ToricSurface &toric_surface(ToricId id);

// h^0(-mK) = d m (m+1) / 2 + 1
Integer ell(int degree, long m);

std::vector<Exponent> monomial_basis(ToricId id, long m);

// (sum of orders over the basis) / (m * ell_m); throws DomainError for an
// unknown boundary id.
Rational divisor_coefficient(ToricId id, long m, std::string_view boundary);

struct ToricBound {
    Rational bound;
    std::string witness; // boundary divisor attaining the maximum coefficient
};

ToricBound delta_m_upper(ToricId id, long m);

// Limit from exact cubic fits of m*ell_m and of each divisor's order sum.
Rational delta_upper_limit(ToricId id);

} // namespace dpcert
