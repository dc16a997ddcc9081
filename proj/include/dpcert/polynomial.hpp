#pragma once

#include "dpcert/rational.hpp"

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace dpcert {

// Exponent pair of x^s y^t.
struct Monomial2 {
    int s = 0;
    int t = 0;
    int degree() const { return s + t; }
    friend auto operator<=>(const Monomial2 &, const Monomial2 &) = default;
};

std::string monomial_str(Monomial2 mono);

enum class MonomialOrder { GrlexXY, GrlexYX, DiagonalFirst };

std::string order_name(MonomialOrder order);
std::optional<MonomialOrder> parse_order(std::string_view name);
// Strict "comes before" relation of the order.
bool precedes(MonomialOrder order, Monomial2 a, Monomial2 b);
// Every monomial of total degree <= cap, sorted ascending in the order.
std::vector<Monomial2> monomials_up_to(MonomialOrder order, int cap);

struct Weight {
    int wx = 1;
    int wy = 1;
    Weight() = default;
    // Reduces by the gcd; both entries must be positive.
    Weight(long wx, long wy);
    friend bool operator==(const Weight &, const Weight &) = default;
};

// Sparse bivariate polynomial over Q; zero coefficients are never stored.
class BiPoly {
  public:
    using TermMap = std::map<Monomial2, Rational>;

    BiPoly() = default;
    BiPoly(const Rational &c);
    static BiPoly monomial(Monomial2 mono, const Rational &c = Rational(1));
    static BiPoly x() { return monomial({1, 0}); }
    static BiPoly y() { return monomial({0, 1}); }

    const TermMap &terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    Rational coefficient(Monomial2 mono) const;
    void add_term(Monomial2 mono, const Rational &c);

    int total_degree() const;
    int min_total_degree() const;
    int degree_x() const;
    Rational eval(const Rational &a, const Rational &b) const;
    BiPoly swap_xy() const;
    // Least monomial of the support in the given order.
    Monomial2 leading_monomial(MonomialOrder order) const;

    BiPoly &operator+=(const BiPoly &o);
    BiPoly &operator-=(const BiPoly &o);
    BiPoly &operator*=(const BiPoly &o);
    friend BiPoly operator+(BiPoly a, const BiPoly &b) { return a += b; }
    friend BiPoly operator-(BiPoly a, const BiPoly &b) { return a -= b; }
    friend BiPoly operator*(BiPoly a, const BiPoly &b) { return a *= b; }
    BiPoly operator-() const;
    friend bool operator==(const BiPoly &, const BiPoly &) = default;

    // Same grammar as parse_bipoly; zero prints as "0".
    std::string str() const;

  private:
    TermMap terms_;
};

BiPoly pow(const BiPoly &f, unsigned e);

// Terms joined by +/-; term = [coef *] [x[^n]] [*] [y[^n]].
BiPoly parse_bipoly(std::string_view text);

// (min of wx*s + wy*t over the support, sum of the terms attaining it).
std::pair<long, BiPoly> weighted_leading(const BiPoly &f, Weight w);
bool is_weighted_homogeneous(const BiPoly &f, Weight w);

// f(x - A*y^beta, y).
BiPoly shear(const BiPoly &f, const Rational &A, int beta);

// Dense univariate polynomial, coefficients from degree 0 upward.
class UniPoly {
  public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Rational> coeffs);
    static UniPoly from_roots(const std::vector<Rational> &roots);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<Rational> &coeffs() const { return c_; }
    Rational coeff(int i) const;
    Rational leading() const;
    Rational eval(const Rational &u) const;
    UniPoly derivative() const;
    UniPoly monic() const;

    UniPoly &operator+=(const UniPoly &o);
    UniPoly &operator-=(const UniPoly &o);
    friend UniPoly operator+(UniPoly a, const UniPoly &b) { return a += b; }
    friend UniPoly operator-(UniPoly a, const UniPoly &b) { return a -= b; }
    friend UniPoly operator*(const UniPoly &a, const UniPoly &b);
    UniPoly operator*(const Rational &k) const;
    friend bool operator==(const UniPoly &, const UniPoly &) = default;

    std::string str(char var = 'u') const;

  private:
    void trim();
    std::vector<Rational> c_;
};

std::pair<UniPoly, UniPoly> divmod(const UniPoly &a, const UniPoly &b);
UniPoly gcd(const UniPoly &a, const UniPoly &b);
UniPoly pow(const UniPoly &p, unsigned e);

struct SquarefreeFactor {
    UniPoly factor; // monic
    int multiplicity;
};
// Yun decomposition: p = lc * prod factor^mult, factors monic, squarefree,
// pairwise coprime; non-constant factors only, ascending multiplicity.
std::vector<SquarefreeFactor> squarefree_decomposition(const UniPoly &p);

// Distinct rational roots, ascending.
std::vector<Rational> rational_roots(const UniPoly &p);

} // namespace dpcert
