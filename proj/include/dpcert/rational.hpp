#pragma once

#include <compare>
#include <concepts>
#include <cstdint>
#include <gmpxx.h>
#include <ostream>
#include <string>
#include <string_view>

namespace dpcert {

using Integer = mpz_class;

// Exact fraction, always reduced with positive denominator.
class Rational {
  public:
    Rational() = default;
    template <std::integral I> Rational(I n) : q_(static_cast<long>(n)) {}
    Rational(long n, long d);
    Rational(const Integer &n) : q_(n) {}
    Rational(const Integer &n, const Integer &d);
    explicit Rational(const mpq_class &q) : q_(q) { q_.canonicalize(); }

    // Accepts "p" or "p/q" with optional sign; throws ParseError.
    static Rational parse(std::string_view text);

    Integer num() const { return q_.get_num(); }
    Integer den() const { return q_.get_den(); }
    const mpq_class &raw() const { return q_; }

    int sign() const { return sgn(q_); }
    bool is_zero() const { return sgn(q_) == 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    Integer floor() const;
    Integer ceil() const;
    Rational abs() const { return Rational(::abs(q_)); }
    Rational inverse() const;
    double to_double() const { return q_.get_d(); }

    std::string str() const;
    // Truncated decimal expansion with k digits after the point.
    std::string decimal(int k) const;

    Rational &operator+=(const Rational &o) { q_ += o.q_; return *this; }
    Rational &operator-=(const Rational &o) { q_ -= o.q_; return *this; }
    Rational &operator*=(const Rational &o) { q_ *= o.q_; return *this; }
    Rational &operator/=(const Rational &o);

    friend Rational operator+(Rational a, const Rational &b) { return a += b; }
    friend Rational operator-(Rational a, const Rational &b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational &b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational &b) { return a /= b; }
    Rational operator-() const { return Rational(mpq_class(-q_)); }

    friend bool operator==(const Rational &a, const Rational &b) { return a.q_ == b.q_; }
    friend std::strong_ordering operator<=>(const Rational &a, const Rational &b) {
        int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

  private:
    mpq_class q_;
};

std::ostream &operator<<(std::ostream &os, const Rational &r);

Rational pow(const Rational &base, unsigned e);
Rational min(const Rational &a, const Rational &b);
Rational max(const Rational &a, const Rational &b);
Integer binomial(unsigned n, unsigned k);

} // namespace dpcert
