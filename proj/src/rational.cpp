#include "dpcert/rational.hpp"
#include "dpcert/error.hpp"

#include <cctype>

namespace dpcert {

Rational::Rational(long n, long d) : q_(n, d) {
    if (d == 0)
        throw DomainError("zero denominator");
    q_.canonicalize();
}

Rational::Rational(const Integer &n, const Integer &d) : q_(n, d) {
    if (d == 0)
        throw DomainError("zero denominator");
    q_.canonicalize();
}

static Integer parse_integer(std::string_view text, std::size_t offset) {
    std::size_t i = 0;
    bool neg = false;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
        neg = text[i] == '-';
        ++i;
    }
    if (i == text.size())
        throw ParseError("expected digits", offset + i);
    for (std::size_t j = i; j < text.size(); ++j)
        if (!std::isdigit(static_cast<unsigned char>(text[j])))
            throw ParseError("unexpected character '" + std::string(1, text[j]) + "'", offset + j);
    Integer v(std::string(text.substr(i)), 10);
    return neg ? Integer(-v) : v;
}

Rational Rational::parse(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos)
        return Rational(parse_integer(text, 0));
    Integer n = parse_integer(text.substr(0, slash), 0);
    std::string_view dtext = text.substr(slash + 1);
    if (!dtext.empty() && (dtext[0] == '+' || dtext[0] == '-'))
        throw ParseError("signed denominator", slash + 1);
    Integer d = parse_integer(dtext, slash + 1);
    if (d == 0)
        throw ParseError("zero denominator", slash + 1);
    return Rational(n, d);
}

Integer Rational::floor() const {
    Integer r;
    mpz_fdiv_q(r.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
    return r;
}

Integer Rational::ceil() const {
    Integer r;
    mpz_cdiv_q(r.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
    return r;
}

Rational Rational::inverse() const {
    if (is_zero())
        throw DomainError("inverse of zero");
    return Rational(mpq_class(1 / q_));
}

Rational &Rational::operator/=(const Rational &o) {
    if (o.is_zero())
        throw DomainError("division by zero");
    q_ /= o.q_;
    return *this;
}

std::string Rational::str() const {
    if (is_integer())
        return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

std::string Rational::decimal(int k) const {
    Integer n = ::abs(q_.get_num());
    Integer d = q_.get_den();
    Integer ip = n / d;
    Integer rem = n % d;
    std::string out = (sign() < 0 ? "-" : "") + ip.get_str();
    if (k > 0) {
        out += '.';
        for (int i = 0; i < k; ++i) {
            rem *= 10;
            Integer digit = rem / d;
            rem %= d;
            out += digit.get_str();
        }
    }
    return out;
}

std::ostream &operator<<(std::ostream &os, const Rational &r) { return os << r.str(); }

Rational pow(const Rational &base, unsigned e) {
    Rational r(1);
    Rational b = base;
    while (e) {
        if (e & 1u)
            r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

Rational min(const Rational &a, const Rational &b) { return b < a ? b : a; }
Rational max(const Rational &a, const Rational &b) { return a < b ? b : a; }

Integer binomial(unsigned n, unsigned k) {
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

} // namespace dpcert
