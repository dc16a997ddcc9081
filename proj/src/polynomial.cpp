#include "dpcert/polynomial.hpp"
#include "dpcert/error.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <numeric>
#include <sstream>

namespace dpcert {

std::string monomial_str(Monomial2 mono) {
    if (mono.s == 0 && mono.t == 0)
        return "1";
    std::string out;
    if (mono.s > 0)
        out += mono.s == 1 ? "x" : "x^" + std::to_string(mono.s);
    if (mono.t > 0) {
        if (!out.empty())
            out += '*';
        out += mono.t == 1 ? "y" : "y^" + std::to_string(mono.t);
    }
    return out;
}

// ---- orders ----

std::string order_name(MonomialOrder order) {
    switch (order) {
    case MonomialOrder::GrlexXY: return "grlex-xy";
    case MonomialOrder::GrlexYX: return "grlex-yx";
    case MonomialOrder::DiagonalFirst: return "diag";
    }
    return "?";
}

std::optional<MonomialOrder> parse_order(std::string_view name) {
    if (name == "grlex-xy")
        return MonomialOrder::GrlexXY;
    if (name == "grlex-yx")
        return MonomialOrder::GrlexYX;
    if (name == "diag")
        return MonomialOrder::DiagonalFirst;
    return std::nullopt;
}

namespace {
std::tuple<int, int, int> order_key(MonomialOrder order, Monomial2 m) {
    int d = m.degree();
    switch (order) {
    case MonomialOrder::GrlexXY: return {d, 0, m.t};
    case MonomialOrder::GrlexYX: return {d, 0, m.s};
    case MonomialOrder::DiagonalFirst: return {d, m.s == m.t ? 0 : 1, m.t};
    }
    return {d, 0, m.t};
}
} // namespace

bool precedes(MonomialOrder order, Monomial2 a, Monomial2 b) {
    return order_key(order, a) < order_key(order, b);
}

std::vector<Monomial2> monomials_up_to(MonomialOrder order, int cap) {
    std::vector<Monomial2> out;
    for (int d = 0; d <= cap; ++d)
        for (int s = 0; s <= d; ++s)
            out.push_back({s, d - s});
    std::sort(out.begin(), out.end(),
              [order](Monomial2 a, Monomial2 b) { return precedes(order, a, b); });
    return out;
}

Weight::Weight(long x, long y) {
    if (x < 1 || y < 1)
        throw DomainError("weights must be positive");
    long g = std::gcd(x, y);
    wx = static_cast<int>(x / g);
    wy = static_cast<int>(y / g);
}

// ---- BiPoly ----

BiPoly::BiPoly(const Rational &c) {
    if (!c.is_zero())
        terms_[{0, 0}] = c;
}

BiPoly BiPoly::monomial(Monomial2 mono, const Rational &c) {
    if (mono.s < 0 || mono.t < 0)
        throw DomainError("negative exponent");
    BiPoly p;
    p.add_term(mono, c);
    return p;
}

Rational BiPoly::coefficient(Monomial2 mono) const {
    auto it = terms_.find(mono);
    return it == terms_.end() ? Rational(0) : it->second;
}

void BiPoly::add_term(Monomial2 mono, const Rational &c) {
    if (c.is_zero())
        return;
    auto [it, fresh] = terms_.try_emplace(mono, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

int BiPoly::total_degree() const {
    int d = -1;
    for (const auto &[m, c] : terms_)
        d = std::max(d, m.degree());
    return d;
}

int BiPoly::min_total_degree() const {
    int d = std::numeric_limits<int>::max();
    for (const auto &[m, c] : terms_)
        d = std::min(d, m.degree());
    return terms_.empty() ? -1 : d;
}

int BiPoly::degree_x() const {
    int d = -1;
    for (const auto &[m, c] : terms_)
        d = std::max(d, m.s);
    return d;
}

Rational BiPoly::eval(const Rational &a, const Rational &b) const {
    Rational r(0);
    for (const auto &[m, c] : terms_)
        r += c * pow(a, m.s) * pow(b, m.t);
    return r;
}

BiPoly BiPoly::swap_xy() const {
    BiPoly p;
    for (const auto &[m, c] : terms_)
        p.terms_[{m.t, m.s}] = c;
    return p;
}

Monomial2 BiPoly::leading_monomial(MonomialOrder order) const {
    if (terms_.empty())
        throw DomainError("zero polynomial has no leading monomial");
    Monomial2 best = terms_.begin()->first;
    for (const auto &[m, c] : terms_)
        if (precedes(order, m, best))
            best = m;
    return best;
}

BiPoly &BiPoly::operator+=(const BiPoly &o) {
    for (const auto &[m, c] : o.terms_)
        add_term(m, c);
    return *this;
}

BiPoly &BiPoly::operator-=(const BiPoly &o) {
    for (const auto &[m, c] : o.terms_)
        add_term(m, -c);
    return *this;
}

BiPoly &BiPoly::operator*=(const BiPoly &o) {
    BiPoly r;
    for (const auto &[m1, c1] : terms_)
        for (const auto &[m2, c2] : o.terms_)
            r.add_term({m1.s + m2.s, m1.t + m2.t}, c1 * c2);
    *this = std::move(r);
    return *this;
}

BiPoly BiPoly::operator-() const {
    BiPoly r;
    for (const auto &[m, c] : terms_)
        r.terms_[m] = -c;
    return r;
}

std::string BiPoly::str() const {
    if (terms_.empty())
        return "0";
    std::vector<std::pair<Monomial2, Rational>> order(terms_.begin(), terms_.end());
    std::sort(order.begin(), order.end(), [](const auto &a, const auto &b) {
        if (a.first.degree() != b.first.degree())
            return a.first.degree() > b.first.degree();
        return a.first.s > b.first.s;
    });
    std::string out;
    bool first = true;
    for (const auto &[m, c] : order) {
        Rational mag = c.abs();
        if (first)
            out += c.sign() < 0 ? "-" : "";
        else
            out += c.sign() < 0 ? " - " : " + ";
        first = false;
        bool constant = m.s == 0 && m.t == 0;
        if (constant)
            out += mag.str();
        else if (mag == Rational(1))
            out += monomial_str(m);
        else
            out += mag.str() + "*" + monomial_str(m);
    }
    return out;
}

BiPoly pow(const BiPoly &f, unsigned e) {
    BiPoly r(Rational(1));
    BiPoly b = f;
    while (e) {
        if (e & 1u)
            r *= b;
        e >>= 1;
        if (e)
            b *= b;
    }
    return r;
}

// ---- parser ----

namespace {

class PolyParser {
  public:
    explicit PolyParser(std::string_view text) {
        for (std::size_t i = 0; i < text.size(); ++i)
            if (!std::isspace(static_cast<unsigned char>(text[i])))
                chars_.push_back({text[i], i});
        end_pos_ = text.size();
    }

    BiPoly run() {
        if (chars_.empty())
            throw ParseError("empty polynomial", 0);
        BiPoly out;
        bool first = true;
        while (i_ < chars_.size()) {
            int sign = 1;
            if (peek() == '+' || peek() == '-') {
                sign = peek() == '-' ? -1 : 1;
                ++i_;
            } else if (!first) {
                throw ParseError("expected '+' or '-'", pos());
            }
            first = false;
            auto [mono, coef] = term();
            out.add_term(mono, sign < 0 ? -coef : coef);
        }
        return out;
    }

  private:
    char peek() const { return i_ < chars_.size() ? chars_[i_].first : '\0'; }
    std::size_t pos() const { return i_ < chars_.size() ? chars_[i_].second : end_pos_; }

    Integer digits() {
        std::string buf;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            buf += peek();
            ++i_;
        }
        if (buf.empty())
            throw ParseError("expected digits", pos());
        return Integer(buf, 10);
    }

    std::pair<Monomial2, Rational> term() {
        Rational coef(1);
        Monomial2 mono;
        bool have_coef = false, have_var = false;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            Integer n = digits();
            Integer d(1);
            if (peek() == '/') {
                ++i_;
                std::size_t p = pos();
                d = digits();
                if (d == 0)
                    throw ParseError("zero denominator", p);
            }
            coef = Rational(n, d);
            have_coef = true;
            if (peek() == '*') {
                ++i_;
                if (peek() != 'x' && peek() != 'y')
                    throw ParseError("expected variable after '*'", pos());
            }
        }
        while (peek() == 'x' || peek() == 'y') {
            char var = peek();
            ++i_;
            long e = 1;
            if (peek() == '^') {
                ++i_;
                if (peek() == '-')
                    throw ParseError("negative exponent", pos());
                std::size_t p = pos();
                Integer v = digits();
                if (v > 1000000)
                    throw ParseError("exponent too large", p);
                e = v.get_si();
            }
            (var == 'x' ? mono.s : mono.t) += static_cast<int>(e);
            have_var = true;
            if (peek() == '*') {
                ++i_;
                if (peek() != 'x' && peek() != 'y')
                    throw ParseError("expected variable after '*'", pos());
            }
        }
        if (!have_coef && !have_var) {
            if (i_ < chars_.size())
                throw ParseError("unexpected character '" + std::string(1, peek()) + "'", pos());
            throw ParseError("expected term", pos());
        }
        return {mono, coef};
    }

    std::vector<std::pair<char, std::size_t>> chars_;
    std::size_t i_ = 0;
    std::size_t end_pos_ = 0;
};

} // namespace

BiPoly parse_bipoly(std::string_view text) { return PolyParser(text).run(); }

// ---- weights and shear ----

std::pair<long, BiPoly> weighted_leading(const BiPoly &f, Weight w) {
    if (f.is_zero())
        throw DomainError("weighted_leading of the zero polynomial");
    long best = std::numeric_limits<long>::max();
    for (const auto &[m, c] : f.terms())
        best = std::min(best, long(w.wx) * m.s + long(w.wy) * m.t);
    BiPoly fw;
    for (const auto &[m, c] : f.terms())
        if (long(w.wx) * m.s + long(w.wy) * m.t == best)
            fw.add_term(m, c);
    return {best, fw};
}

bool is_weighted_homogeneous(const BiPoly &f, Weight w) {
    if (f.is_zero())
        return false;
    return weighted_leading(f, w).second == f;
}

BiPoly shear(const BiPoly &f, const Rational &A, int beta) {
    if (beta < 1)
        throw DomainError("shear exponent must be >= 1");
    BiPoly r;
    Rational negA = -A;
    for (const auto &[m, c] : f.terms()) {
        Rational pk(1);
        for (int k = 0; k <= m.s; ++k) {
            r.add_term({m.s - k, m.t + beta * k}, c * Rational(binomial(m.s, k)) * pk);
            pk *= negA;
        }
    }
    return r;
}

// ---- UniPoly ----

UniPoly::UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

UniPoly UniPoly::from_roots(const std::vector<Rational> &roots) {
    UniPoly p({Rational(1)});
    for (const auto &r : roots)
        p = p * UniPoly({-r, Rational(1)});
    return p;
}

void UniPoly::trim() {
    while (!c_.empty() && c_.back().is_zero())
        c_.pop_back();
}

Rational UniPoly::coeff(int i) const {
    return i >= 0 && i < static_cast<int>(c_.size()) ? c_[i] : Rational(0);
}

Rational UniPoly::leading() const {
    if (c_.empty())
        throw DomainError("zero polynomial has no leading coefficient");
    return c_.back();
}

Rational UniPoly::eval(const Rational &u) const {
    Rational r(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        r = r * u + *it;
    return r;
}

UniPoly UniPoly::derivative() const {
    std::vector<Rational> d;
    for (std::size_t i = 1; i < c_.size(); ++i)
        d.push_back(c_[i] * Rational(static_cast<long>(i)));
    return UniPoly(std::move(d));
}

UniPoly UniPoly::monic() const {
    if (c_.empty())
        return *this;
    return *this * leading().inverse();
}

UniPoly &UniPoly::operator+=(const UniPoly &o) {
    if (o.c_.size() > c_.size())
        c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i)
        c_[i] += o.c_[i];
    trim();
    return *this;
}

UniPoly &UniPoly::operator-=(const UniPoly &o) {
    if (o.c_.size() > c_.size())
        c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i)
        c_[i] -= o.c_[i];
    trim();
    return *this;
}

UniPoly operator*(const UniPoly &a, const UniPoly &b) {
    if (a.is_zero() || b.is_zero())
        return UniPoly();
    std::vector<Rational> r(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            r[i + j] += a.c_[i] * b.c_[j];
    return UniPoly(std::move(r));
}

UniPoly UniPoly::operator*(const Rational &k) const {
    std::vector<Rational> r(c_);
    for (auto &v : r)
        v *= k;
    return UniPoly(std::move(r));
}

std::string UniPoly::str(char var) const {
    if (c_.empty())
        return "0";
    BiPoly p;
    for (std::size_t i = 0; i < c_.size(); ++i)
        p.add_term({static_cast<int>(i), 0}, c_[i]);
    std::string s = p.str();
    std::replace(s.begin(), s.end(), 'x', var);
    return s;
}

std::pair<UniPoly, UniPoly> divmod(const UniPoly &a, const UniPoly &b) {
    if (b.is_zero())
        throw DomainError("polynomial division by zero");
    std::vector<Rational> rem = a.coeffs();
    int db = b.degree();
    Rational lb = b.leading();
    std::vector<Rational> quo(std::max(0, a.degree() - db + 1));
    for (int i = a.degree(); i >= db; --i) {
        Rational q = rem[i] / lb;
        if (q.is_zero())
            continue;
        quo[i - db] = q;
        for (int j = 0; j <= db; ++j)
            rem[i - db + j] -= q * b.coeffs()[j];
    }
    return {UniPoly(std::move(quo)), UniPoly(std::move(rem))};
}

UniPoly gcd(const UniPoly &a, const UniPoly &b) {
    UniPoly x = a, y = b;
    while (!y.is_zero()) {
        UniPoly r = divmod(x, y).second;
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

UniPoly pow(const UniPoly &p, unsigned e) {
    UniPoly r({Rational(1)});
    for (unsigned i = 0; i < e; ++i)
        r = r * p;
    return r;
}

std::vector<SquarefreeFactor> squarefree_decomposition(const UniPoly &p) {
    if (p.is_zero())
        throw DomainError("squarefree decomposition of the zero polynomial");
    std::vector<SquarefreeFactor> out;
    if (p.degree() == 0)
        return out;
    UniPoly f = p.monic();
    UniPoly df = f.derivative();
    UniPoly a = gcd(f, df);
    UniPoly b = divmod(f, a).first;
    UniPoly c = divmod(df, a).first;
    UniPoly d = c - b.derivative();
    int i = 1;
    while (b.degree() > 0) {
        UniPoly g = gcd(b, d);
        if (g.degree() > 0)
            out.push_back({g, i});
        b = divmod(b, g).first;
        c = divmod(d, g).first;
        d = c - b.derivative();
        ++i;
    }
    return out;
}

namespace {

// Integer-coefficient primitive multiple.
std::vector<Integer> integer_coeffs(const UniPoly &p) {
    Integer l(1);
    for (const auto &c : p.coeffs())
        l = lcm(l, c.den());
    std::vector<Integer> out;
    Integer g(0);
    for (const auto &c : p.coeffs()) {
        out.push_back(c.num() * (l / c.den()));
        g = gcd(g, out.back());
    }
    for (auto &c : out)
        c /= g;
    if (out.back() < 0)
        for (auto &c : out)
            c = -c;
    return out;
}

int sign_changes(const std::vector<UniPoly> &chain, const Rational &x) {
    int changes = 0, last = 0;
    for (const auto &q : chain) {
        int s = q.eval(x).sign();
        if (s == 0)
            continue;
        if (last != 0 && s != last)
            ++changes;
        last = s;
    }
    return changes;
}

} // namespace

std::vector<Rational> rational_roots(const UniPoly &p) {
    if (p.is_zero())
        throw DomainError("roots of the zero polynomial");
    std::vector<Rational> out;
    if (p.degree() < 1)
        return out;
    UniPoly sq = divmod(p, gcd(p, p.derivative())).first;
    auto ic = integer_coeffs(sq);
    std::vector<Rational> rc;
    for (const auto &c : ic)
        rc.emplace_back(c);
    UniPoly q(rc);
    // A rational root r of a primitive integer polynomial has lc*r integral.
    Integer lc = ic.back();
    if (q.degree() == 1) {
        out.push_back(-q.coeff(0) / q.coeff(1));
        return out;
    }
    std::vector<UniPoly> chain{q, q.derivative()};
    while (chain.back().degree() > 0) {
        UniPoly r = divmod(chain[chain.size() - 2], chain.back()).second;
        if (r.is_zero())
            break;
        chain.push_back(r * Rational(-1));
    }
    Rational bound(1);
    for (int i = 0; i < q.degree(); ++i)
        bound = max(bound, (q.coeff(i) / q.leading()).abs() + Rational(1));
    Rational step = Rational(Integer(1), lc);
    std::vector<std::pair<Rational, Rational>> stack{{-bound, bound}};
    while (!stack.empty()) {
        auto [lo, hi] = stack.back();
        stack.pop_back();
        int count = sign_changes(chain, lo) - sign_changes(chain, hi);
        if (count == 0)
            continue;
        if (hi - lo < step) {
            Integer k = (hi * Rational(lc)).floor();
            Rational cand(k, lc);
            if (lo < cand && q.eval(cand).is_zero())
                out.push_back(cand);
            continue;
        }
        Rational mid = (lo + hi) / Rational(2);
        stack.push_back({lo, mid});
        stack.push_back({mid, hi});
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace dpcert
