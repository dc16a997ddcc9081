#include "dpcert/projection.hpp"

#include <algorithm>
#include <bitset>
#include <cctype>
#include <set>

namespace dpcert {

// ---- LinExpr ----

namespace {

class ExprParser {
  public:
    explicit ExprParser(std::string_view text) : text_(text) {}

    LinExpr run() {
        LinExpr e = expr();
        skip();
        if (i_ != text_.size())
            throw ParseError("unexpected character '" + std::string(1, text_[i_]) + "'", i_);
        return e;
    }

  private:
    void skip() {
        while (i_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[i_])))
            ++i_;
    }
    char peek() {
        skip();
        return i_ < text_.size() ? text_[i_] : '\0';
    }

    LinExpr expr() {
        LinExpr e = term();
        for (char c = peek(); c == '+' || c == '-'; c = peek()) {
            ++i_;
            LinExpr r = term();
            if (c == '+')
                e += r;
            else
                e -= r;
        }
        return e;
    }

    LinExpr term() {
        LinExpr e = factor();
        while (peek() == '*') {
            std::size_t at = i_;
            ++i_;
            LinExpr r = factor();
            if (e.is_constant() && e.constant.slope.is_zero())
                e = r * e.constant.offset;
            else if (r.is_constant() && r.constant.slope.is_zero())
                e *= r.constant.offset;
            else
                throw ParseError("non-linear product", at);
        }
        return e;
    }

    LinExpr factor() {
        char c = peek();
        if (c == '-') {
            ++i_;
            return factor() * Rational(-1);
        }
        if (c == '(') {
            ++i_;
            LinExpr e = expr();
            if (peek() != ')')
                throw ParseError("expected ')'", i_);
            ++i_;
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = i_;
            while (i_ < text_.size() && (std::isdigit(static_cast<unsigned char>(text_[i_])) || text_[i_] == '/'))
                ++i_;
            LinExpr e;
            try {
                e.constant.offset = Rational::parse(text_.substr(start, i_ - start));
            } catch (const ParseError &err) {
                throw ParseError("bad number", start);
            }
            // "2m", "3/2n1", "2(m-i)"
            if (i_ < text_.size() &&
                (std::isalpha(static_cast<unsigned char>(text_[i_])) || text_[i_] == '_' || text_[i_] == '('))
                return factor() * e.constant.offset;
            return e;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = i_;
            while (i_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[i_])) || text_[i_] == '_'))
                ++i_;
            std::string name(text_.substr(start, i_ - start));
            LinExpr e;
            if (name == "m")
                e.constant.slope = Rational(1);
            else
                e.coeffs[name] = Rational(1);
            return e;
        }
        throw ParseError(c ? "unexpected character '" + std::string(1, c) + "'" : "unexpected end", i_);
    }

    std::string_view text_;
    std::size_t i_ = 0;
};

} // namespace

LinExpr LinExpr::parse(std::string_view text) { return ExprParser(text).run(); }

bool LinExpr::is_constant() const { return coeffs.empty(); }

LinExpr &LinExpr::operator+=(const LinExpr &o) {
    for (const auto &[k, v] : o.coeffs) {
        coeffs[k] += v;
        if (coeffs[k].is_zero())
            coeffs.erase(k);
    }
    constant.slope += o.constant.slope;
    constant.offset += o.constant.offset;
    return *this;
}

LinExpr &LinExpr::operator-=(const LinExpr &o) { return *this += o * Rational(-1); }

LinExpr &LinExpr::operator*=(const Rational &k) {
    if (k.is_zero()) {
        coeffs.clear();
        constant = {};
        return *this;
    }
    for (auto &[name, v] : coeffs)
        v *= k;
    constant.slope *= k;
    constant.offset *= k;
    return *this;
}

std::string LinExpr::str() const {
    std::string out;
    auto put = [&](const Rational &c, const std::string &name) {
        if (c.is_zero())
            return;
        Rational mag = c.abs();
        out += out.empty() ? (c.sign() < 0 ? "-" : "") : (c.sign() < 0 ? " - " : " + ");
        if (name.empty())
            out += mag.str();
        else
            out += (mag == Rational(1) ? "" : mag.str() + "*") + name;
    };
    for (const auto &[name, c] : coeffs)
        put(c, name);
    put(constant.slope, "m");
    put(constant.offset, "");
    return out.empty() ? "0" : out;
}

ConstraintSystem ConstraintSystem::build(std::vector<std::string> variables,
                                         const std::vector<std::string> &relations, std::string_view s,
                                         std::string_view t) {
    ConstraintSystem sys;
    sys.variables = std::move(variables);
    for (const auto &v : sys.variables)
        if (v == "m" || v == "s" || v == "t")
            throw DomainError("reserved variable name '" + v + "'");
    for (const auto &r : relations)
        sys.add_relation(r);
    sys.s_expr = LinExpr::parse(s);
    sys.t_expr = LinExpr::parse(t);
    for (const auto *e : {&sys.s_expr, &sys.t_expr})
        for (const auto &[name, c] : e->coeffs)
            if (std::find(sys.variables.begin(), sys.variables.end(), name) == sys.variables.end())
                throw DomainError("undeclared variable '" + name + "'");
    return sys;
}

void ConstraintSystem::add_relation(std::string_view rel) {
    std::size_t pos;
    std::string op;
    if ((pos = rel.find("<=")) != std::string_view::npos)
        op = "<=";
    else if ((pos = rel.find(">=")) != std::string_view::npos)
        op = ">=";
    else if ((pos = rel.find('=')) != std::string_view::npos)
        op = "=";
    else
        throw ParseError("relation needs <=, >= or =", 0);
    LinExpr lhs, rhs;
    lhs = LinExpr::parse(rel.substr(0, pos));
    try {
        rhs = LinExpr::parse(rel.substr(pos + op.size()));
    } catch (const ParseError &e) {
        throw ParseError("bad right-hand side", pos + op.size() + e.position());
    }
    for (const auto *e : {&lhs, &rhs})
        for (const auto &[name, c] : e->coeffs)
            if (std::find(variables.begin(), variables.end(), name) == variables.end())
                throw DomainError("undeclared variable '" + name + "'");
    source.emplace_back(rel);
    if (op == "<=" || op == "=")
        inequalities.push_back(rhs - lhs);
    if (op == ">=" || op == "=")
        inequalities.push_back(lhs - rhs);
}

// ---- elimination ----

namespace {

constexpr std::size_t kMaxOrigins = 256;

struct Row {
    std::vector<Rational> c; // vars..., s, t, m, 1
    std::bitset<kMaxOrigins> origin;
};

// Scales to primitive integers; returns false for the zero row.
bool normalize(std::vector<Rational> &c) {
    Integer l(1), g(0);
    for (const auto &v : c)
        l = lcm(l, v.den());
    for (auto &v : c) {
        v *= Rational(l);
        g = gcd(g, v.num());
    }
    if (g == 0)
        return false;
    for (auto &v : c)
        v /= Rational(g);
    return true;
}

std::vector<Row> initial_rows(const ConstraintSystem &sys) {
    std::size_t n = sys.variables.size();
    std::size_t S = n, T = n + 1, M = n + 2, ONE = n + 3, W = n + 4;
    std::vector<Row> rows;
    auto index = [&](const std::string &name) {
        return static_cast<std::size_t>(std::find(sys.variables.begin(), sys.variables.end(), name) -
                                        sys.variables.begin());
    };
    auto from_expr = [&](const LinExpr &e) {
        std::vector<Rational> c(W);
        for (const auto &[name, v] : e.coeffs)
            c[index(name)] = v;
        c[M] = e.constant.slope;
        c[ONE] = e.constant.offset;
        return c;
    };
    auto push = [&](std::vector<Rational> c) {
        if (!normalize(c))
            return;
        Row r;
        r.c = std::move(c);
        if (rows.size() >= kMaxOrigins)
            throw ProjectionError("too many constraints");
        r.origin.set(rows.size());
        rows.push_back(std::move(r));
    };
    for (const auto &e : sys.inequalities)
        push(from_expr(e));
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<Rational> c(W);
        c[i] = Rational(1);
        push(c);
    }
    for (auto [coord, expr] : {std::pair{S, &sys.s_expr}, std::pair{T, &sys.t_expr}}) {
        std::vector<Rational> c = from_expr(*expr);
        for (auto &v : c)
            v = -v;
        c[coord] = Rational(1);
        push(c);
        for (auto &v : c)
            v = -v;
        push(c);
    }
    std::vector<Rational> mrow(W);
    mrow[M] = Rational(1);
    mrow[ONE] = Rational(-1);
    push(mrow);
    return rows;
}

// a*m + b >= 0 for every m >= 1
bool always_true(const Rational &a, const Rational &b) { return a.sign() >= 0 && (a + b).sign() >= 0; }

std::vector<Row> eliminate_all(std::vector<Row> rows, std::size_t nvars) {
    std::vector<bool> done(nvars, false);
    for (std::size_t step = 0; step < nvars; ++step) {
        // pick the variable with the fewest generated rows
        std::size_t best = nvars;
        long best_cost = 0;
        for (std::size_t v = 0; v < nvars; ++v) {
            if (done[v])
                continue;
            long pos = 0, neg = 0;
            for (const auto &r : rows) {
                int sg = r.c[v].sign();
                pos += sg > 0;
                neg += sg < 0;
            }
            long cost = pos * neg - pos - neg;
            if (best == nvars || cost < best_cost) {
                best = v;
                best_cost = cost;
            }
        }
        done[best] = true;
        std::vector<Row> pos, neg, next;
        for (auto &r : rows) {
            int sg = r.c[best].sign();
            (sg > 0 ? pos : sg < 0 ? neg : next).push_back(std::move(r));
        }
        std::size_t limit = step + 2; // Chernikov: at most (eliminated + 1) origins
        for (const auto &p : pos)
            for (const auto &q : neg) {
                auto origin = p.origin | q.origin;
                if (origin.count() > limit)
                    continue;
                Row r;
                r.origin = origin;
                r.c.resize(p.c.size());
                Rational kp = -q.c[best], kq = p.c[best];
                for (std::size_t j = 0; j < p.c.size(); ++j)
                    r.c[j] = p.c[j] * kp + q.c[j] * kq;
                if (!normalize(r.c))
                    continue;
                next.push_back(std::move(r));
            }
        // drop duplicates and trivially satisfied rows
        std::vector<Row> kept;
        std::set<std::vector<Rational>> seen;
        std::size_t W = next.empty() ? 0 : next[0].c.size();
        for (auto &r : next) {
            bool vars_zero = true;
            for (std::size_t j = 0; j + 2 < W; ++j)
                vars_zero = vars_zero && r.c[j].is_zero();
            if (vars_zero && always_true(r.c[W - 2], r.c[W - 1]) &&
                !(r.c[W - 2] == Rational(1) && r.c[W - 1] == Rational(-1)))
                continue;
            std::vector<Rational> key = r.c;
            if (seen.insert(key).second)
                kept.push_back(std::move(r));
        }
        rows = std::move(kept);
    }
    return rows;
}

using HalfPlane = std::array<Rational, 3>; // a*s + b*t + k >= 0

std::vector<std::array<Rational, 4>> reduced_rows(const ConstraintSystem &sys) {
    std::size_t n = sys.variables.size();
    auto rows = eliminate_all(initial_rows(sys), n);
    std::vector<std::array<Rational, 4>> out;
    for (const auto &r : rows)
        out.push_back({r.c[n], r.c[n + 1], r.c[n + 2], r.c[n + 3]});
    return out;
}

Polygon halfplane_polygon(const std::vector<std::array<Rational, 4>> &rows, long m) {
    std::vector<HalfPlane> hp;
    for (const auto &r : rows) {
        Rational k = r[2] * Rational(m) + r[3];
        if (r[0].is_zero() && r[1].is_zero()) {
            if (k.sign() < 0)
                throw ProjectionError("system infeasible at m = " + std::to_string(m));
            continue;
        }
        hp.push_back({r[0], r[1], k});
    }
    // bounded iff no nonzero direction d with a.d >= 0 for all rows
    auto recedes = [&](const Rational &ds, const Rational &dt) {
        for (const auto &h : hp)
            if ((h[0] * ds + h[1] * dt).sign() < 0)
                return false;
        return true;
    };
    if (hp.empty())
        throw ProjectionError("projection is unbounded");
    for (const auto &h : hp)
        if (recedes(-h[1], h[0]) || recedes(h[1], -h[0]))
            throw ProjectionError("projection is unbounded");
    std::vector<Point> cand;
    for (std::size_t i = 0; i < hp.size(); ++i)
        for (std::size_t j = i + 1; j < hp.size(); ++j) {
            Rational det = hp[i][0] * hp[j][1] - hp[i][1] * hp[j][0];
            if (det.is_zero())
                continue;
            Point p{(-hp[i][2] * hp[j][1] + hp[i][1] * hp[j][2]) / det,
                    (-hp[i][0] * hp[j][2] + hp[i][2] * hp[j][0]) / det};
            bool ok = true;
            for (const auto &h : hp)
                if ((h[0] * p.s + h[1] * p.t + h[2]).sign() < 0) {
                    ok = false;
                    break;
                }
            if (ok)
                cand.push_back(p);
        }
    if (cand.empty())
        throw ProjectionError("system infeasible at m = " + std::to_string(m));
    return convex_hull(cand);
}

} // namespace

Polygon project_at(const ConstraintSystem &sys, long m) {
    if (m < 1)
        throw DomainError("m must be a positive integer");
    ConstraintSystem fixed = sys;
    for (auto &e : fixed.inequalities) {
        e.constant.offset = e.constant.at(m);
        e.constant.slope = Rational(0);
    }
    for (auto *e : {&fixed.s_expr, &fixed.t_expr}) {
        e->constant.offset = e->constant.at(m);
        e->constant.slope = Rational(0);
    }
    return halfplane_polygon(reduced_rows(fixed), m);
}

RegionSpec project(const ConstraintSystem &sys) {
    auto rows = reduced_rows(sys);
    bool homogeneous = true;
    for (const auto &r : rows)
        if (!(r[0].is_zero() && r[1].is_zero()) && !r[3].is_zero())
            homogeneous = false;
    Polygon at1 = halfplane_polygon(rows, 1);
    if (homogeneous)
        return RegionSpec::scaled(at1);

    // Affine vertices from the constraints tight at a large m.
    const long big = 1 << 20;
    Polygon far = halfplane_polygon(rows, big);
    RegionSpec out;
    for (const auto &v : far) {
        std::vector<std::array<Rational, 4>> tight;
        for (const auto &r : rows)
            if (!(r[0].is_zero() && r[1].is_zero()) &&
                (r[0] * v.s + r[1] * v.t + r[2] * Rational(big) + r[3]).is_zero())
                tight.push_back(r);
        bool solved = false;
        for (std::size_t i = 0; i < tight.size() && !solved; ++i)
            for (std::size_t j = i + 1; j < tight.size() && !solved; ++j) {
                const auto &p = tight[i], &q = tight[j];
                Rational det = p[0] * q[1] - p[1] * q[0];
                if (det.is_zero())
                    continue;
                // a s + b t = -(c m + d) for both rows
                AffineInM s{(-p[2] * q[1] + p[1] * q[2]) / det, (-p[3] * q[1] + p[1] * q[3]) / det};
                AffineInM t{(-p[0] * q[2] + p[2] * q[0]) / det, (-p[0] * q[3] + p[3] * q[0]) / det};
                out.vertices.push_back({s, t});
                solved = true;
            }
        if (!solved)
            throw ProjectionError("could not resolve a vertex symbolically");
    }
    std::vector<long> bad;
    for (long m = 1; m <= 40; ++m)
        if (canonical_polygon(out.at(m)) != halfplane_polygon(rows, m))
            bad.push_back(m);
    if (!bad.empty()) {
        std::string list;
        for (long m : bad)
            list += " " + std::to_string(m);
        throw ProjectionError("projection has an m-dependent combinatorial type; the large-m type fails at m =" +
                              list);
    }
    return out;
}

// ---- comparison ----

namespace {

bool collinear_always(const std::pair<AffineInM, AffineInM> &a, const std::pair<AffineInM, AffineInM> &b,
                      const std::pair<AffineInM, AffineInM> &c) {
    // the cross product is quadratic in m: three zeros force it to vanish
    for (long m = 1; m <= 3; ++m) {
        Point pa{a.first.at(m), a.second.at(m)}, pb{b.first.at(m), b.second.at(m)},
            pc{c.first.at(m), c.second.at(m)};
        if (!((pb.s - pa.s) * (pc.t - pa.t) - (pb.t - pa.t) * (pc.s - pa.s)).is_zero())
            return false;
    }
    return true;
}

auto vertex_key(const std::pair<AffineInM, AffineInM> &v) {
    return std::tuple{v.first.slope, v.first.offset, v.second.slope, v.second.offset};
}

} // namespace

RegionSpec canonical_region(const RegionSpec &r) {
    auto v = r.vertices;
    // repeated vertices
    std::vector<std::pair<AffineInM, AffineInM>> d;
    for (const auto &p : v)
        if (std::find(d.begin(), d.end(), p) == d.end())
            d.push_back(p);
    v = d;
    bool changed = true;
    while (changed && v.size() > 2) {
        changed = false;
        for (std::size_t i = 0; i < v.size(); ++i) {
            const auto &prev = v[(i + v.size() - 1) % v.size()];
            const auto &next = v[(i + 1) % v.size()];
            if (collinear_always(prev, v[i], next)) {
                // keep the extreme points of a collinear run
                Point a{prev.first.at(1), prev.second.at(1)}, b{v[i].first.at(1), v[i].second.at(1)},
                    c{next.first.at(1), next.second.at(1)};
                Rational dot = (b.s - a.s) * (c.s - b.s) + (b.t - a.t) * (c.t - b.t);
                if (v.size() == 3 && dot.sign() < 0)
                    continue;
                v.erase(v.begin() + i);
                changed = true;
                break;
            }
        }
    }
    RegionSpec out;
    out.vertices = v;
    Rational orient(0);
    for (long m = 1; m <= 3 && orient.is_zero(); ++m)
        orient = signed_area(out.at(m));
    if (orient.sign() < 0)
        std::reverse(out.vertices.begin(), out.vertices.end());
    if (!out.vertices.empty()) {
        auto least = std::min_element(out.vertices.begin(), out.vertices.end(),
                                      [](const auto &a, const auto &b) { return vertex_key(a) < vertex_key(b); });
        std::rotate(out.vertices.begin(), least, out.vertices.end());
    }
    if (orient.is_zero() && out.vertices.size() == 2 && vertex_key(out.vertices[1]) < vertex_key(out.vertices[0]))
        std::swap(out.vertices[0], out.vertices[1]);
    return out;
}

bool region_equal(const RegionSpec &a, const RegionSpec &b) {
    return canonical_region(a).vertices == canonical_region(b).vertices;
}

bool region_contained(const RegionSpec &inner, const std::vector<RegionSpec> &pieces) {
    for (long m = 1; m <= 8; ++m) {
        Polygon p = canonical_polygon(inner.at(m));
        Rational covered(0);
        for (const auto &piece : pieces)
            covered += area(clip_convex(p, piece.at(m)));
        if (covered != area(p))
            return false;
        if (area(p).is_zero()) {
            for (const auto &v : p) {
                bool inside = false;
                for (const auto &piece : pieces)
                    inside = inside || contains(piece.at(m), v);
                if (!inside)
                    return false;
            }
        }
    }
    return true;
}

} // namespace dpcert
