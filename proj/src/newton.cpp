#include "dpcert/newton.hpp"
#include "dpcert/error.hpp"

#include <algorithm>
#include <map>

namespace dpcert {

namespace {
long cross(Monomial2 o, Monomial2 a, Monomial2 b) {
    return long(a.s - o.s) * (b.t - o.t) - long(a.t - o.t) * (b.s - o.s);
}
} // namespace

NewtonPolygon newton_polygon(const BiPoly &f) {
    if (f.is_zero())
        throw DomainError("Newton polygon of the zero polynomial");
    std::map<int, int> lowest;
    for (const auto &[m, c] : f.terms()) {
        auto it = lowest.find(m.s);
        if (it == lowest.end() || m.t < it->second)
            lowest[m.s] = m.t;
    }
    std::vector<Monomial2> hull;
    for (const auto &[s, t] : lowest) {
        Monomial2 p{s, t};
        while (hull.size() >= 2 && cross(hull[hull.size() - 2], hull.back(), p) <= 0)
            hull.pop_back();
        hull.push_back(p);
    }
    std::size_t lowest_idx = 0;
    for (std::size_t i = 1; i < hull.size(); ++i)
        if (hull[i].t < hull[lowest_idx].t)
            lowest_idx = i;
    hull.resize(lowest_idx + 1);
    return NewtonPolygon{hull};
}

bool NewtonPolygon::contains(const Rational &s, const Rational &t) const {
    if (vertices.empty())
        return false;
    if (s < Rational(vertices.front().s) || t < Rational(vertices.back().t))
        return false;
    for (std::size_t i = 0; i + 1 < vertices.size(); ++i) {
        Monomial2 p = vertices[i], q = vertices[i + 1];
        long wx = p.t - q.t, wy = q.s - p.s;
        if (Rational(wx) * s + Rational(wy) * t < Rational(wx * p.s + wy * p.t))
            return false;
    }
    return true;
}

DiagonalCrossing diagonal_crossing(const NewtonPolygon &np) {
    if (np.vertices.empty())
        throw DomainError("empty Newton polygon");
    DiagonalCrossing out;
    const auto &v = np.vertices;
    for (const auto &p : v)
        if (p.s == p.t) {
            out.kind = DiagonalCrossing::Kind::Vertex;
            out.vertex = p;
            return out;
        }
    if (v.back().s < v.back().t) {
        out.kind = DiagonalCrossing::Kind::HorizontalRay;
        out.vertex = v.back();
        return out;
    }
    if (v.front().s > v.front().t) {
        out.kind = DiagonalCrossing::Kind::VerticalRay;
        out.vertex = v.front();
        return out;
    }
    for (std::size_t i = 0; i + 1 < v.size(); ++i)
        if (v[i].s < v[i].t && v[i + 1].s > v[i + 1].t) {
            out.kind = DiagonalCrossing::Kind::Edge;
            out.edge_from = v[i];
            out.edge_to = v[i + 1];
            out.weight = Weight(v[i].t - v[i + 1].t, v[i + 1].s - v[i].s);
            return out;
        }
    throw DomainError("Newton polygon does not meet the diagonal");
}

std::vector<int> FactorProfile::multiplicities() const {
    std::vector<int> out;
    for (const auto &blk : blocks)
        for (int i = 0; i < blk.count; ++i)
            out.push_back(blk.multiplicity);
    return out;
}

FactorProfile factor_profile(const BiPoly &fw, Weight w) {
    if (!is_weighted_homogeneous(fw, w))
        throw DomainError("polynomial is not weighted homogeneous for the weight");
    FactorProfile prof;
    prof.a = prof.b = std::numeric_limits<int>::max();
    for (const auto &[m, c] : fw.terms()) {
        prof.a = std::min(prof.a, m.s);
        prof.b = std::min(prof.b, m.t);
    }
    // With the content removed the terms are x^{k wy} y^{t0 - k wx}.
    int t0 = 0, K = 0;
    for (const auto &[m, c] : fw.terms()) {
        t0 = std::max(t0, m.t - prof.b);
        K = std::max(K, (m.s - prof.a) / w.wy);
    }
    if (K == 0)
        return prof;
    std::vector<Rational> coeffs(K + 1);
    for (const auto &[m, c] : fw.terms()) {
        int s = m.s - prof.a, t = m.t - prof.b;
        if (s % w.wy != 0 || t != t0 - (s / w.wy) * w.wx)
            throw DomainError("unexpected support in weighted homogeneous polynomial");
        coeffs[s / w.wy] = c;
    }
    UniPoly p(coeffs);
    const FactorBlock *top = nullptr;
    for (const auto &sf : squarefree_decomposition(p)) {
        FactorBlock blk;
        blk.alpha = w.wy;
        blk.beta = w.wx;
        blk.multiplicity = sf.multiplicity;
        blk.count = sf.factor.degree();
        blk.squarefree = sf.factor;
        prof.blocks.push_back(blk);
    }
    for (const auto &blk : prof.blocks)
        if (!top || blk.multiplicity > top->multiplicity)
            top = &blk;
    prof.max_multiplicity = top->multiplicity;
    if (w.wy == 1) {
        auto roots = rational_roots(top->squarefree);
        if (!roots.empty()) {
            prof.root = roots.front();
            prof.beta = w.wx;
        }
    }
    return prof;
}

namespace {

Rational min_formula(const FactorProfile &prof, Weight w, long wmult) {
    Rational bound(Integer(w.wx + w.wy), Integer(wmult));
    if (prof.a > 0)
        bound = min(bound, Rational(Integer(1), Integer(prof.a)));
    if (prof.b > 0)
        bound = min(bound, Rational(Integer(1), Integer(prof.b)));
    if (prof.max_multiplicity > 0)
        bound = min(bound, Rational(Integer(1), Integer(prof.max_multiplicity)));
    return bound;
}

} // namespace

CertifiedBound lct_weighted_homog(const BiPoly &fw, Weight w) {
    FactorProfile prof = factor_profile(fw, w);
    long wmult = weighted_leading(fw, w).first;
    CertifiedBound out;
    out.bound = min_formula(prof, w, wmult);
    // The min formula is the threshold of a weighted homogeneous germ.
    out.exact = true;
    IterationRecord rec;
    rec.crossing = "edge";
    rec.weight = w;
    rec.wmult = wmult;
    rec.a = prof.a;
    rec.b = prof.b;
    rec.multiplicities = prof.multiplicities();
    rec.stage_bound = out.bound;
    rec.stage_exact = true;
    rec.action = "done";
    out.trace.push_back(rec);
    return out;
}

CertifiedBound lct_lower_bound(const BiPoly &f, int threshold, const LctOptions &opt) {
    if (f.is_zero())
        throw DomainError("lct of the zero polynomial");
    if (!f.coefficient({0, 0}).is_zero())
        throw DomainError("f(0,0) must vanish");
    if (threshold < 1)
        throw DomainError("threshold must be a positive integer");

    CertifiedBound out;
    bool have = false;
    auto absorb = [&](IterationRecord rec) {
        if (!have || out.bound < rec.stage_bound)
            out.bound = rec.stage_bound;
        have = true;
        out.exact = out.exact || rec.stage_exact;
        out.trace.push_back(std::move(rec));
    };

    BiPoly g = f;
    for (int it = 0; it < opt.max_iterations; ++it) {
        NewtonPolygon np = newton_polygon(g);
        if (opt.anchor && !np.contains(Rational(*opt.anchor), Rational(*opt.anchor)))
            throw DomainError("anchor point lies outside the Newton polygon");
        DiagonalCrossing cr = diagonal_crossing(np);
        IterationRecord rec;
        rec.iteration = it;
        rec.action = "done";
        switch (cr.kind) {
        case DiagonalCrossing::Kind::Vertex:
            rec.crossing = "vertex";
            rec.a = rec.b = cr.vertex.s;
            rec.stage_bound = Rational(Integer(1), Integer(cr.vertex.s));
            rec.stage_exact = true;
            absorb(rec);
            return out;
        case DiagonalCrossing::Kind::HorizontalRay:
        case DiagonalCrossing::Kind::VerticalRay: {
            // g is divisible by y^t (resp. x^s) and dominates that monomial.
            rec.crossing = "ray";
            rec.a = cr.vertex.s;
            rec.b = cr.vertex.t;
            int e = std::max(cr.vertex.s, cr.vertex.t);
            rec.stage_bound = Rational(Integer(1), Integer(e));
            rec.stage_exact = true;
            absorb(rec);
            return out;
        }
        case DiagonalCrossing::Kind::Edge:
            break;
        }
        Weight w = cr.weight;
        auto [wmult, gw] = weighted_leading(g, w);
        FactorProfile prof = factor_profile(gw, w);
        rec.crossing = "edge";
        rec.weight = w;
        rec.wmult = wmult;
        rec.a = prof.a;
        rec.b = prof.b;
        rec.multiplicities = prof.multiplicities();
        rec.stage_bound = min_formula(prof, w, wmult);
        Rational level(Integer(w.wx + w.wy), Integer(wmult));
        bool lc_outside = level * Rational(prof.a) <= Rational(1) &&
                          level * Rational(prof.b) <= Rational(1) &&
                          level * Rational(prof.max_multiplicity) <= Rational(1);
        rec.stage_exact = lc_outside || g == gw;
        if (rec.stage_exact || prof.max_multiplicity <= threshold) {
            absorb(rec);
            return out;
        }
        if (w.wy == 1 && prof.root) {
            rec.action = "shear";
            rec.shear_A = prof.shear_coefficient();
            rec.shear_beta = prof.beta;
            g = shear(g, *rec.shear_A, prof.beta);
        } else if (w.wy == 1) {
            rec.action = "stalled";
            absorb(rec);
            out.status = "stalled: irrational factor root";
            return out;
        } else if (w.wx == 1) {
            rec.action = "swap";
            g = g.swap_xy();
        } else {
            rec.action = "stalled";
            absorb(rec);
            out.status = "stalled: maximal factor is not linear in either variable";
            return out;
        }
        absorb(rec);
    }
    out.status = "stalled: iteration cap";
    return out;
}

Monomial2 product_anchor(const std::vector<Monomial2> &assigned) {
    if (assigned.empty())
        throw DomainError("empty monomial list");
    Monomial2 sum;
    for (const auto &m : assigned) {
        sum.s += m.s;
        sum.t += m.t;
    }
    return sum;
}

} // namespace dpcert
