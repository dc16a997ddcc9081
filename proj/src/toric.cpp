#include "dpcert/toric.hpp"
#include "dpcert/error.hpp"
#include "dpcert/regions.hpp"

namespace dpcert {

std::string toric_name(ToricId id) {
    switch (id) {
    case ToricId::P2: return "p2";
    case ToricId::P1xP1: return "p1xp1";
    case ToricId::dP6: return "dp6";
    case ToricId::dP7: return "dp7";
    case ToricId::F1: return "f1";
    }
    return "?";
}

std::optional<ToricId> parse_toric(std::string_view name) {
    for (auto id : {ToricId::P2, ToricId::P1xP1, ToricId::dP6, ToricId::dP7, ToricId::F1})
        if (toric_name(id) == name)
            return id;
    return std::nullopt;
}

const ToricSurface &toric_surface(ToricId id) {
    // Lines L_x, L_y, L_z: a, b, c. Exceptional curves over [0:0:1], [0:1:0],
    // [1:0:0]: E = a+b-m = 2m-c, F = a+c-m = 2m-b, G = b+c-m = 2m-a.
    static const BoundaryDivisor Lx{"Lx", {1, 0, 0, 0}}, Ly{"Ly", {0, 1, 0, 0}}, Lz{"Lz", {0, 0, 1, 0}};
    static const BoundaryDivisor E{"E", {0, 0, -1, 2}}, F{"F", {0, -1, 0, 2}}, G{"G", {-1, 0, 0, 2}};
    static const ToricSurface p2{ToricId::P2, 9, {Lx, Ly, Lz}};
    static const ToricSurface f1{ToricId::F1, 8, {E, Lx, Ly, Lz}};
    static const ToricSurface dp7{ToricId::dP7, 7, {E, F, Lx, Ly, Lz}};
    static const ToricSurface dp6{ToricId::dP6, 6, {E, F, G, Lx, Ly, Lz}};
    static const ToricSurface p1p1{ToricId::P1xP1,
                                   8,
                                   {{"Dx", {1, 0, 0, 0}}, {"Du", {-1, 0, 0, 2}}, {"Dy", {0, 1, 0, 0}},
                                    {"Dv", {0, -1, 0, 2}}}};
    switch (id) {
    case ToricId::P2: return p2;
    case ToricId::F1: return f1;
    case ToricId::dP7: return dp7;
    case ToricId::dP6: return dp6;
    case ToricId::P1xP1: return p1p1;
    }
    throw DomainError("unknown surface");
}

Integer ell(int degree, long m) { return Integer(degree) * m * (m + 1) / 2 + 1; }

std::vector<Exponent> monomial_basis(ToricId id, long m) {
    if (m < 1)
        throw DomainError("m must be a positive integer");
    int M = static_cast<int>(m);
    std::vector<Exponent> out;
    if (id == ToricId::P1xP1) {
        for (int a = 0; a <= 2 * M; ++a)
            for (int b = 0; b <= 2 * M; ++b)
                out.push_back({a, b, 0});
        return out;
    }
    for (int a = 3 * M; a >= 0; --a)
        for (int b = 3 * M - a; b >= 0; --b) {
            int c = 3 * M - a - b;
            bool keep = true;
            switch (id) {
            case ToricId::F1: keep = c <= 2 * M; break;
            case ToricId::dP7: keep = b <= 2 * M && c <= 2 * M; break;
            case ToricId::dP6: keep = a <= 2 * M && b <= 2 * M && c <= 2 * M; break;
            default: break;
            }
            if (keep)
                out.push_back({a, b, c});
        }
    return out;
}

namespace {

const BoundaryDivisor &find_divisor(const ToricSurface &S, std::string_view boundary) {
    for (const auto &d : S.boundary)
        if (d.id == boundary)
            return d;
    throw DomainError("unknown boundary divisor '" + std::string(boundary) + "' on " + toric_name(S.id));
}

Integer order_sum(const BoundaryDivisor &D, const std::vector<Exponent> &basis, long m) {
    Integer sum(0);
    for (const auto &e : basis)
        sum += D.order(e, m);
    return sum;
}

} // namespace

Rational divisor_coefficient(ToricId id, long m, std::string_view boundary) {
    const ToricSurface &S = toric_surface(id);
    const BoundaryDivisor &D = find_divisor(S, boundary);
    auto basis = monomial_basis(id, m);
    return Rational(order_sum(D, basis, m), Integer(m) * ell(S.degree, m));
}

ToricBound delta_m_upper(ToricId id, long m) {
    const ToricSurface &S = toric_surface(id);
    auto basis = monomial_basis(id, m);
    Integer denom = Integer(m) * ell(S.degree, m);
    ToricBound out;
    Rational best(-1);
    for (const auto &D : S.boundary) {
        Rational c(order_sum(D, basis, m), denom);
        if (c > best) {
            best = c;
            out.witness = D.id;
        }
    }
    out.bound = best.inverse();
    return out;
}

Rational delta_upper_limit(ToricId id) {
    const ToricSurface &S = toric_surface(id);
    std::vector<std::pair<Rational, Rational>> nsamples;
    std::vector<std::vector<std::pair<Rational, Rational>>> dsamples(S.boundary.size());
    for (long m = 1; m <= 6; ++m) {
        auto basis = monomial_basis(id, m);
        nsamples.push_back({Rational(m), Rational(Integer(Integer(m) * ell(S.degree, m)))});
        for (std::size_t i = 0; i < S.boundary.size(); ++i)
            dsamples[i].push_back({Rational(m), Rational(order_sum(S.boundary[i], basis, m))});
    }
    Rational lead_n = cubic_fit(nsamples).c3;
    Rational lead_d(0);
    for (const auto &s : dsamples)
        lead_d = max(lead_d, cubic_fit(s).c3);
    return lead_n / lead_d;
}

} // namespace dpcert
