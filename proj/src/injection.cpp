#include "dpcert/injection.hpp"
#include "dpcert/error.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace dpcert {

namespace {
int degree_cap_of(const std::vector<BiPoly> &polys) {
    int cap = 0;
    for (const auto &p : polys)
        cap = std::max(cap, p.total_degree());
    return cap;
}
} // namespace

CoeffMatrix coefficient_matrix(const std::vector<BiPoly> &polys, MonomialOrder order, int degree_cap) {
    CoeffMatrix out;
    out.columns = monomials_up_to(order, degree_cap);
    std::map<Monomial2, std::size_t> index;
    for (std::size_t j = 0; j < out.columns.size(); ++j)
        index[out.columns[j]] = j;
    for (const auto &p : polys) {
        if (p.total_degree() > degree_cap)
            throw DomainError("polynomial support exceeds the degree cap");
        std::vector<Rational> row(out.columns.size());
        for (const auto &[m, c] : p.terms())
            row[index.at(m)] = c;
        out.rows.push_back(std::move(row));
    }
    return out;
}

EchelonResult row_echelon(const Matrix &M) {
    std::size_t n = M.size();
    std::size_t w = n ? M[0].size() : 0;
    EchelonResult out;
    out.E = M;
    out.T.assign(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i)
        out.T[i][i] = Rational(1);
    auto &E = out.E;
    auto &T = out.T;
    std::size_t r = 0;
    for (std::size_t c = 0; c < w && r < n; ++c) {
        std::size_t piv = r;
        while (piv < n && E[piv][c].is_zero())
            ++piv;
        if (piv == n)
            continue;
        if (piv != r) {
            std::swap(E[piv], E[r]);
            for (auto &row : T)
                std::swap(row[piv], row[r]);
        }
        Rational k = E[r][c];
        if (k != Rational(1)) {
            Rational inv = k.inverse();
            for (auto &v : E[r])
                v *= inv;
            for (auto &row : T)
                row[r] *= k;
        }
        for (std::size_t i = r + 1; i < n; ++i) {
            if (E[i][c].is_zero())
                continue;
            Rational f = E[i][c];
            for (std::size_t j = c; j < w; ++j)
                E[i][j] -= f * E[r][j];
            // E_i -= f E_r  <=>  T_col_r += f T_col_i
            for (auto &row : T)
                row[r] += f * row[i];
        }
        out.pivots.push_back(c);
        ++r;
    }
    if (r < n)
        throw DomainError("rows are linearly dependent (rank " + std::to_string(r) + " < " +
                          std::to_string(n) + ")");
    return out;
}

Matrix multiply(const Matrix &a, const Matrix &b) {
    std::size_t n = a.size(), k = b.size(), w = k ? b[0].size() : 0;
    Matrix out(n, std::vector<Rational>(w));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t l = 0; l < k; ++l) {
            if (a[i][l].is_zero())
                continue;
            for (std::size_t j = 0; j < w; ++j)
                out[i][j] += a[i][l] * b[l][j];
        }
    return out;
}

Assignment injective_assignment(const std::vector<BiPoly> &polys, MonomialOrder order) {
    CoeffMatrix M = coefficient_matrix(polys, order, degree_cap_of(polys));
    EchelonResult ech = row_echelon(M.rows);
    std::size_t n = polys.size();
    // M~ = T * E~ where E~ keeps the pivot columns.
    Matrix Etilde(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k)
            Etilde[i][k] = ech.E[i][ech.pivots[k]];
    Matrix Mtilde = multiply(ech.T, Etilde);

    // Kuhn's augmenting paths; rows and columns tried in index order.
    std::vector<long> match_col(n, -1);
    std::function<bool(std::size_t, std::vector<bool> &)> augment = [&](std::size_t row, std::vector<bool> &seen) {
        for (std::size_t k = 0; k < n; ++k) {
            if (Mtilde[row][k].is_zero() || seen[k])
                continue;
            seen[k] = true;
            if (match_col[k] < 0 || augment(static_cast<std::size_t>(match_col[k]), seen)) {
                match_col[k] = static_cast<long>(row);
                return true;
            }
        }
        return false;
    };
    for (std::size_t row = 0; row < n; ++row) {
        std::vector<bool> seen(n, false);
        if (!augment(row, seen))
            throw DomainError("no perfect matching in the pivot minor");
    }
    Assignment out;
    out.monomial.resize(n);
    out.column.resize(n);
    for (std::size_t k = 0; k < n; ++k) {
        auto row = static_cast<std::size_t>(match_col[k]);
        out.column[row] = ech.pivots[k];
        out.monomial[row] = M.columns[ech.pivots[k]];
    }
    for (auto p : ech.pivots)
        out.pivot_monomials.push_back(M.columns[p]);
    return out;
}

std::vector<Monomial2> pivot_monomials(const std::vector<BiPoly> &polys, MonomialOrder order) {
    CoeffMatrix M = coefficient_matrix(polys, order, degree_cap_of(polys));
    EchelonResult ech = row_echelon(M.rows);
    std::vector<Monomial2> out;
    for (auto p : ech.pivots)
        out.push_back(M.columns[p]);
    return out;
}

bool assert_shear_stability(const std::vector<BiPoly> &polys, const Rational &A, int beta, MonomialOrder order) {
    if (beta < 2)
        throw DomainError("shear stability needs beta >= 2");
    std::vector<BiPoly> sheared;
    for (const auto &p : polys)
        sheared.push_back(shear(p, A, beta));
    auto before = pivot_monomials(polys, order);
    auto after = pivot_monomials(sheared, order);
    std::sort(before.begin(), before.end());
    std::sort(after.begin(), after.end());
    return before == after;
}

} // namespace dpcert
