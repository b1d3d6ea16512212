#include "paraboson/exactlinalg.hpp"

#include <algorithm>

namespace paraboson {

namespace {

// Clear denominators row by row, returning an integer matrix with the same rank.
std::vector<std::vector<Integer>> to_integer_rows(const RatMatrix& m) {
    std::vector<std::vector<Integer>> rows(m.rows(), std::vector<Integer>(m.cols()));
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Integer l = 1;
        for (std::size_t c = 0; c < m.cols(); ++c) {
            Integer den = m.at(r, c).get_den();
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), den.get_mpz_t());
        }
        for (std::size_t c = 0; c < m.cols(); ++c) {
            Rational q = m.at(r, c) * Rational(l);
            rows[r][c] = q.get_num();
        }
    }
    return rows;
}

}  // namespace

int rank(const RatMatrix& m) {
    auto a = to_integer_rows(m);
    const std::size_t nr = m.rows(), nc = m.cols();
    std::size_t row = 0;
    Integer prev = 1;
    for (std::size_t col = 0; col < nc && row < nr; ++col) {
        std::size_t piv = row;
        while (piv < nr && a[piv][col] == 0) ++piv;
        if (piv == nr) continue;
        std::swap(a[piv], a[row]);
        for (std::size_t r = row + 1; r < nr; ++r) {
            for (std::size_t c = col + 1; c < nc; ++c) {
                a[r][c] = (a[row][col] * a[r][c] - a[r][col] * a[row][c]) / prev;
            }
            a[r][col] = 0;
        }
        prev = a[row][col];
        ++row;
    }
    return static_cast<int>(row);
}

std::optional<std::vector<Rational>> solve_in_span(const RatMatrix& basis_columns,
                                                   const std::vector<Rational>& target) {
    const std::size_t nr = basis_columns.rows(), nc = basis_columns.cols();
    if (target.size() != nr) throw std::invalid_argument("solve_in_span: size mismatch");

    // Augmented rational Gauss, first-nonzero pivoting.
    std::vector<std::vector<Rational>> a(nr, std::vector<Rational>(nc + 1));
    for (std::size_t r = 0; r < nr; ++r) {
        for (std::size_t c = 0; c < nc; ++c) a[r][c] = basis_columns.at(r, c);
        a[r][nc] = target[r];
    }

    std::vector<int> pivot_col_of_row(nr, -1);
    std::size_t row = 0;
    for (std::size_t col = 0; col < nc && row < nr; ++col) {
        std::size_t piv = row;
        while (piv < nr && a[piv][col] == 0) ++piv;
        if (piv == nr) continue;
        std::swap(a[piv], a[row]);
        Rational inv = 1 / a[row][col];
        for (std::size_t c = col; c <= nc; ++c) a[row][c] *= inv;
        for (std::size_t r = 0; r < nr; ++r) {
            if (r == row || a[r][col] == 0) continue;
            Rational f = a[r][col];
            for (std::size_t c = col; c <= nc; ++c) a[r][c] -= f * a[row][c];
        }
        pivot_col_of_row[row] = static_cast<int>(col);
        ++row;
    }
    // Inconsistency: zero coefficient row with nonzero rhs.
    for (std::size_t r = row; r < nr; ++r)
        if (a[r][nc] != 0) return std::nullopt;

    std::vector<Rational> x(nc, Rational(0));
    for (std::size_t r = 0; r < row; ++r) x[pivot_col_of_row[r]] = a[r][nc];
    return x;
}

PsdResult psd_check(const RatMatrix& g) {
    if (!g.is_symmetric()) throw std::invalid_argument("psd_check: matrix not symmetric");
    const std::size_t n = g.rows();

    // Symmetric elimination on a working copy S, tracking the congruence basis:
    // basis[k] is the vector x_k with S[k][l] = x_k^T G x_l on the active set.
    std::vector<std::vector<Rational>> s(n, std::vector<Rational>(n));
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) s[r][c] = g.at(r, c);
    std::vector<std::vector<Rational>> basis(n, std::vector<Rational>(n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i) basis[i][i] = 1;
    std::vector<bool> active(n, true);

    PsdResult res;
    for (std::size_t step = 0; step < n; ++step) {
        // Find first active index with nonzero diagonal.
        std::size_t k = n;
        for (std::size_t i = 0; i < n; ++i)
            if (active[i] && s[i][i] != 0) { k = i; break; }
        if (k == n) {
            // All remaining diagonals are zero; any nonzero off-diagonal pairing is indefinite.
            for (std::size_t i = 0; i < n; ++i) {
                if (!active[i]) continue;
                for (std::size_t j = i + 1; j < n; ++j) {
                    if (!active[j] || s[i][j] == 0) continue;
                    // x = x_i - sign(s_ij) x_j gives x^T G x = -2|s_ij| < 0.
                    res.psd = false;
                    res.witness.assign(n, Rational(0));
                    int sg = sgn(s[i][j]) > 0 ? 1 : -1;
                    for (std::size_t c = 0; c < n; ++c)
                        res.witness[c] = basis[i][c] - Rational(sg) * basis[j][c];
                    return res;
                }
            }
            res.psd = true;
            return res;
        }
        if (s[k][k] < 0) {
            res.psd = false;
            res.witness = basis[k];
            return res;
        }
        // Pivot on k: eliminate its pairings from the other active vectors.
        for (std::size_t i = 0; i < n; ++i) {
            if (!active[i] || i == k || s[i][k] == 0) continue;
            Rational f = s[i][k] / s[k][k];
            for (std::size_t c = 0; c < n; ++c) basis[i][c] -= f * basis[k][c];
            for (std::size_t j = 0; j < n; ++j)
                if (active[j]) s[i][j] -= f * s[k][j];
            for (std::size_t j = 0; j < n; ++j)
                if (active[j]) s[j][i] = s[i][j];
        }
        active[k] = false;
    }
    res.psd = true;
    return res;
}

std::vector<std::vector<Rational>> nullspace(const RatMatrix& m) {
    const std::size_t nr = m.rows(), nc = m.cols();
    std::vector<std::vector<Rational>> a(nr, std::vector<Rational>(nc));
    for (std::size_t r = 0; r < nr; ++r)
        for (std::size_t c = 0; c < nc; ++c) a[r][c] = m.at(r, c);

    std::vector<int> pivot_col_of_row;
    std::vector<bool> is_pivot_col(nc, false);
    std::size_t row = 0;
    for (std::size_t col = 0; col < nc && row < nr; ++col) {
        std::size_t piv = row;
        while (piv < nr && a[piv][col] == 0) ++piv;
        if (piv == nr) continue;
        std::swap(a[piv], a[row]);
        Rational inv = 1 / a[row][col];
        for (std::size_t c = col; c < nc; ++c) a[row][c] *= inv;
        for (std::size_t r = 0; r < nr; ++r) {
            if (r == row || a[r][col] == 0) continue;
            Rational f = a[r][col];
            for (std::size_t c = col; c < nc; ++c) a[r][c] -= f * a[row][c];
        }
        pivot_col_of_row.push_back(static_cast<int>(col));
        is_pivot_col[col] = true;
        ++row;
    }

    std::vector<std::vector<Rational>> basis;
    for (std::size_t free = 0; free < nc; ++free) {
        if (is_pivot_col[free]) continue;
        std::vector<Rational> v(nc, Rational(0));
        v[free] = 1;
        for (std::size_t r = 0; r < pivot_col_of_row.size(); ++r)
            v[pivot_col_of_row[r]] = -a[r][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace paraboson
