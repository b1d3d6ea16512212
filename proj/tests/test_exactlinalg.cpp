#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "paraboson/exactlinalg.hpp"

using namespace paraboson;

namespace {

RatMatrix from_ints(const std::vector<std::vector<long>>& rows) {
    RatMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < rows[r].size(); ++c) m.at(r, c) = Rational(rows[r][c]);
    return m;
}

// Independent oracle: determinant by plain rational elimination, Cramer solve.
Rational det(const RatMatrix& m) {
    const std::size_t n = m.rows();
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) a[r][c] = m.at(r, c);
    Rational d(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a[piv][col] == 0) ++piv;
        if (piv == n) return Rational(0);
        if (piv != col) {
            std::swap(a[piv], a[col]);
            d = -d;
        }
        d *= a[col][col];
        for (std::size_t r = col + 1; r < n; ++r) {
            Rational f = a[r][col] / a[col][col];
            for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
        }
    }
    return d;
}

std::vector<Rational> cramer_solve(const RatMatrix& b, const std::vector<Rational>& t) {
    Rational d = det(b);
    REQUIRE(d != 0);
    std::vector<Rational> x(b.cols());
    for (std::size_t c = 0; c < b.cols(); ++c) {
        RatMatrix bc = b;
        for (std::size_t r = 0; r < b.rows(); ++r) bc.at(r, c) = t[r];
        x[c] = det(bc) / d;
    }
    return x;
}

}  // namespace

TEST_CASE("rank on the stated examples") {
    CHECK(rank(RatMatrix::identity(3)) == 3);
    CHECK(rank(RatMatrix(4, 5)) == 0);
    CHECK(rank(from_ints({{1, 2}, {2, 4}})) == 1);
}

TEST_CASE("rank is transpose invariant") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 30; ++trial) {
        std::size_t r = 1 + rng() % 5, c = 1 + rng() % 5;
        RatMatrix m(r, c);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j)
                m.at(i, j) = Rational(static_cast<long>(rng() % 7) - 3,
                                      1 + static_cast<long>(rng() % 3));
        CHECK(rank(m) == rank(m.transpose()));
    }
}

TEST_CASE("solve_in_span trivial cases") {
    RatMatrix id = RatMatrix::identity(3);
    std::vector<Rational> t{Rational(3), Rational(-1, 2), Rational(7)};
    auto x = solve_in_span(id, t);
    REQUIRE(x.has_value());
    CHECK(*x == t);

    auto z = solve_in_span(from_ints({{1, 2}, {3, 4}, {5, 6}}),
                           std::vector<Rational>(3, Rational(0)));
    REQUIRE(z.has_value());
    CHECK((*z)[0] == 0);
    CHECK((*z)[1] == 0);
}

TEST_CASE("solve_in_span against the Cramer oracle") {
    std::mt19937_64 rng(11);
    int solved = 0;
    while (solved < 25) {
        std::size_t n = 2 + rng() % 3;
        RatMatrix b(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                b.at(i, j) = Rational(static_cast<long>(rng() % 9) - 4);
        if (det(b) == 0) continue;
        std::vector<Rational> t(n);
        for (auto& v : t) v = Rational(static_cast<long>(rng() % 9) - 4);
        auto x = solve_in_span(b, t);
        REQUIRE(x.has_value());
        CHECK(*x == cramer_solve(b, t));
        CHECK(b.mul(*x) == t);
        ++solved;
    }
}

TEST_CASE("solve_in_span reports vectors outside the span") {
    RatMatrix b = from_ints({{1}, {2}, {3}});
    std::vector<Rational> t{Rational(1), Rational(2), Rational(4)};
    CHECK(!solve_in_span(b, t).has_value());
}

TEST_CASE("psd_check on the stated examples") {
    RatMatrix g(2, 2);
    g.at(0, 0) = Rational(3);
    CHECK(psd_check(g).psd);

    RatMatrix h = from_ints({{0, 1}, {1, 0}});
    auto res = psd_check(h);
    CHECK(!res.psd);
    Rational q(0);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) q += res.witness[i] * h.at(i, j) * res.witness[j];
    CHECK(q < 0);
}

TEST_CASE("psd_check accepts Gram-type matrices; witnesses are exact") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 20; ++trial) {
        std::size_t n = 2 + rng() % 3, k = 1 + rng() % 3;
        RatMatrix a(k, n);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < n; ++j)
                a.at(i, j) = Rational(static_cast<long>(rng() % 7) - 3);
        RatMatrix g(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                Rational s(0);
                for (std::size_t l = 0; l < k; ++l) s += a.at(l, i) * a.at(l, j);
                g.at(i, j) = s;
            }
        CHECK(psd_check(g).psd);
        RatMatrix bad = g;
        for (std::size_t i = 0; i < n; ++i) bad.at(i, i) -= Rational(1 + (trial % 2), 1);
        auto res = psd_check(bad);
        if (!res.psd) {
            Rational q(0);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    q += res.witness[i] * bad.at(i, j) * res.witness[j];
            CHECK(q < 0);
        }
    }
}

TEST_CASE("psd_check requires symmetry") {
    RatMatrix g = from_ints({{1, 2}, {0, 1}});
    CHECK_THROWS_AS(psd_check(g), std::invalid_argument);
}

TEST_CASE("nullspace spans the kernel") {
    RatMatrix m = from_ints({{1, 2, 3}, {2, 4, 6}});
    auto basis = nullspace(m);
    CHECK(basis.size() == 2);
    for (const auto& v : basis) {
        auto mv = m.mul(v);
        for (const auto& entry : mv) CHECK(entry == 0);
    }
    CHECK(nullspace(RatMatrix::identity(3)).empty());
}
