#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "paraboson/combinatorics.hpp"

using namespace paraboson;

namespace {

Partition P(std::vector<int> v) { return Partition(std::move(v)); }
YoungTableau T(std::vector<std::vector<int>> rows) { return YoungTableau(std::move(rows)); }

// Independent count oracle: hook content product over the cells of the diagram.
long hook_content_count(const Partition& lam, int n) {
    if (lam.length() > n) return 0;
    Partition conj = lam.conjugate();
    Rational prod(1);
    for (int r = 1; r <= lam.length(); ++r)
        for (int c = 1; c <= lam.part(r); ++c) {
            long hook = (lam.part(r) - c) + (conj.part(c) - r) + 1;
            prod *= Rational(n + c - r) / Rational(hook);
        }
    REQUIRE(prod.get_den() == 1);
    return prod.get_num().get_si();
}

}  // namespace

TEST_CASE("conjugate on the stated examples and as an involution") {
    CHECK(P({4, 3, 1}).conjugate() == P({3, 2, 2, 1}));
    CHECK(P({}).conjugate() == P({}));
    CHECK(P({2, 2}).conjugate() == P({2, 2}));
    for (int d = 0; d <= 7; ++d)
        for (const auto& lam : enumerate_partitions(d, d))
            CHECK(lam.conjugate().conjugate() == lam);
}

TEST_CASE("partition construction rejects bad input") {
    CHECK_THROWS_AS(P({1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(P({2, -1}), std::invalid_argument);
    CHECK(P({3, 1, 0, 0}).length() == 2);
}

TEST_CASE("semistandard enumeration matches the hook content oracle") {
    CHECK(enumerate_ssyt(P({1}), 3).size() == 3);
    CHECK(enumerate_ssyt(P({4, 2}), 3).size() == 27);
    CHECK(enumerate_ssyt(P({1, 1, 1, 1}), 3).empty());
    for (int n = 1; n <= 3; ++n)
        for (int d = 0; d <= 6; ++d)
            for (const auto& lam : enumerate_partitions(d, d)) {
                auto tabs = enumerate_ssyt(lam, n);
                CHECK(static_cast<long>(tabs.size()) == hook_content_count(lam, n));
                for (const auto& a : tabs) CHECK(a.semistandard());
                // Deterministic order: lex on reading words.
                for (std::size_t i = 1; i < tabs.size(); ++i)
                    CHECK(tabs[i - 1].reading_word() < tabs[i].reading_word());
            }
}

TEST_CASE("exponent matrix counts entries per row") {
    ExponentMatrix g = exponent_matrix(T({{1, 1, 3, 3}, {2, 2}}), 3);
    CHECK(g.at(1, 1) == 2);
    CHECK(g.at(2, 2) == 2);
    CHECK(g.at(3, 1) == 2);
    int total = 0;
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j) total += g.at(i, j);
    CHECK(total == 6);

    CHECK(exponent_matrix(YoungTableau(), 3) == ExponentMatrix(3));

    // A non-semistandard filling: counts follow the definition directly.
    ExponentMatrix h = exponent_matrix(T({{1, 2, 3, 3}, {2, 3}, {1, 2}}), 3);
    CHECK(h.at(1, 1) == 1);
    CHECK(h.at(2, 1) == 1);
    CHECK(h.at(3, 1) == 2);
    CHECK(h.at(2, 2) == 1);
    CHECK(h.at(3, 2) == 1);
    CHECK(h.at(1, 3) == 1);
    CHECK(h.at(2, 3) == 1);
    Partition col;
    CHECK(h.column_sums_partition(col));
    CHECK(col == P({4, 2, 2}));
}

TEST_CASE("row-sorted tableau from a matrix") {
    ExponentMatrix g(3, {{1, 0, 1}, {1, 1, 1}, {2, 2, 0}});
    CHECK(tableau_from_matrix(g) == T({{1, 2, 3, 3}, {2, 3, 3}, {1, 2}}));

    ExponentMatrix diag(3);
    diag.at(1, 1) = 3;
    diag.at(2, 2) = 1;
    CHECK(tableau_from_matrix(diag) == T({{1, 1, 1}, {2}}));

    CHECK(tableau_from_matrix(ExponentMatrix(3)) == YoungTableau());

    ExponentMatrix bad(2);
    bad.at(1, 2) = 1;  // column sums (0,1): not a partition
    CHECK_THROWS_AS(tableau_from_matrix(bad), std::invalid_argument);
}

TEST_CASE("matrix and tableau round trips") {
    for (int d = 0; d <= 5; ++d)
        for (const auto& lam : enumerate_partitions(d, 3))
            for (const auto& a : enumerate_ssyt(lam, 3)) {
                ExponentMatrix g = exponent_matrix(a, 3);
                CHECK(is_ssyt_matrix(g));
                CHECK(tableau_from_matrix(g) == a);
                CHECK(exponent_matrix(tableau_from_matrix(g), 3) == g);
            }
}

TEST_CASE("semistandardness test on matrices agrees with the direct check") {
    ExponentMatrix diag(3);
    diag.at(1, 1) = 4;
    diag.at(2, 2) = 2;
    CHECK(is_ssyt_matrix(diag));
    CHECK(is_ssyt_matrix(exponent_matrix(T({{1, 1, 3, 3}, {2, 2}}), 3)));

    // Brute force over all 3x3 matrices with entries <= 2.
    std::vector<int> e(9, 0);
    long agree = 0;
    while (true) {
        ExponentMatrix g(3, {{e[0], e[1], e[2]}, {e[3], e[4], e[5]}, {e[6], e[7], e[8]}});
        Partition col;
        bool direct = g.column_sums_partition(col) && tableau_from_matrix(g).semistandard();
        CHECK(is_ssyt_matrix(g) == direct);
        ++agree;
        int pos = 8;
        while (pos >= 0 && e[pos] == 2) e[pos--] = 0;
        if (pos < 0) break;
        ++e[pos];
    }
    CHECK(agree == 19683);
}

TEST_CASE("row and column permutations") {
    YoungTableau a = T({{1, 1, 3, 3}, {2, 2}});
    Partition lam = a.shape();

    YoungSubgroupElement id;
    id.perms = {{1, 2, 3, 4}, {1, 2}};
    id.sign = 1;
    CHECK(row_permute(a, id) == a);

    // Orbit size equals the multinomial count of distinct row arrangements.
    std::set<YoungTableau> orbit;
    for (const auto& tau : enumerate_young_subgroup(lam)) orbit.insert(row_permute(a, tau));
    CHECK(orbit.size() == 6);

    RowOrbit ro = enumerate_row_arrangements(exponent_matrix(a, 3));
    CHECK(ro.tableaux.size() == 6);
    CHECK(ro.multiplicity == 8);
    CHECK(std::set<YoungTableau>(ro.tableaux.begin(), ro.tableaux.end()) == orbit);

    // Column permutation on the first column of a two-row shape.
    YoungSubgroupElement sigma;
    sigma.perms = {{2, 1}, {2, 1}, {1}, {1}};
    sigma.sign = 1;
    YoungTableau swapped = column_permute(a, sigma);
    CHECK(swapped == T({{2, 2, 3, 3}, {1, 1}}));

    YoungSubgroupElement wrong;
    wrong.perms = {{1, 2}, {1, 2}};
    CHECK_THROWS_AS(row_permute(a, wrong), std::invalid_argument);
}

TEST_CASE("subgroup elements carry the product sign") {
    for (const auto& tau : enumerate_young_subgroup(P({2, 2}))) {
        int s = 1;
        for (const auto& p : tau.perms)
            if (p[0] > p[1]) s = -s;
        CHECK(tau.sign == s);
    }
    CHECK(enumerate_young_subgroup(P({2, 2})).size() == 4);
    CHECK_THROWS_AS(enumerate_young_subgroup(P({8, 8}), 100), std::length_error);
}

TEST_CASE("index tuples with fixed endpoints") {
    CHECK(enumerate_index_tuples(2, 2) == std::vector<IndexTuple>{{2}});
    CHECK(enumerate_index_tuples(1, 3) == std::vector<IndexTuple>{{1, 3}, {1, 2, 3}});
    CHECK(enumerate_index_tuples(3, 1).empty());
    CHECK(tuple_complement({1, 3}, 1, 3) == IndexTuple{2});
    CHECK(tuple_complement({1, 2, 3}, 1, 3) == IndexTuple{});
    for (int i = 1; i <= 4; ++i)
        for (int j = i + 1; j <= 5; ++j) {
            auto tuples = enumerate_index_tuples(i, j);
            CHECK(static_cast<long>(tuples.size()) == (1L << (j - i - 1)));
            for (const auto& t : tuples) {
                CHECK(t.front() == i);
                CHECK(t.back() == j);
                CHECK(static_cast<int>(t.size() + tuple_complement(t, i, j).size()) ==
                      j - i + 1);
            }
        }
}

TEST_CASE("triangular patterns from tableaux") {
    // Highest-weight filling: constant rows of the pattern.
    YoungTableau hw = T({{1, 1, 1}, {2, 2}});
    auto m = gz_pattern(hw, 3);
    CHECK(m[0] == std::vector<int>{3, 3, 3});
    CHECK(m[1] == std::vector<int>{2, 2});
    CHECK(m[2] == std::vector<int>{0});

    auto m2 = gz_pattern(T({{1, 1, 3, 3}, {2, 2}}), 3);
    CHECK(m2[0] == std::vector<int>{2, 2, 4});
    CHECK(m2[1] == std::vector<int>{2, 2});
    CHECK(m2[2] == std::vector<int>{0});

    CHECK_THROWS_AS(gz_pattern(T({{2, 1}}), 3), std::invalid_argument);

    // Betweenness over every semistandard tableau at desk scale.
    for (int d = 0; d <= 6; ++d)
        for (const auto& lam : enumerate_partitions(d, 3))
            for (const auto& a : enumerate_ssyt(lam, 3)) {
                auto pat = gz_pattern(a, 3);
                for (int i = 1; i <= 3; ++i) {
                    CHECK(pat[i - 1][3 - i] == lam.part(i));
                    for (int j = i; j <= 3; ++j) {
                        int mij = pat[i - 1][j - i];
                        CHECK(mij >= 0);
                        if (j + 1 <= 3) {
                            CHECK(pat[i - 1][j + 1 - i] >= mij);
                            if (i + 1 <= j + 1 && i + 1 <= 3)
                                CHECK(mij >= pat[i][j + 1 - (i + 1)]);
                        }
                    }
                }
            }
}

TEST_CASE("exponent matrices separate row orbits") {
    // Equal matrices exactly when one tableau is a row rearrangement of the other.
    Partition lam({2, 1});
    std::vector<YoungTableau> all;
    std::vector<std::vector<int>> row1, row2;
    for (int a = 1; a <= 2; ++a)
        for (int b = 1; b <= 2; ++b)
            for (int c = 1; c <= 2; ++c) all.push_back(T({{a, b}, {c}}));
    for (const auto& x : all)
        for (const auto& y : all) {
            bool same_gamma = exponent_matrix(x, 2) == exponent_matrix(y, 2);
            bool related = false;
            for (const auto& tau : enumerate_young_subgroup(lam))
                if (row_permute(x, tau) == y) related = true;
            CHECK(same_gamma == related);
        }
}

TEST_CASE("tableau text form") {
    CHECK(T({{1, 1, 3}, {2}}).to_text() == "1 1 3\n2\n");
}
