#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <thread>

#include "paraboson/bases.hpp"
#include "paraboson/fockspace.hpp"

using namespace paraboson;

namespace {
YoungTableau T(std::vector<std::vector<int>> rows) { return YoungTableau(std::move(rows)); }
}

TEST_CASE("creation prepends letters") {
    FockVector v0 = FockVector::vacuum();
    FockVector v1 = apply_creation(1, v0);
    CHECK(v1 == FockVector::single({1}));
    CHECK(apply_creation(1, v1) == FockVector::single({1, 1}));

    FockVector mix = FockVector::single({2}, Rational(2)) + FockVector::single({1}, Rational(-3));
    FockVector lifted = apply_creation(3, mix);
    CHECK(lifted.coeff({3, 2}) == 2);
    CHECK(lifted.coeff({3, 1}) == -3);
}

TEST_CASE("gl action: substitution plus the diagonal vacuum charge") {
    FockContext ctx{2, 3, 8};
    FockVector v0 = FockVector::vacuum();
    CHECK(apply_gl(ctx, 1, 1, v0) == Rational(3, 2) * FockVector::vacuum());
    CHECK(apply_gl(ctx, 1, 2, v0).empty());

    FockVector w = FockVector::single({1, 2, 1});
    FockVector e21 = apply_gl(ctx, 2, 1, w);
    CHECK(e21.coeff({2, 2, 1}) == 1);
    CHECK(e21.coeff({1, 2, 2}) == 1);
    CHECK(e21.term_count() == 2);
}

TEST_CASE("annihilation recursion base cases") {
    FockContext ctx{2, 3, 8};
    FockEngine eng(ctx);
    CHECK(eng.apply_annihilation(1, FockVector::vacuum()).empty());
    CHECK(eng.apply_annihilation(1, FockVector::single({1})) ==
          Rational(3) * FockVector::vacuum());
    CHECK(eng.apply_annihilation(2, FockVector::single({1})).empty());
}

TEST_CASE("inner products: vacuum normalization and weight orthogonality") {
    for (int p : {1, 2, 3}) {
        FockContext ctx{2, p, 8};
        FockEngine eng(ctx);
        CHECK(eng.inner_product(FockVector::vacuum(), FockVector::vacuum()) == 1);
        CHECK(eng.inner_product(FockVector::single({1}), FockVector::single({1})) == p);
        CHECK(eng.inner_product(FockVector::single({1}), FockVector::single({2})) == 0);
        // Frozen 2x2 Gram of the mixed degree-2 weight space, from the recursion
        // worked by hand: <(1,2),(1,2)> = p^2, <(1,2),(2,1)> = p(2-p).
        const WeightSpace& ws = eng.space({1, 1});
        REQUIRE(ws.words.size() == 2);
        CHECK(ws.gram.at(0, 0) == Rational(p) * Rational(p));
        CHECK(ws.gram.at(0, 1) == Rational(p) * Rational(2 - p));
        CHECK(ws.gram.at(1, 1) == Rational(p) * Rational(p));
    }
}

TEST_CASE("adjointness of creation and annihilation") {
    FockContext ctx{3, 2, 8};
    FockEngine eng(ctx);
    std::vector<Word> words{{}, {1}, {2}, {3}, {1, 2}, {2, 1}, {3, 3}, {1, 2, 3}, {2, 2, 1}};
    for (const auto& u : words)
        for (const auto& w : words)
            for (int j = 1; j <= 3; ++j) {
                Rational lhs = eng.inner_product(apply_creation(j, FockVector::single(u)),
                                                 FockVector::single(w));
                Rational rhs = eng.inner_product(FockVector::single(u),
                                                 eng.apply_annihilation(j, FockVector::single(w)));
                CHECK(lhs == rhs);
            }
}

TEST_CASE("equality lives in the quotient module") {
    // {B_1^+, B_1^+} commutes with B_2^+, so these words collide for every p.
    for (int p : {1, 2, 3}) {
        FockContext ctx{2, p, 8};
        FockEngine eng(ctx);
        CHECK(eng.equals(FockVector::single({1, 1, 2}), FockVector::single({2, 1, 1})));
        // For p >= 2 the middle placement is genuinely different; bosons collapse it.
        CHECK(eng.equals(FockVector::single({1, 1, 2}), FockVector::single({1, 2, 1})) ==
              (p == 1));
    }
    // Bosonic case: transposed words coincide.
    FockContext boson{2, 1, 8};
    FockEngine eng(boson);
    CHECK(eng.equals(FockVector::single({1, 2}), FockVector::single({2, 1})));
    CHECK(eng.is_zero(FockVector::single({1, 2}) - FockVector::single({2, 1})));
}

TEST_CASE("weight space caches: pivots, rank, degree bound") {
    FockContext ctx{2, 1, 4};
    FockEngine eng(ctx);
    const WeightSpace& deg0 = eng.space({0, 0});
    CHECK(deg0.words.size() == 1);
    CHECK(deg0.gram.at(0, 0) == 1);
    CHECK(deg0.rank == 1);

    const WeightSpace& mixed = eng.space({1, 1});
    CHECK(mixed.rank == 1);
    REQUIRE(mixed.pivots.size() == 1);
    CHECK(mixed.pivots[0] == 0);  // first word in lex order carries the quotient

    CHECK_THROWS_WITH_AS(eng.space({3, 2}), doctest::Contains("exceeds configured bound"),
                         std::length_error);
}

TEST_CASE("canonical coordinates over pivot words") {
    FockContext ctx{2, 1, 8};
    FockEngine eng(ctx);
    auto can = eng.canonical_form(FockVector::vacuum());
    REQUIRE(can.coords.size() == 1);
    CHECK(can.coords[0] == 1);

    // (2,1) equals (1,2) in the boson module: same canonical coordinates.
    auto a = eng.canonical_form(FockVector::single({2, 1}));
    auto b = eng.canonical_form(FockVector::single({1, 2}));
    CHECK(a.coords == b.coords);

    FockVector mixed = FockVector::single({1}) + FockVector::single({1, 2});
    CHECK_THROWS_AS(eng.canonical_form(mixed), std::invalid_argument);
}

TEST_CASE("multibracket: antisymmetrized creation prefixes") {
    FockVector v0 = FockVector::vacuum();
    CHECK(multibracket({1}, v0) == FockVector::single({1}));
    FockVector br = multibracket({1, 2}, v0);
    CHECK(br.coeff({1, 2}) == 1);
    CHECK(br.coeff({2, 1}) == -1);
    CHECK(multibracket({1, 1}, v0).empty());

    // Linearity over a two-term input.
    FockVector in = FockVector::single({3}, Rational(1, 2)) + FockVector::single({1});
    FockVector out = multibracket({1, 2}, in);
    CHECK(out.coeff({1, 2, 3}) == Rational(1, 2));
    CHECK(out.coeff({2, 1, 3}) == Rational(-1, 2));
    CHECK(out.coeff({1, 2, 1}) == 1);
}

TEST_CASE("gl action on symmetrized vectors: the rank-4 substitution example") {
    FockContext ctx{4, 2, 8};
    YoungTableau a = T({{2, 2, 3}, {3, 3}});
    FockVector lhs = apply_gl(ctx, 4, 3, Omega_A(a, ctx));
    FockVector rhs = Rational(2) * Omega_A(T({{2, 2, 3}, {3, 4}}), ctx);
    rhs += Omega_A(T({{2, 2, 4}, {3, 3}}), ctx);
    CHECK(lhs == rhs);  // exact formal identity

    FockVector eig = apply_gl(ctx, 3, 3, Omega_A(a, ctx));
    CHECK(eig == (Rational(2, 2) + Rational(3)) * Omega_A(a, ctx));
}

TEST_CASE("concurrent reads of the shared caches") {
    FockContext ctx{2, 2, 6};
    FockEngine eng(ctx);
    std::vector<std::thread> threads;
    std::vector<Rational> results(4);
    for (int t = 0; t < 4; ++t)
        threads.emplace_back([&, t] {
            FockVector w = FockVector::single({1, 2, 2, 1});
            results[t] = eng.inner_product(w, w);
            eng.space({2, 2});
        });
    for (auto& th : threads) th.join();
    for (int t = 1; t < 4; ++t) CHECK(results[t] == results[0]);
}

TEST_CASE("homogeneous weight bookkeeping") {
    FockContext ctx{3, 1, 8};
    FockVector v = FockVector::single({1, 3});
    auto counts = v.homogeneous_counts(3);
    REQUIRE(counts.has_value());
    CHECK(*counts == std::vector<int>{1, 0, 1});
    GlWeight wt = GlWeight::from_counts(ctx, *counts);
    CHECK(wt.mu(1) == Rational(3, 2));
    CHECK(wt.h(1) == Rational(3, 2));
    CHECK(wt.h(2) == Rational(1, 2) - 1);
    CHECK(wt.h_diff(1, 3) == 2);  // 3/2 - (3/2 - 2)

    FockVector mixed = FockVector::single({1}) + FockVector::single({2});
    CHECK(!mixed.homogeneous_counts(3).has_value());
    CHECK(mixed.split_by_counts(3).size() == 2);
}
