#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "foxmag/fox.hpp"
#include "foxmag/random_words.hpp"

#include <random>

using namespace foxmag;

namespace {

FreeWord w(int rank, std::initializer_list<int> letters) {
    return FreeWord::reduce(rank, std::span<const int>(letters.begin(), letters.size()));
}

GroupRingElem word_elem(int rank, std::initializer_list<int> letters) {
    return GroupRingElem::from_word(w(rank, letters));
}

} // namespace

TEST_CASE("derivative of generators") {
    CHECK(fox_derivative(w(2, {1}), 1) == GroupRingElem::one(2));
    CHECK(fox_derivative(w(2, {2}), 1).is_zero());
    CHECK(fox_derivative(w(2, {-1}), 1) == -word_elem(2, {-1}));
    CHECK(fox_derivative(w(2, {-2}), 1).is_zero());
    CHECK(fox_derivative(FreeWord(2), 1).is_zero());
    CHECK_THROWS_AS(fox_derivative(w(2, {1}), 3), std::invalid_argument);
}

TEST_CASE("derivatives of conjugation words") {
    // d(x2^-1 x1 x2)/dx2 = x2^-1 x1 - x2^-1 = x2^-1 (x1 - 1)
    CHECK(fox_derivative(w(2, {-2, 1, 2}), 2) ==
          word_elem(2, {-2, 1}) - word_elem(2, {-2}));
    CHECK(fox_derivative(w(2, {-2, 1, 2}), 1) == word_elem(2, {-2}));
    // the inverse generator: d(x2 x1 x2^-1)/dx2 = 1 - x2 x1 x2^-1
    CHECK(fox_derivative(w(2, {2, 1, -2}), 2) ==
          GroupRingElem::one(2) - word_elem(2, {2, 1, -2}));
    CHECK(fox_derivative(w(2, {2, 1, -2}), 1) == word_elem(2, {2}));
}

TEST_CASE("derivatives of the ia generator image") {
    // image of x_i under e[i,j,k] is x_i [x_j, x_k]; all four derivative
    // formulas, spelled at (i,j,k) = (1,2,3), n = 4
    const FreeWord img = w(4, {1, -2, -3, 2, 3});
    CHECK(fox_derivative(img, 1) == GroupRingElem::one(4));
    CHECK(fox_derivative(img, 2) ==
          -word_elem(4, {1, -2}) + word_elem(4, {1, -2, -3}));
    CHECK(fox_derivative(img, 3) ==
          -word_elem(4, {1, -2, -3}) + word_elem(4, {1, -2, -3, 2}));
    CHECK(fox_derivative(img, 4).is_zero());
}

TEST_CASE("conjugation derivative formulas across all index choices") {
    const int n = 4;
    const GroupRingElem one = GroupRingElem::one(n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            if (i == j)
                continue;
            const FreeWord fwd = eps_endo(i, j, n).image(i);     // x_j^-1 x_i x_j
            const FreeWord bwd = eps_endo_inv(i, j, n).image(i); // x_j x_i x_j^-1
            const GroupRingElem xjinv = word_elem(n, {-j});
            const GroupRingElem xi = word_elem(n, {i});
            CHECK(fox_derivative(fwd, i) == xjinv);
            CHECK(fox_derivative(fwd, j) == xjinv * (xi - one));
            CHECK(fox_derivative(bwd, i) == word_elem(n, {j}));
            CHECK(fox_derivative(bwd, j) == one - GroupRingElem::from_word(bwd));
            for (int m = 1; m <= n; ++m)
                if (m != i && m != j)
                    CHECK(fox_derivative(fwd, m).is_zero());
            // untouched generators differentiate trivially
            for (int l = 1; l <= n; ++l) {
                if (l == i)
                    continue;
                CHECK(fox_derivative(eps_endo(i, j, n).image(l), l) == one);
            }
        }
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            for (int k = 1; k <= n; ++k) {
                if (i == j || j == k || i == k)
                    continue;
                const FreeWord img = eps3_endo(i, j, k, n).image(i); // x_i [x_j, x_k]
                const GroupRingElem pre = GroupRingElem::from_word(w(n, {i, -j}));
                const GroupRingElem prek = GroupRingElem::from_word(w(n, {i, -j, -k}));
                CHECK(fox_derivative(img, i) == one);
                CHECK(fox_derivative(img, j) == -pre + prek);
                CHECK(fox_derivative(img, k) ==
                      -prek + prek * GroupRingElem::from_word(w(n, {j})));
                for (int m = 1; m <= n; ++m)
                    if (m != i && m != j && m != k)
                        CHECK(fox_derivative(img, m).is_zero());
            }
}

TEST_CASE("product rule with literal trivialization") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 3);
        const GroupRingElem a = random_group_ring_elem(rng, n, 4, 8);
        const GroupRingElem b = random_group_ring_elem(rng, n, 4, 8);
        for (int j = 1; j <= n; ++j) {
            const GroupRingElem lhs = fox_derivative(a * b, j);
            const GroupRingElem rhs =
                fox_derivative(a, j) * GroupRingElem::term(FreeWord(n), b.trivialize()) +
                a * fox_derivative(b, j);
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("inverse rule on words") {
    std::mt19937_64 rng(37);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 3);
        const FreeWord v = random_reduced_word(rng, n, 10);
        const GroupRingElem winv = GroupRingElem::from_word(v.inverse());
        for (int j = 1; j <= n; ++j)
            CHECK(fox_derivative(v.inverse(), j) == -(winv * fox_derivative(v, j)));
    }
}

TEST_CASE("linearity") {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 40; ++trial) {
        const GroupRingElem a = random_group_ring_elem(rng, 3, 4, 8);
        const GroupRingElem b = random_group_ring_elem(rng, 3, 4, 8);
        for (int j = 1; j <= 3; ++j)
            CHECK(fox_derivative(a + b, j) ==
                  fox_derivative(a, j) + fox_derivative(b, j));
    }
}

TEST_CASE("fast abelianized path agrees with the ring path") {
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 80; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 3);
        const FreeWord v = random_reduced_word(rng, n, 12);
        for (int j = 1; j <= n; ++j)
            for (RepSpec spec : {RepSpec::Gassner, RepSpec::Burau})
                CHECK(abelianized_fox_derivative(v, j, spec) ==
                      abelianize(fox_derivative(v, j), spec));
    }
}

TEST_CASE("fundamental formula on simple elements") {
    const auto r1 = fundamental_formula(word_elem(2, {1}));
    CHECK(r1.holds);
    CHECK(r1.lhs == word_elem(2, {1}) - GroupRingElem::one(2));

    // x1 x2 - 1 = 1 (x1 - 1) + x1 (x2 - 1)
    const auto r2 = fundamental_formula(word_elem(2, {1, 2}));
    CHECK(r2.holds);
    CHECK(fox_derivative(w(2, {1, 2}), 1) == GroupRingElem::one(2));
    CHECK(fox_derivative(w(2, {1, 2}), 2) == word_elem(2, {1}));
}

TEST_CASE("fundamental formula on random elements") {
    std::mt19937_64 rng(47);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 4);
        CHECK(fundamental_formula(random_group_ring_elem(rng, n, 5, 12)).holds);
    }
}

TEST_CASE("vanishing derivatives detect second-commutator membership") {
    // [[x1,x2],[x1,x2^-1]] lies in the second derived subgroup
    const FreeWord inner1 = commutator(w(2, {1}), w(2, {2}));
    const FreeWord inner2 = commutator(w(2, {1}), w(2, {-2}));
    const FreeWord deep = commutator(inner1, inner2);
    REQUIRE(!deep.is_identity());
    CHECK(derivatives_vanish_under(deep, RepSpec::Gassner).all_vanish);

    const auto shallow = derivatives_vanish_under(inner1, RepSpec::Gassner);
    CHECK(!shallow.all_vanish);
    // d[x1,x2]/dx1 abelianizes to t1^-1 t2^-1 - t1^-1
    const VarSpec vars = VarSpec::multi(2);
    CHECK(shallow.images[0] == LaurentPoly::monomial(vars, {-1, -1}, 1) +
                                   LaurentPoly::monomial(vars, {-1, 0}, -1));

    CHECK(derivatives_vanish_under(FreeWord(2), RepSpec::Gassner).all_vanish);
}

TEST_CASE("vanishing derivatives on random nested commutators") {
    std::mt19937_64 rng(53);
    for (int trial = 0; trial < 50; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 2);
        const FreeWord v = random_second_commutator_word(rng, n, 5);
        CHECK(derivatives_vanish_under(v, RepSpec::Gassner).all_vanish);
    }
}
