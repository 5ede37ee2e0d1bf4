#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "foxmag/endomorphism.hpp"
#include "foxmag/errors.hpp"
#include "foxmag/free_word.hpp"
#include "foxmag/gen_word.hpp"
#include "foxmag/parse.hpp"
#include "foxmag/random_words.hpp"

#include <random>

using namespace foxmag;

namespace {

FreeWord w(int rank, std::initializer_list<int> letters) {
    return FreeWord::reduce(rank, std::span<const int>(letters.begin(), letters.size()));
}

} // namespace

TEST_CASE("free reduction") {
    CHECK(w(2, {1, -1}).is_identity());
    CHECK(w(2, {1, 2, -2, 1}) == w(2, {1, 1}));
    CHECK(w(2, {1, 2, -1}) == w(2, {1, 2, -1}));
    CHECK(w(3, {1, 2, -2, -1, 3}) == w(3, {3}));
    CHECK_THROWS_AS(w(2, {3}), std::invalid_argument);
    CHECK_THROWS_AS(w(2, {0}), std::invalid_argument);
}

TEST_CASE("reduction is idempotent and length-nonincreasing") {
    std::mt19937_64 rng(101);
    for (int trial = 0; trial < 200; ++trial) {
        const int rank = 2 + static_cast<int>(rng() % 4);
        std::vector<int> raw;
        const int len = static_cast<int>(rng() % 16);
        for (int i = 0; i < len; ++i) {
            const int idx = 1 + static_cast<int>(rng() % rank);
            raw.push_back(rng() % 2 == 0 ? idx : -idx);
        }
        const FreeWord once = FreeWord::reduce(rank, raw);
        CHECK(once.length() <= raw.size());
        CHECK(FreeWord::reduce(rank, once.letters()) == once);
    }
}

TEST_CASE("word arithmetic") {
    const FreeWord a = w(2, {1, 2});
    CHECK(a * a.inverse() == FreeWord(2));
    CHECK(a.inverse() == w(2, {-2, -1}));
    CHECK(a.pow(0).is_identity());
    CHECK(a.pow(2) == w(2, {1, 2, 1, 2}));
    CHECK(a.pow(-1) == a.inverse());
    CHECK(w(2, {1}).exponent_vector() == std::vector<long>{1, 0});
    CHECK(w(2, {1, 2, -1}).exponent_sum() == 1);
    CHECK_THROWS_AS(w(2, {1}) * FreeWord(3), std::invalid_argument);
}

TEST_CASE("commutator") {
    CHECK(commutator(w(2, {1}), w(2, {1})).is_identity());
    CHECK(commutator(w(2, {1}), w(2, {2})) == w(2, {-1, -2, 1, 2}));
    CHECK(conjugate(w(2, {1}), w(2, {2})) == w(2, {-2, 1, 2}));
}

TEST_CASE("artin generator action") {
    const Endomorphism s1 = sigma_endo(1, 3);
    CHECK(s1.apply(w(3, {1})) == w(3, {1, 2, -1}));
    CHECK(s1.apply(w(3, {2})) == w(3, {1}));
    CHECK(s1.apply(w(3, {3})) == w(3, {3}));
    CHECK_THROWS_AS(s1.apply(FreeWord(2)), std::invalid_argument);
}

TEST_CASE("mccool generator action") {
    const Endomorphism e12 = eps_endo(1, 2, 2);
    CHECK(e12.apply(w(2, {1})) == w(2, {-2, 1, 2}));
    CHECK(e12.apply(w(2, {2})) == w(2, {2}));
    // e12 then e21
    const Endomorphism c = e12.then(eps_endo(2, 1, 2));
    CHECK(c.apply(w(2, {1})) == w(2, {-1, -2, 1, 2, 1}));
    CHECK(c.apply(w(2, {2})) == w(2, {-1, 2, 1}));
    CHECK_THROWS_AS(eps_endo(1, 1, 2), std::invalid_argument);
}

TEST_CASE("pure braid generator action") {
    const Endomorphism a13 = a_pure_endo(1, 3, 3);
    // conjugation by [x1^-1, x3^-1] on the middle generator
    const FreeWord comm = w(3, {1, 3, -1, -3});
    CHECK(a13.apply(w(3, {2})) == comm * w(3, {2}) * comm.inverse());
    CHECK(a13.apply(w(3, {1})) == w(3, {1, 3, 1, -3, -1}));
    CHECK(a13.apply(w(3, {3})) == w(3, {1, 3, -1}));
    CHECK_THROWS_AS(a_pure_endo(2, 2, 3), std::invalid_argument);
    CHECK_THROWS_AS(a_pure_endo(3, 1, 3), std::invalid_argument);
}

TEST_CASE("ia generator action") {
    const Endomorphism e123 = eps3_endo(1, 2, 3, 3);
    CHECK(e123.apply(w(3, {1})) == w(3, {1, -2, -3, 2, 3}));
    CHECK(e123.apply(w(3, {2})) == w(3, {2}));
    CHECK_THROWS_AS(eps3_endo(1, 2, 2, 3), std::invalid_argument);
}

TEST_CASE("permutation action") {
    const Endomorphism t = perm_endo(Permutation::transposition(1, 2, 2));
    CHECK(t.apply(w(2, {1})) == w(2, {2}));
    CHECK(t.apply(w(2, {2})) == w(2, {1}));
}

TEST_CASE("composition conventions") {
    const Endomorphism id = Endomorphism::identity(3);
    CHECK(id.then(eps_endo(1, 2, 3)) == eps_endo(1, 2, 3));
    CHECK(eps_endo(1, 2, 3).then(id) == eps_endo(1, 2, 3));
    // apply(a.then(b), w) = apply(b, apply(a, w))
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 100; ++trial) {
        const GenWord ga = random_eps_word(rng, 3, 4);
        const GenWord gb = random_eps_word(rng, 3, 4);
        const Endomorphism a = to_endomorphism(ga, 3);
        const Endomorphism b = to_endomorphism(gb, 3);
        const FreeWord v = random_reduced_word(rng, 3, 8);
        CHECK(a.then(b).apply(v) == b.apply(a.apply(v)));
    }
}

TEST_CASE("every named generator cancels with its inverse, both orders") {
    const int n = 4;
    std::vector<std::pair<Endomorphism, Endomorphism>> pairs;
    for (int i = 1; i <= n - 1; ++i)
        pairs.emplace_back(sigma_endo(i, n), sigma_endo_inv(i, n));
    for (int r = 1; r <= n; ++r)
        for (int s = r + 1; s <= n; ++s)
            pairs.emplace_back(a_pure_endo(r, s, n), a_pure_endo_inv(r, s, n));
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            if (i != j)
                pairs.emplace_back(eps_endo(i, j, n), eps_endo_inv(i, j, n));
    pairs.emplace_back(eps3_endo(1, 2, 3, n), eps3_endo_inv(1, 2, 3, n));
    pairs.emplace_back(eps3_endo(4, 2, 1, n), eps3_endo_inv(4, 2, 1, n));
    const Endomorphism id = Endomorphism::identity(n);
    for (const auto& [g, ginv] : pairs) {
        CHECK(g.then(ginv) == id);
        CHECK(ginv.then(g) == id);
    }
}

TEST_CASE("group commutator of a generator with itself is trivial") {
    const GenWord e12 = {GenLetter::eps(1, 2)};
    CHECK(to_endomorphism(group_commutator(e12, e12), 2) == Endomorphism::identity(2));
}

TEST_CASE("braid relations as automorphisms") {
    for (int n = 3; n <= 5; ++n) {
        for (int i = 1; i + 1 <= n - 1; ++i) {
            const Endomorphism lhs =
                sigma_endo(i, n).then(sigma_endo(i + 1, n)).then(sigma_endo(i, n));
            const Endomorphism rhs =
                sigma_endo(i + 1, n).then(sigma_endo(i, n)).then(sigma_endo(i + 1, n));
            CHECK(lhs == rhs);
        }
        for (int i = 1; i <= n - 1; ++i)
            for (int j = i + 2; j <= n - 1; ++j)
                CHECK(sigma_endo(i, n).then(sigma_endo(j, n)) ==
                      sigma_endo(j, n).then(sigma_endo(i, n)));
    }
}

// Words in e[i,1], ..., e[i,i-1] move x_i to its conjugate by the reverse of
// the substituted word.
TEST_CASE("fixed-first-index words conjugate by the reverse word") {
    std::mt19937_64 rng(23);
    const int n = 4;
    for (int trial = 0; trial < 60; ++trial) {
        const int i = 2 + static_cast<int>(rng() % 3); // 2..4
        const FreeWord formal = random_reduced_word(rng, i - 1, 8);
        GenWord gw;
        std::vector<int> substituted;
        for (int l : formal.letters()) {
            gw.push_back(GenLetter::eps(i, std::abs(l), l > 0 ? 1 : -1));
            substituted.push_back(l);
        }
        const FreeWord subst = FreeWord::reduce(n, substituted);
        const std::vector<int> reversed(subst.letters().rbegin(), subst.letters().rend());
        const FreeWord reverse_word = FreeWord::reduce(n, reversed);
        const Endomorphism e = to_endomorphism(gw, n);
        CHECK(e.apply(FreeWord::generator(i, n)) ==
              conjugate(FreeWord::generator(i, n), reverse_word));
        // generators other than x_i are untouched
        for (int g = 1; g <= n; ++g)
            if (g != i)
                CHECK(e.apply(FreeWord::generator(g, n)) == FreeWord::generator(g, n));
    }
}

// On two generators, w(e12, e21) conjugates both x_1 and x_2 by w(x_2, x_1),
// with no reversal.
TEST_CASE("two-generator words act by substituted conjugation") {
    std::mt19937_64 rng(29);
    for (int trial = 0; trial < 60; ++trial) {
        const FreeWord formal = random_reduced_word(rng, 2, 8);
        GenWord gw;
        std::vector<int> substituted;
        for (int l : formal.letters()) {
            const bool first = std::abs(l) == 1; // formal letter 1 = e12, 2 = e21
            gw.push_back(GenLetter::eps(first ? 1 : 2, first ? 2 : 1, l > 0 ? 1 : -1));
            substituted.push_back(l > 0 ? (first ? 2 : 1) : -(first ? 2 : 1));
        }
        const FreeWord conj = FreeWord::reduce(2, substituted);
        const Endomorphism e = to_endomorphism(gw, 2);
        for (int i = 1; i <= 2; ++i)
            CHECK(e.apply(FreeWord::generator(i, 2)) ==
                  conjugate(FreeWord::generator(i, 2), conj));
    }
}

TEST_CASE("word text round trip") {
    CHECK(w(2, {1, -2}).str() == "x1 x2^-1");
    CHECK(FreeWord(2).str().empty());
    CHECK(str(GenWord{GenLetter::eps(1, 2, -1), GenLetter::sigma(1),
                      GenLetter::pure(1, 3), GenLetter::eps3(1, 2, 3)}) ==
          "e[1,2]^-1 s1 a[1,3] e[1,2,3]");
}

TEST_CASE("word grammar") {
    CHECK(parse_free_word("x1 x2^-1", 2) == w(2, {1, -2}));
    CHECK(parse_free_word("", 3).is_identity());
    CHECK(parse_free_word("  x1   x1^-1 ", 1).is_identity());
    CHECK(max_free_word_index("x2 x5^-1") == 5);
    CHECK(max_free_word_index("") == 0);
    CHECK_THROWS_AS(parse_free_word("x3", 2), ParseError);
    CHECK_THROWS_AS(parse_free_word("y1", 2), ParseError);
    CHECK_THROWS_AS(parse_free_word("x", 2), ParseError);
    CHECK_THROWS_AS(parse_free_word("x1^2", 2), ParseError);
}

TEST_CASE("generator grammar") {
    const GenWord word = parse_gen_word("s1 a[1,3] e[2,1]^-1 e[1,2,3]", 3);
    REQUIRE(word.size() == 4);
    CHECK(word[0] == GenLetter::sigma(1));
    CHECK(word[1] == GenLetter::pure(1, 3));
    CHECK(word[2] == GenLetter::eps(2, 1, -1));
    CHECK(word[3] == GenLetter::eps3(1, 2, 3));
    CHECK(str(word) == "s1 a[1,3] e[2,1]^-1 e[1,2,3]");
    CHECK(parse_gen_word("", 3).empty());
    CHECK_THROWS_AS(parse_gen_word("s3", 3), ParseError);
    CHECK_THROWS_AS(parse_gen_word("a[3,1]", 3), ParseError);
    CHECK_THROWS_AS(parse_gen_word("e[1,1]", 3), ParseError);
    CHECK_THROWS_AS(parse_gen_word("e[1,2,2]", 3), ParseError);
    CHECK_THROWS_AS(parse_gen_word("e[1]", 3), ParseError);
    CHECK_THROWS_AS(parse_gen_word("q[1,2]", 3), ParseError);
    CHECK_THROWS_AS(parse_gen_word("e[1,4]", 3), ParseError);
    CHECK_THROWS_AS(parse_braid_word("e[1,2]", 3), ParseError);
    CHECK(parse_braid_word("s1 s2^-1", 3).letters == std::vector<int>{1, -2});
}

TEST_CASE("mismatched ranks are rejected") {
    CHECK_THROWS_AS(eps_endo(1, 2, 2).then(eps_endo(1, 2, 3)), std::invalid_argument);
    CHECK_THROWS_AS(commutator(w(2, {1}), FreeWord(3)), std::invalid_argument);
    CHECK_THROWS_AS(Endomorphism(2, {FreeWord(3), FreeWord(3)}), std::invalid_argument);
}
