#include "foxmag/braid.hpp"

#include "foxmag/random_words.hpp"

#include <cstdlib>
#include <random>
#include <stdexcept>

namespace foxmag {

BraidWord::BraidWord(int strands, std::vector<int> letters)
    : strands(strands), letters(std::move(letters)) {
    if (strands < 2)
        throw std::invalid_argument("braid group needs at least 2 strands");
    for (int l : this->letters)
        if (l == 0 || std::abs(l) > strands - 1)
            throw std::invalid_argument("braid letter index out of range");
}

GenWord BraidWord::as_gen_word() const {
    GenWord w;
    w.reserve(letters.size());
    for (int l : letters)
        w.push_back(GenLetter::sigma(std::abs(l), l > 0 ? 1 : -1));
    return w;
}

Endomorphism braid_to_endo(const BraidWord& b) {
    return to_endomorphism(b.as_gen_word(), b.strands);
}

Permutation permutation_of(const BraidWord& b) {
    Permutation p = Permutation::identity(b.strands);
    for (int l : b.letters)
        p = p.then(Permutation::transposition(std::abs(l), std::abs(l) + 1, b.strands));
    return p;
}

BraidWord pure_generator_as_braid(int i, int j, int n) {
    if (!(1 <= i && i < j && j <= n))
        throw std::invalid_argument("pure generator needs 1 <= i < j <= n");
    std::vector<int> letters;
    for (int k = j - 1; k >= i + 1; --k)
        letters.push_back(k);
    letters.push_back(i);
    letters.push_back(i);
    for (int k = i + 1; k <= j - 1; ++k)
        letters.push_back(-k);
    return BraidWord(n, std::move(letters));
}

GenWord pure_generator_as_eps(int i, int j, int n, EpsForm form) {
    if (!(1 <= i && i < j && j <= n))
        throw std::invalid_argument("pure generator needs 1 <= i < j <= n");
    GenWord w;
    if (form == EpsForm::Lower) {
        for (int k = j - 1; k >= i + 1; --k)
            w.push_back(GenLetter::eps(k, i));
        w.push_back(GenLetter::eps(i, j, -1));
        w.push_back(GenLetter::eps(j, i, -1));
        for (int k = i + 1; k <= j - 1; ++k)
            w.push_back(GenLetter::eps(k, i, -1));
    } else {
        for (int k = j - 1; k >= i + 1; --k)
            w.push_back(GenLetter::eps(k, j, -1));
        w.push_back(GenLetter::eps(i, j, -1));
        w.push_back(GenLetter::eps(j, i, -1));
        for (int k = i + 1; k <= j - 1; ++k)
            w.push_back(GenLetter::eps(k, j));
    }
    return w;
}

std::optional<ConjugatingData> is_conjugating(const Endomorphism& e) {
    const int n = e.rank();
    std::vector<int> images(static_cast<std::size_t>(n), 0);
    std::vector<FreeWord> conjugators;
    conjugators.reserve(static_cast<std::size_t>(n));
    std::vector<bool> hit(static_cast<std::size_t>(n), false);
    for (int i = 1; i <= n; ++i) {
        const auto& ls = e.image(i).letters();
        // cyclic reduction: wings must be exact mirror images
        std::size_t lo = 0, hi = ls.size();
        while (hi - lo >= 2 && ls[lo] == -ls[hi - 1]) {
            ++lo;
            --hi;
        }
        if (hi - lo != 1 || ls[lo] < 0)
            return std::nullopt;
        const int target = ls[lo];
        if (hit[static_cast<std::size_t>(target) - 1])
            return std::nullopt;
        hit[static_cast<std::size_t>(target) - 1] = true;
        images[static_cast<std::size_t>(i) - 1] = target;
        // image = f^-1 x_target f, so f is the right wing
        conjugators.push_back(FreeWord::reduce(
            n, std::span<const int>(ls.data() + hi, ls.size() - hi)));
    }
    return ConjugatingData{Permutation(std::move(images)), std::move(conjugators)};
}

bool is_braid(const Endomorphism& e) {
    if (!is_conjugating(e))
        return false;
    std::vector<int> letters;
    for (int i = 1; i <= e.rank(); ++i)
        letters.push_back(i);
    const FreeWord product = FreeWord::reduce(e.rank(), letters);
    return e.apply(product) == product;
}

std::vector<GenLetter> u_subgroup_generators(int i, int n) {
    if (!(2 <= i && i <= n))
        throw std::invalid_argument("U_i needs 2 <= i <= n");
    std::vector<GenLetter> gens;
    for (int k = 1; k <= i - 1; ++k)
        gens.push_back(GenLetter::pure(k, i));
    return gens;
}

std::vector<GenLetter> d_subgroup_generators(int i, int n) {
    if (!(1 <= i && i <= n - 1))
        throw std::invalid_argument("D_i needs 1 <= i <= n-1");
    std::vector<GenLetter> gens;
    for (int k = 1; k <= i; ++k)
        gens.push_back(GenLetter::eps(i + 1, k));
    for (int k = 1; k <= i; ++k)
        gens.push_back(GenLetter::eps(k, i + 1));
    return gens;
}

namespace {

// Formal second-commutator word over the alphabet, spelled in its letters.
GenWord witness_over_alphabet(const std::vector<GenLetter>& alphabet, std::uint64_t seed,
                              int max_factor_length) {
    const int m = static_cast<int>(alphabet.size());
    if (m < 2)
        throw std::invalid_argument("witness alphabet needs at least two generators");
    std::mt19937_64 rng(seed);
    const FreeWord formal = random_second_commutator_word(rng, m, max_factor_length);
    GenWord out;
    out.reserve(formal.length());
    for (int l : formal.letters()) {
        GenLetter g = alphabet[static_cast<std::size_t>(std::abs(l)) - 1];
        g.pow = l > 0 ? 1 : -1;
        out.push_back(g);
    }
    return out;
}

} // namespace

GenWord second_commutator_witness_L(int i, int n, std::uint64_t seed, int max_factor_length) {
    if (!(2 <= i && i <= n - 1))
        throw std::invalid_argument("L_i witness needs 2 <= i <= n-1");
    std::vector<GenLetter> alphabet;
    for (int k = 1; k <= i; ++k)
        alphabet.push_back(GenLetter::eps(i + 1, k));
    return witness_over_alphabet(alphabet, seed, max_factor_length);
}

GenWord second_commutator_witness_D1(std::uint64_t seed, int max_factor_length) {
    const std::vector<GenLetter> alphabet = {GenLetter::eps(2, 1), GenLetter::eps(1, 2)};
    return witness_over_alphabet(alphabet, seed, max_factor_length);
}

} // namespace foxmag
