#include "foxmag/random_words.hpp"

#include <stdexcept>

namespace foxmag {

namespace {

// Engine output used directly so results do not depend on the standard
// library's distribution implementations.
int below(std::mt19937_64& rng, int bound) {
    return static_cast<int>(rng() % static_cast<std::uint64_t>(bound));
}

} // namespace

FreeWord random_reduced_word(std::mt19937_64& rng, int rank, int max_length) {
    if (max_length < 1)
        throw std::invalid_argument("word length bound must be positive");
    const int length = 1 + below(rng, max_length);
    std::vector<int> letters;
    letters.reserve(static_cast<std::size_t>(length));
    for (int p = 0; p < length; ++p) {
        int l;
        do {
            const int idx = 1 + below(rng, rank);
            l = below(rng, 2) == 0 ? idx : -idx;
        } while (!letters.empty() && l == -letters.back());
        letters.push_back(l);
    }
    return FreeWord::reduce(rank, letters);
}

GenWord random_eps_word(std::mt19937_64& rng, int n, int length) {
    if (n < 2)
        throw std::invalid_argument("eps words need rank >= 2");
    GenWord w;
    w.reserve(static_cast<std::size_t>(length));
    for (int p = 0; p < length; ++p) {
        const int i = 1 + below(rng, n);
        int j;
        do {
            j = 1 + below(rng, n);
        } while (j == i);
        w.push_back(GenLetter::eps(i, j, below(rng, 2) == 0 ? 1 : -1));
    }
    return w;
}

BraidWord random_braid_word(std::mt19937_64& rng, int strands, int length) {
    std::vector<int> letters;
    letters.reserve(static_cast<std::size_t>(length));
    for (int p = 0; p < length; ++p) {
        const int i = 1 + below(rng, strands - 1);
        letters.push_back(below(rng, 2) == 0 ? i : -i);
    }
    return BraidWord(strands, std::move(letters));
}

GroupRingElem random_group_ring_elem(std::mt19937_64& rng, int rank, int max_terms,
                                     int max_word_length) {
    GroupRingElem v(rank);
    const int terms = 1 + below(rng, max_terms);
    for (int k = 0; k < terms; ++k) {
        const int coeff = below(rng, 19) - 9;
        if (coeff == 0)
            continue;
        // allow the identity word as a term
        const FreeWord w = below(rng, 6) == 0 ? FreeWord(rank)
                                              : random_reduced_word(rng, rank, max_word_length);
        v += GroupRingElem::term(w, coeff);
    }
    return v;
}

FreeWord random_second_commutator_word(std::mt19937_64& rng, int rank, int max_factor_length) {
    if (rank < 2)
        throw std::invalid_argument("second commutator words need rank >= 2");
    for (int attempt = 0; attempt < 1000; ++attempt) {
        const FreeWord w1 = random_reduced_word(rng, rank, max_factor_length);
        const FreeWord w2 = random_reduced_word(rng, rank, max_factor_length);
        const FreeWord w3 = random_reduced_word(rng, rank, max_factor_length);
        const FreeWord w4 = random_reduced_word(rng, rank, max_factor_length);
        FreeWord w = commutator(commutator(w1, w2), commutator(w3, w4));
        if (!w.is_identity())
            return w;
    }
    throw std::runtime_error("failed to draw a nontrivial second-commutator word");
}

} // namespace foxmag
