#pragma once

#include "foxmag/braid.hpp"
#include "foxmag/free_word.hpp"
#include "foxmag/gen_word.hpp"
#include "foxmag/group_ring.hpp"

#include <random>

namespace foxmag {

/// Deterministic pseudo-random inputs for the check suites and tests.
/// All draws come from the passed engine, so runs are reproducible per seed.

/// Nonempty freely reduced word of length 1..max_length.
FreeWord random_reduced_word(std::mt19937_64& rng, int rank, int max_length);

/// Word of exactly `length` McCool letters e[i,j]^+-1 with random indices.
GenWord random_eps_word(std::mt19937_64& rng, int n, int length);

/// Braid word of exactly `length` letters s<i>^+-1.
BraidWord random_braid_word(std::mt19937_64& rng, int strands, int length);

/// Up to max_terms terms with words of length <= max_word_length and
/// coefficients in -9..9 (zero draws are dropped, so fewer terms may remain).
GroupRingElem random_group_ring_elem(std::mt19937_64& rng, int rank, int max_terms,
                                     int max_word_length);

/// Nested commutator [[w1, w2], [w3, w4]] of random reduced words, an element
/// of the second commutator subgroup; retried until nontrivial.
FreeWord random_second_commutator_word(std::mt19937_64& rng, int rank, int max_factor_length);

} // namespace foxmag
