#pragma once

#include "foxmag/endomorphism.hpp"
#include "foxmag/gen_word.hpp"
#include "foxmag/permutation.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace foxmag {

/// A word in the braid generators of B_n, letters stored as signed indices:
/// +i for s_i, -i for its inverse, with 1 <= i <= strands-1.
struct BraidWord {
    int strands;
    std::vector<int> letters;

    BraidWord(int strands, std::vector<int> letters);
    GenWord as_gen_word() const;
};

/// Artin action of the whole braid word, composed left to right.
Endomorphism braid_to_endo(const BraidWord& b);

/// Image of the braid word in the symmetric group: each s_i acts as the
/// transposition (i, i+1).
Permutation permutation_of(const BraidWord& b);

/// a_ij as a braid word: s_{j-1} ... s_{i+1} s_i^2 s_{i+1}^-1 ... s_{j-1}^-1.
BraidWord pure_generator_as_braid(int i, int j, int n);

/// Which of the two McCool-generator expressions for a_ij to produce: the
/// Lower form conjugates by e[k,i] letters, the Upper form by e[k,j] letters.
/// Both compose to the same automorphism.
enum class EpsForm { Lower, Upper };

/// a_ij written in McCool generators; for j = i+1 both forms coincide with
/// e[i,j]^-1 e[j,i]^-1.
GenWord pure_generator_as_eps(int i, int j, int n, EpsForm form);

struct ConjugatingData {
    Permutation perm;
    /// conjugators[i-1] = f_i with image(x_i) = f_i^-1 x_{perm(i)} f_i,
    /// f_i of minimal length.
    std::vector<FreeWord> conjugators;
};

/// Decide Artin condition 1: every generator image is a conjugate of a
/// generator. Returns the permutation and minimal conjugators, or nullopt.
std::optional<ConjugatingData> is_conjugating(const Endomorphism& e);

/// Artin's recognition: conjugating and fixing the product x_1 x_2 ... x_n.
bool is_braid(const Endomorphism& e);

/// Generators a_{1,i}, ..., a_{i-1,i} of the free subgroup U_i of P_n.
std::vector<GenLetter> u_subgroup_generators(int i, int n);

/// Generators e[i+1,1..i] and e[1..i,i+1] of the subgroup D_i of Cb_n.
std::vector<GenLetter> d_subgroup_generators(int i, int n);

/// A nontrivial element of the second commutator subgroup of the free group
/// on e[i+1,1], ..., e[i+1,i] (needs 2 <= i <= n-1), built as a commutator
/// of two commutators of random subgroup words. Deterministic per seed; the
/// result is verified nontrivial as a formal free word.
GenWord second_commutator_witness_L(int i, int n, std::uint64_t seed,
                                    int max_factor_length = 5);

/// Same construction over the free group on e[2,1], e[1,2], the whole of
/// the basis-conjugating group on two letters.
GenWord second_commutator_witness_D1(std::uint64_t seed, int max_factor_length = 5);

} // namespace foxmag
