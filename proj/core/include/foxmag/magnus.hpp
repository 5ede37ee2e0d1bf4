#pragma once

#include "foxmag/braid.hpp"
#include "foxmag/endomorphism.hpp"
#include "foxmag/fox.hpp"
#include "foxmag/gen_word.hpp"
#include "foxmag/rep_matrix.hpp"

namespace foxmag {

/// Magnus matrix of an endomorphism: entry (i, j) is phi(d(image of x_i)/dx_j).
///
/// Requires the A_phi condition phi(image of x_i) = phi(x_i) for every i;
/// otherwise PhiIncompatibleError is thrown (for example a braid generator
/// under the Gassner spec, which permutes the variables).
RepMatrix magnus_matrix(const Endomorphism& e, RepSpec spec);

/// Gassner matrix of the pure braid generator a_rs in closed form: row r is
/// (1 - t_r + t_r t_s) e_r + t_r (1 - t_r) e_s, row k for r < k < s is
/// (t_k - 1)(t_s - 1) e_r + e_k + (t_k - 1)(1 - t_r) e_s, row s is
/// (1 - t_s) e_r + t_r e_s, and every other row is the identity.
RepMatrix gassner_matrix(int r, int s, int n);

/// Product of per-letter Magnus matrices, left to right. Length-linear, so
/// safe for words whose composed automorphism would have huge images.
RepMatrix rep_of_gen_word(const GenWord& w, int n, RepSpec spec);

/// The Gassner extension on basis-conjugating words: the per-letter product
/// under the Gassner spec. The word must consist of e[i,j] letters only.
RepMatrix rho_hat_G(const GenWord& eps_word, int n);

/// The Burau extension on conjugating automorphisms: the Magnus matrix under
/// the Burau spec. Throws NotConjugatingError when the automorphism fails
/// Artin condition 1. Permutation automorphisms yield permutation matrices.
RepMatrix rho_hat_B(const Endomorphism& e);

/// Unreduced Burau matrix of a braid word (per-letter product).
RepMatrix burau_of_braid(const BraidWord& b);

/// Collapse a Gassner-spec matrix to the Burau spec by t_i -> t.
RepMatrix specialize_to_burau(const RepMatrix& m);

/// The (n-1)-dimensional block of an unreduced Burau matrix in the basis
/// e_1 - e_2, ..., e_{n-1} - e_n plus the fixed vector (1, t, ..., t^{n-1}).
/// Throws PhiIncompatibleError if the input does not fix that vector or does
/// not preserve the complementary block shape.
RepMatrix reduced_burau(const RepMatrix& m);

/// Alexander polynomial of the closure of a braid whose permutation is an
/// n-cycle, normalized to lowest exponent 0 and positive leading coefficient.
/// det(reduced Burau - I) is divided exactly by 1 + t + ... + t^{n-1}.
LaurentPoly alexander_polynomial(const BraidWord& b);

} // namespace foxmag
