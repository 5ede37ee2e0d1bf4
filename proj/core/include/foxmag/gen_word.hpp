#pragma once

#include "foxmag/endomorphism.hpp"

#include <string>
#include <vector>

namespace foxmag {

/// Named automorphism families that can appear in a generator word.
enum class GenKind {
    Sigma, ///< braid generator s<i>
    Pure,  ///< pure braid generator a[r,s]
    Eps,   ///< McCool generator e[i,j]
    Eps3,  ///< IA generator e[i,j,k]
};

/// One symbol of a generator word, with exponent +1 or -1.
struct GenLetter {
    GenKind kind;
    int a = 0;
    int b = 0;
    int c = 0;
    int pow = 1;

    static GenLetter sigma(int i, int p = 1) { return {GenKind::Sigma, i, 0, 0, p}; }
    static GenLetter pure(int r, int s, int p = 1) { return {GenKind::Pure, r, s, 0, p}; }
    static GenLetter eps(int i, int j, int p = 1) { return {GenKind::Eps, i, j, 0, p}; }
    static GenLetter eps3(int i, int j, int k, int p = 1) { return {GenKind::Eps3, i, j, k, p}; }

    GenLetter inverse() const { return {kind, a, b, c, -pow}; }
    bool operator==(const GenLetter& rhs) const = default;
};

/// A word in the named generators, read left to right.
using GenWord = std::vector<GenLetter>;

/// The automorphism of F_n a single letter stands for.
Endomorphism letter_endo(const GenLetter& l, int n);

/// Compose the letters of w left to right as automorphisms of F_n.
Endomorphism to_endomorphism(const GenWord& w, int n);

/// Formal inverse: reverse the letters and flip every exponent.
GenWord inverse(const GenWord& w);

/// [u, v] = u^-1 v^-1 u v as a generator word.
GenWord group_commutator(const GenWord& u, const GenWord& v);

/// True iff every letter is a McCool generator e[i,j].
bool is_eps_word(const GenWord& w);

/// Tokens `s<i>`, `a[<r>,<s>]`, `e[<i>,<j>]`, `e[<i>,<j>,<k>]` with optional
/// `^-1`, joined by single spaces.
std::string str(const GenWord& w);

} // namespace foxmag
