#pragma once

#include "foxmag/free_word.hpp"
#include "foxmag/permutation.hpp"

#include <string>
#include <vector>

namespace foxmag {

/// An endomorphism of F_n given by the images of the generators.
///
/// Composition is written left to right: `a.then(b)` acts as a first, then b,
/// so that words in named generators map to compositions in reading order.
/// Every constructor in the named generator families below produces an
/// automorphism; general endomorphisms are not inverted.
class Endomorphism {
public:
    static Endomorphism identity(int rank);

    /// images[i-1] is the image of x_i; all words must have the same rank.
    Endomorphism(int rank, std::vector<FreeWord> images);

    int rank() const { return rank_; }
    const FreeWord& image(int i) const; // 1-based

    /// Substitute the stored images letterwise and reduce.
    FreeWord apply(const FreeWord& w) const;

    /// Left-to-right composition: apply this first, then next.
    Endomorphism then(const Endomorphism& next) const;

    bool operator==(const Endomorphism& rhs) const = default;

private:
    int rank_;
    std::vector<FreeWord> images_;
};

/// Artin action of the braid generator: x_i -> x_i x_{i+1} x_i^-1,
/// x_{i+1} -> x_i.
Endomorphism sigma_endo(int i, int n);
Endomorphism sigma_endo_inv(int i, int n);

/// Pure braid generator a_rs, r < s: x_r -> x_r x_s x_r x_s^-1 x_r^-1,
/// x_s -> x_r x_s x_r^-1, and conjugation by [x_r^-1, x_s^-1] in between.
Endomorphism a_pure_endo(int r, int s, int n);
Endomorphism a_pure_endo_inv(int r, int s, int n);

/// McCool generator: x_i -> x_j^-1 x_i x_j (i != j).
Endomorphism eps_endo(int i, int j, int n);
/// x_i -> x_j x_i x_j^-1.
Endomorphism eps_endo_inv(int i, int j, int n);

/// IA generator: x_i -> x_i [x_j, x_k], i, j, k pairwise distinct.
Endomorphism eps3_endo(int i, int j, int k, int n);
Endomorphism eps3_endo_inv(int i, int j, int k, int n);

/// x_i -> x_{p(i)}.
Endomorphism perm_endo(const Permutation& p);

} // namespace foxmag
