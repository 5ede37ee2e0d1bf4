#pragma once

#include "foxmag/free_word.hpp"
#include "foxmag/laurent.hpp"

#include <gmpxx.h>

#include <map>
#include <string>

namespace foxmag {

/// An element of the integral group ring ZF_n: a finite formal sum of
/// reduced words with nonzero integer coefficients.
///
/// The term map is canonical (no zero coefficients, equal words merged), so
/// equality is structural. The empty map is 0.
class GroupRingElem {
public:
    using TermMap = std::map<FreeWord, mpz_class>;

    explicit GroupRingElem(int rank); // zero
    static GroupRingElem zero(int rank) { return GroupRingElem(rank); }
    static GroupRingElem one(int rank);
    static GroupRingElem from_word(const FreeWord& w);
    static GroupRingElem term(const FreeWord& w, mpz_class c);

    int rank() const { return rank_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    GroupRingElem operator+(const GroupRingElem& rhs) const;
    GroupRingElem operator-(const GroupRingElem& rhs) const;
    GroupRingElem operator-() const;
    GroupRingElem operator*(const GroupRingElem& rhs) const;
    GroupRingElem& operator+=(const GroupRingElem& rhs);

    bool operator==(const GroupRingElem& rhs) const = default;

    /// Sum of coefficients: the trivialization map ZF_n -> Z.
    mpz_class trivialize() const;

    /// Terms `<coeff>*<word>` (bare integer for the identity word) joined by
    /// ` + ` / ` - `, shortest words first; `0` when zero.
    std::string str() const;

private:
    int rank_;
    TermMap terms_;

    void add_term(const FreeWord& w, const mpz_class& c);
};

/// Apply the chosen abelianization termwise: a word becomes the monomial of
/// its exponent-sum vector (Gassner) or of its total exponent sum (Burau).
LaurentPoly abelianize(const GroupRingElem& v, RepSpec spec);
LaurentPoly abelianize(const FreeWord& w, RepSpec spec);

} // namespace foxmag
