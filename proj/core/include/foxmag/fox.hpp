#pragma once

#include "foxmag/group_ring.hpp"

#include <vector>

namespace foxmag {

/// Fox derivative with respect to x_j, extended linearly over ZF_n.
///
/// On a single word it follows the derivation rules: d(x_i)/dx_j is 1 or 0,
/// d(x_i^-1)/dx_j is -x_i^-1 or 0, and d(wv)/dx_j = dw/dx_j * (v)^tau
/// + w * dv/dx_j. The trivialization of v is taken literally, which agrees
/// with the classical letterwise rule on group elements and makes the
/// operator well defined on the whole ring.
GroupRingElem fox_derivative(const GroupRingElem& v, int j);
GroupRingElem fox_derivative(const FreeWord& w, int j);

/// phi(dw/dx_j) computed in one pass over the word, without building the
/// group ring element. Agrees with abelianize(fox_derivative(w, j), spec).
LaurentPoly abelianized_fox_derivative(const FreeWord& w, int j, RepSpec spec);

struct FundamentalFormulaResult {
    bool holds = false;
    GroupRingElem lhs; ///< v - (v)^tau
    GroupRingElem rhs; ///< sum over j of dv/dx_j * (x_j - 1)
};

/// Check v - (v)^tau = sum_j dv/dx_j (x_j - 1) by exact arithmetic and
/// return both sides.
FundamentalFormulaResult fundamental_formula(const GroupRingElem& v);

struct DerivativeVanishing {
    bool all_vanish = false;
    std::vector<LaurentPoly> images; ///< phi(dv/dx_j) for j = 1..n
};

/// All phi-images of the Fox derivatives of v. By Blanchfield's criterion
/// they vanish simultaneously exactly when v lies in [ker phi, ker phi].
DerivativeVanishing derivatives_vanish_under(const FreeWord& v, RepSpec spec);

} // namespace foxmag
