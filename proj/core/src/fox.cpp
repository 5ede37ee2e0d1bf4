#include "foxmag/fox.hpp"

#include <cstdlib>
#include <stdexcept>

namespace foxmag {

namespace {

void check_var(int j, int rank) {
    if (j < 1 || j > rank)
        throw std::invalid_argument("derivative index " + std::to_string(j) +
                                    " out of range for rank " + std::to_string(rank));
}

} // namespace

GroupRingElem fox_derivative(const FreeWord& w, int j) {
    check_var(j, w.rank());
    GroupRingElem out(w.rank());
    // d(u1...um)/dx_j = sum over letters: prefix * d(letter)/dx_j
    std::vector<int> prefix;
    prefix.reserve(w.length());
    for (int l : w.letters()) {
        if (l == j) {
            out += GroupRingElem::from_word(FreeWord::reduce(w.rank(), prefix));
        } else if (l == -j) {
            std::vector<int> p = prefix;
            p.push_back(-j);
            out += -GroupRingElem::from_word(FreeWord::reduce(w.rank(), p));
        }
        prefix.push_back(l);
    }
    return out;
}

GroupRingElem fox_derivative(const GroupRingElem& v, int j) {
    check_var(j, v.rank());
    GroupRingElem out(v.rank());
    for (const auto& [w, c] : v.terms())
        out += GroupRingElem::term(FreeWord(v.rank()), c) * fox_derivative(w, j);
    return out;
}

LaurentPoly abelianized_fox_derivative(const FreeWord& w, int j, RepSpec spec) {
    check_var(j, w.rank());
    const VarSpec vars = VarSpec::for_rep(spec, w.rank());
    LaurentPoly out(vars);
    LaurentPoly::Exponents prefix(static_cast<std::size_t>(vars.n), 0);
    auto bump = [&prefix, spec](int letter) {
        const int d = letter > 0 ? 1 : -1;
        if (spec == RepSpec::Burau)
            prefix[0] += d;
        else
            prefix[static_cast<std::size_t>(std::abs(letter)) - 1] += d;
    };
    for (int l : w.letters()) {
        if (l == j) {
            out += LaurentPoly::monomial(vars, prefix, 1);
        } else if (l == -j) {
            bump(l);
            out += LaurentPoly::monomial(vars, prefix, -1);
            continue;
        }
        bump(l);
    }
    return out;
}

FundamentalFormulaResult fundamental_formula(const GroupRingElem& v) {
    const int n = v.rank();
    FundamentalFormulaResult r{false, GroupRingElem(n), GroupRingElem(n)};
    r.lhs = v - GroupRingElem::term(FreeWord(n), v.trivialize());
    for (int j = 1; j <= n; ++j) {
        const GroupRingElem factor =
            GroupRingElem::from_word(FreeWord::generator(j, n)) - GroupRingElem::one(n);
        r.rhs += fox_derivative(v, j) * factor;
    }
    r.holds = r.lhs == r.rhs;
    return r;
}

DerivativeVanishing derivatives_vanish_under(const FreeWord& v, RepSpec spec) {
    DerivativeVanishing r;
    r.all_vanish = true;
    r.images.reserve(static_cast<std::size_t>(v.rank()));
    for (int j = 1; j <= v.rank(); ++j) {
        r.images.push_back(abelianized_fox_derivative(v, j, spec));
        if (!r.images.back().is_zero())
            r.all_vanish = false;
    }
    return r;
}

} // namespace foxmag
