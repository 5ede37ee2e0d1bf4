#include "foxmag/group_ring.hpp"

#include <stdexcept>

namespace foxmag {

GroupRingElem::GroupRingElem(int rank) : rank_(rank) {
    if (rank < 1)
        throw std::invalid_argument("group ring rank must be positive");
}

GroupRingElem GroupRingElem::one(int rank) {
    return from_word(FreeWord(rank));
}

GroupRingElem GroupRingElem::from_word(const FreeWord& w) {
    return term(w, 1);
}

GroupRingElem GroupRingElem::term(const FreeWord& w, mpz_class c) {
    GroupRingElem v(w.rank());
    if (c != 0)
        v.terms_.emplace(w, std::move(c));
    return v;
}

void GroupRingElem::add_term(const FreeWord& w, const mpz_class& c) {
    auto it = terms_.find(w);
    if (it == terms_.end()) {
        if (c != 0)
            terms_.emplace(w, c);
        return;
    }
    it->second += c;
    if (it->second == 0)
        terms_.erase(it);
}

GroupRingElem GroupRingElem::operator+(const GroupRingElem& rhs) const {
    GroupRingElem out = *this;
    out += rhs;
    return out;
}

GroupRingElem& GroupRingElem::operator+=(const GroupRingElem& rhs) {
    if (rank_ != rhs.rank_)
        throw std::invalid_argument("rank mismatch in group ring addition");
    for (const auto& [w, c] : rhs.terms_)
        add_term(w, c);
    return *this;
}

GroupRingElem GroupRingElem::operator-() const {
    GroupRingElem out(rank_);
    for (const auto& [w, c] : terms_)
        out.terms_.emplace(w, -c);
    return out;
}

GroupRingElem GroupRingElem::operator-(const GroupRingElem& rhs) const {
    return *this + (-rhs);
}

GroupRingElem GroupRingElem::operator*(const GroupRingElem& rhs) const {
    if (rank_ != rhs.rank_)
        throw std::invalid_argument("rank mismatch in group ring multiplication");
    GroupRingElem out(rank_);
    for (const auto& [wa, ca] : terms_)
        for (const auto& [wb, cb] : rhs.terms_)
            out.add_term(wa * wb, ca * cb);
    return out;
}

mpz_class GroupRingElem::trivialize() const {
    mpz_class s = 0;
    for (const auto& [w, c] : terms_)
        s += c;
    return s;
}

std::string GroupRingElem::str() const {
    if (terms_.empty())
        return "0";
    std::string s;
    for (const auto& [w, c] : terms_) {
        const bool negative = c < 0;
        mpz_class mag = negative ? mpz_class(-c) : c;
        const std::string term =
            w.is_identity() ? mag.get_str() : mag.get_str() + "*" + w.str();
        if (s.empty())
            s = negative ? "-" + term : term;
        else
            s += (negative ? " - " : " + ") + term;
    }
    return s;
}

LaurentPoly abelianize(const GroupRingElem& v, RepSpec spec) {
    const VarSpec vars = VarSpec::for_rep(spec, v.rank());
    LaurentPoly out(vars);
    for (const auto& [w, c] : v.terms()) {
        LaurentPoly::Exponents e;
        if (spec == RepSpec::Burau) {
            e = {static_cast<int>(w.exponent_sum())};
        } else {
            const auto sums = w.exponent_vector();
            e.assign(sums.begin(), sums.end());
        }
        out += LaurentPoly::monomial(vars, std::move(e), c);
    }
    return out;
}

LaurentPoly abelianize(const FreeWord& w, RepSpec spec) {
    return abelianize(GroupRingElem::from_word(w), spec);
}

} // namespace foxmag
