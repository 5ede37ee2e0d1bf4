#include "foxmag/laurent.hpp"

#include "foxmag/errors.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace foxmag {

std::string to_string(RepSpec spec) {
    return spec == RepSpec::Burau ? "burau" : "gassner";
}

VarSpec VarSpec::for_rep(RepSpec spec, int rank) {
    return spec == RepSpec::Burau ? single() : multi(rank);
}

std::string VarSpec::var_name(int i) const {
    return kind == Kind::Single ? "t" : "t" + std::to_string(i);
}

LaurentPoly::LaurentPoly(VarSpec vars) : vars_(vars) {
    if (vars.n < 1)
        throw std::invalid_argument("variable count must be positive");
    if (vars.kind == VarSpec::Kind::Single && vars.n != 1)
        throw std::invalid_argument("single-variable signature must have n == 1");
}

LaurentPoly LaurentPoly::one(VarSpec vars) {
    return constant(vars, 1);
}

LaurentPoly LaurentPoly::constant(VarSpec vars, mpz_class c) {
    LaurentPoly p(vars);
    if (c != 0)
        p.terms_.emplace(Exponents(static_cast<std::size_t>(vars.n), 0), std::move(c));
    return p;
}

LaurentPoly LaurentPoly::variable(VarSpec vars, int i, int e) {
    LaurentPoly p(vars);
    if (i < 1 || i > vars.n)
        throw std::invalid_argument("variable index out of range");
    Exponents exps(static_cast<std::size_t>(vars.n), 0);
    exps[static_cast<std::size_t>(i) - 1] = e;
    if (e == 0)
        return one(vars);
    p.terms_.emplace(std::move(exps), 1);
    return p;
}

LaurentPoly LaurentPoly::monomial(VarSpec vars, Exponents exps, mpz_class c) {
    LaurentPoly p(vars);
    if (static_cast<int>(exps.size()) != vars.n)
        throw std::invalid_argument("exponent vector length mismatch");
    if (c != 0)
        p.terms_.emplace(std::move(exps), std::move(c));
    return p;
}

bool LaurentPoly::is_one() const {
    return terms_.size() == 1 && terms_.begin()->second == 1 &&
           std::all_of(terms_.begin()->first.begin(), terms_.begin()->first.end(),
                       [](int e) { return e == 0; });
}

bool LaurentPoly::is_unit() const {
    if (terms_.size() != 1)
        return false;
    const mpz_class& c = terms_.begin()->second;
    return c == 1 || c == -1;
}

void LaurentPoly::check_compatible(const LaurentPoly& rhs) const {
    if (!(vars_ == rhs.vars_))
        throw std::invalid_argument("variable signature mismatch");
}

void LaurentPoly::add_term(const Exponents& e, const mpz_class& c) {
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        if (c != 0)
            terms_.emplace(e, c);
        return;
    }
    it->second += c;
    if (it->second == 0)
        terms_.erase(it);
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& rhs) const {
    check_compatible(rhs);
    LaurentPoly out = *this;
    for (const auto& [e, c] : rhs.terms_)
        out.add_term(e, c);
    return out;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
    check_compatible(rhs);
    for (const auto& [e, c] : rhs.terms_)
        add_term(e, c);
    return *this;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly out(vars_);
    for (const auto& [e, c] : terms_)
        out.terms_.emplace(e, -c);
    return out;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& rhs) const {
    return *this + (-rhs);
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& rhs) const {
    check_compatible(rhs);
    LaurentPoly out(vars_);
    Exponents e(static_cast<std::size_t>(vars_.n));
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : rhs.terms_) {
            for (std::size_t i = 0; i < e.size(); ++i)
                e[i] = ea[i] + eb[i];
            out.add_term(e, ca * cb);
        }
    }
    return out;
}

std::string LaurentPoly::str() const {
    if (terms_.empty())
        return "0";
    std::string s;
    // highest exponent vector first
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        std::string mono;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0)
                continue;
            if (!mono.empty())
                mono += '*';
            mono += vars_.var_name(static_cast<int>(i) + 1);
            if (e[i] != 1)
                mono += '^' + std::to_string(e[i]);
        }
        const bool negative = c < 0;
        mpz_class mag = negative ? mpz_class(-c) : c;
        std::string term;
        if (mono.empty())
            term = mag.get_str();
        else if (mag == 1)
            term = mono;
        else
            term = mag.get_str() + "*" + mono;
        if (s.empty())
            s = negative ? "-" + term : term;
        else
            s += (negative ? " - " : " + ") + term;
    }
    return s;
}

std::vector<std::pair<mpz_class, LaurentPoly::Exponents>> LaurentPoly::structured() const {
    std::vector<std::pair<mpz_class, Exponents>> out;
    out.reserve(terms_.size());
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it)
        out.emplace_back(it->second, it->first);
    return out;
}

LaurentPoly specialize_single(const LaurentPoly& p) {
    if (p.vars().kind == VarSpec::Kind::Single)
        return p;
    LaurentPoly out(VarSpec::single());
    for (const auto& [e, c] : p.terms()) {
        const int total = std::accumulate(e.begin(), e.end(), 0);
        out += LaurentPoly::monomial(VarSpec::single(), {total}, c);
    }
    return out;
}

LaurentPoly divide_exact_single(const LaurentPoly& dividend, const LaurentPoly& divisor) {
    if (dividend.vars().kind != VarSpec::Kind::Single ||
        divisor.vars().kind != VarSpec::Kind::Single)
        throw std::invalid_argument("exact division is single-variable only");
    if (divisor.is_zero())
        throw std::invalid_argument("division by zero");
    if (dividend.is_zero())
        return LaurentPoly::zero(VarSpec::single());

    // Shift both to ordinary polynomials; t is a unit so divisibility is
    // unchanged.
    auto as_dense = [](const LaurentPoly& p, int& low) {
        low = p.terms().begin()->first[0];
        const int high = p.terms().rbegin()->first[0];
        std::vector<mpz_class> coeffs(static_cast<std::size_t>(high - low + 1));
        for (const auto& [e, c] : p.terms())
            coeffs[static_cast<std::size_t>(e[0] - low)] = c;
        return coeffs;
    };
    int low_a = 0, low_b = 0;
    std::vector<mpz_class> a = as_dense(dividend, low_a);
    const std::vector<mpz_class> b = as_dense(divisor, low_b);

    if (a.size() < b.size())
        throw ExactDivisionError("division leaves a remainder");
    std::vector<mpz_class> q(a.size() - b.size() + 1);
    const mpz_class& lead = b.back();
    for (std::size_t i = q.size(); i-- > 0;) {
        mpz_class& top = a[i + b.size() - 1];
        if (top == 0)
            continue;
        mpz_class qi, rem;
        mpz_fdiv_qr(qi.get_mpz_t(), rem.get_mpz_t(), top.get_mpz_t(), lead.get_mpz_t());
        if (rem != 0)
            throw ExactDivisionError("division leaves a remainder");
        q[i] = qi;
        for (std::size_t k = 0; k < b.size(); ++k)
            a[i + k] -= qi * b[k];
    }
    for (const mpz_class& r : a)
        if (r != 0)
            throw ExactDivisionError("division leaves a remainder");

    LaurentPoly out(VarSpec::single());
    for (std::size_t i = 0; i < q.size(); ++i)
        if (q[i] != 0)
            out += LaurentPoly::monomial(VarSpec::single(),
                                         {static_cast<int>(i) + low_a - low_b}, q[i]);
    return out;
}

} // namespace foxmag
