#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace foxmag {

/// The two abelianizations the Magnus construction is specialized at:
/// Burau sends every generator to t, Gassner sends x_i to t_i.
enum class RepSpec { Burau, Gassner };

std::string to_string(RepSpec spec);

/// Variable signature of a Laurent polynomial: the single variable t, or the
/// tuple t_1, ..., t_n.
struct VarSpec {
    enum class Kind { Single, Multi };
    Kind kind = Kind::Single;
    int n = 1;

    static VarSpec single() { return {Kind::Single, 1}; }
    static VarSpec multi(int n) { return {Kind::Multi, n}; }
    static VarSpec for_rep(RepSpec spec, int rank);

    std::string var_name(int i) const; // 1-based
    bool operator==(const VarSpec& rhs) const = default;
};

/// An integer Laurent polynomial in the variables of a VarSpec.
///
/// Terms map exponent vectors to nonzero GMP integers; zero coefficients are
/// never stored, so equality is structural. The units of this ring are
/// exactly the monomials with coefficient +1 or -1.
class LaurentPoly {
public:
    using Exponents = std::vector<int>;
    using TermMap = std::map<Exponents, mpz_class>;

    explicit LaurentPoly(VarSpec vars); // zero
    static LaurentPoly zero(VarSpec vars) { return LaurentPoly(vars); }
    static LaurentPoly one(VarSpec vars);
    static LaurentPoly constant(VarSpec vars, mpz_class c);
    /// t_i (or t when single), to the power e.
    static LaurentPoly variable(VarSpec vars, int i, int e = 1);
    static LaurentPoly monomial(VarSpec vars, Exponents exps, mpz_class c);

    const VarSpec& vars() const { return vars_; }
    const TermMap& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    /// True iff the polynomial is a single monomial with coefficient +-1.
    bool is_unit() const;

    LaurentPoly operator+(const LaurentPoly& rhs) const;
    LaurentPoly operator-(const LaurentPoly& rhs) const;
    LaurentPoly operator-() const;
    LaurentPoly operator*(const LaurentPoly& rhs) const;
    LaurentPoly& operator+=(const LaurentPoly& rhs);

    bool operator==(const LaurentPoly& rhs) const = default;

    /// Terms like `-2*t1^-1*t2^3` joined by ` + ` / ` - `, highest exponent
    /// vector first, variables in index order; `0` when zero.
    std::string str() const;

    /// (coefficient, exponent vector) pairs in display order.
    std::vector<std::pair<mpz_class, Exponents>> structured() const;

private:
    VarSpec vars_;
    TermMap terms_;

    void add_term(const Exponents& e, const mpz_class& c);
    void check_compatible(const LaurentPoly& rhs) const;
};

/// Collapse t_i -> t; the identity on single-variable input.
LaurentPoly specialize_single(const LaurentPoly& p);

/// Exact quotient of single-variable Laurent polynomials; throws
/// ExactDivisionError if the division leaves a remainder.
LaurentPoly divide_exact_single(const LaurentPoly& dividend, const LaurentPoly& divisor);

} // namespace foxmag
