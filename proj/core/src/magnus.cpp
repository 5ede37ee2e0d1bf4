#include "foxmag/magnus.hpp"

#include "foxmag/errors.hpp"

#include <stdexcept>

namespace foxmag {

RepMatrix magnus_matrix(const Endomorphism& e, RepSpec spec) {
    const int n = e.rank();
    const VarSpec vars = VarSpec::for_rep(spec, n);
    for (int i = 1; i <= n; ++i) {
        if (!(abelianize(e.image(i), spec) ==
              abelianize(FreeWord::generator(i, n), spec)))
            throw PhiIncompatibleError(
                "endomorphism does not fix the abelianized coordinates under the " +
                to_string(spec) + " spec (generator " + std::to_string(i) + ")");
    }
    RepMatrix m(spec, n, vars);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            m.at(i, j) = abelianized_fox_derivative(e.image(i), j, spec);
    return m;
}

RepMatrix gassner_matrix(int r, int s, int n) {
    if (!(1 <= r && r < s && s <= n))
        throw std::invalid_argument("gassner matrix needs 1 <= r < s <= n");
    const VarSpec vars = VarSpec::multi(n);
    auto t = [&](int i) { return LaurentPoly::variable(vars, i); };
    const LaurentPoly one = LaurentPoly::one(vars);
    RepMatrix m = RepMatrix::identity(RepSpec::Gassner, n, vars);
    m.at(r, r) = one - t(r) + t(r) * t(s);
    m.at(r, s) = t(r) * (one - t(r));
    for (int k = r + 1; k <= s - 1; ++k) {
        m.at(k, r) = (t(k) - one) * (t(s) - one);
        m.at(k, s) = (t(k) - one) * (one - t(r));
    }
    m.at(s, r) = one - t(s);
    m.at(s, s) = t(r);
    return m;
}

RepMatrix rep_of_gen_word(const GenWord& w, int n, RepSpec spec) {
    RepMatrix acc = RepMatrix::identity(spec, n, VarSpec::for_rep(spec, n));
    for (const GenLetter& l : w)
        acc = acc * magnus_matrix(letter_endo(l, n), spec);
    return acc;
}

RepMatrix rho_hat_G(const GenWord& eps_word, int n) {
    if (!is_eps_word(eps_word))
        throw std::invalid_argument(
            "rho_hat_G is defined on words in the e[i,j] generators only");
    return rep_of_gen_word(eps_word, n, RepSpec::Gassner);
}

RepMatrix rho_hat_B(const Endomorphism& e) {
    if (!is_conjugating(e))
        throw NotConjugatingError(
            "automorphism does not satisfy Artin condition 1");
    return magnus_matrix(e, RepSpec::Burau);
}

RepMatrix burau_of_braid(const BraidWord& b) {
    return rep_of_gen_word(b.as_gen_word(), b.strands, RepSpec::Burau);
}

RepMatrix specialize_to_burau(const RepMatrix& m) {
    if (m.spec() != RepSpec::Gassner)
        throw std::invalid_argument("specialization starts from a Gassner matrix");
    RepMatrix out(RepSpec::Burau, m.dim(), VarSpec::single());
    for (int i = 1; i <= m.dim(); ++i)
        for (int j = 1; j <= m.dim(); ++j)
            out.at(i, j) = specialize_single(m.at(i, j));
    return out;
}

RepMatrix reduced_burau(const RepMatrix& m) {
    if (m.spec() != RepSpec::Burau || m.vars().kind != VarSpec::Kind::Single)
        throw std::invalid_argument("reduced form needs an unreduced Burau matrix");
    const int n = m.dim();
    if (n < 2)
        throw std::invalid_argument("reduced Burau needs dimension >= 2");
    const VarSpec vars = VarSpec::single();
    const LaurentPoly one = LaurentPoly::one(vars);

    // The fixed row vector (1, t, ..., t^{n-1}) must be fixed.
    std::vector<LaurentPoly> fixed;
    for (int j = 1; j <= n; ++j)
        fixed.push_back(LaurentPoly::monomial(vars, {j - 1}, 1));
    for (int j = 1; j <= n; ++j) {
        LaurentPoly acc(vars);
        for (int k = 1; k <= n; ++k)
            acc += fixed[static_cast<std::size_t>(k) - 1] * m.at(k, j);
        if (!(acc == fixed[static_cast<std::size_t>(j) - 1]))
            throw PhiIncompatibleError("matrix does not fix (1, t, ..., t^{n-1})");
    }

    RepMatrix out(RepSpec::Burau, n - 1, vars);
    for (int i = 1; i <= n - 1; ++i) {
        // y = (e_i - e_{i+1}) m, written in the new basis by forward
        // substitution; the coefficient on the fixed vector must be zero,
        // which is the discarded triangular column.
        std::vector<LaurentPoly> y;
        y.reserve(static_cast<std::size_t>(n));
        LaurentPoly coord_sum(vars);
        for (int j = 1; j <= n; ++j) {
            y.push_back(m.at(i, j) - m.at(i + 1, j));
            coord_sum += y.back();
        }
        if (!coord_sum.is_zero())
            throw PhiIncompatibleError("row image leaves the reduced block");
        LaurentPoly carry(vars); // c_{k-1}
        for (int k = 1; k <= n - 1; ++k) {
            LaurentPoly ck = y[static_cast<std::size_t>(k) - 1] + carry;
            out.at(i, k) = ck;
            carry = std::move(ck);
        }
        // consistency of the last coordinate: y_n = -c_{n-1}
        if (!((y[static_cast<std::size_t>(n) - 1] + carry).is_zero()))
            throw PhiIncompatibleError("row image leaves the reduced block");
    }
    return out;
}

LaurentPoly alexander_polynomial(const BraidWord& b) {
    const int n = b.strands;
    if (!permutation_of(b).is_n_cycle())
        throw ClosureNotKnotError(
            "braid closure is a link with more than one component");
    const VarSpec vars = VarSpec::single();
    const RepMatrix reduced = reduced_burau(burau_of_braid(b));
    const LaurentPoly det_shifted =
        (reduced - RepMatrix::identity(RepSpec::Burau, n - 1, vars)).det();

    LaurentPoly cyclotomic_like(vars);
    for (int k = 0; k < n; ++k)
        cyclotomic_like += LaurentPoly::monomial(vars, {k}, 1);
    LaurentPoly quotient = divide_exact_single(det_shifted, cyclotomic_like);

    if (quotient.is_zero())
        return quotient;
    // normalize: lowest exponent 0, positive leading coefficient
    const int low = quotient.terms().begin()->first[0];
    LaurentPoly shifted(vars);
    for (const auto& [e, c] : quotient.terms())
        shifted += LaurentPoly::monomial(vars, {e[0] - low}, c);
    if (shifted.terms().rbegin()->second < 0)
        shifted = -shifted;
    return shifted;
}

} // namespace foxmag
