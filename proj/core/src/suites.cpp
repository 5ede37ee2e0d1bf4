#include "foxmag/suites.hpp"

#include "foxmag/fox.hpp"
#include "foxmag/magnus.hpp"
#include "foxmag/random_words.hpp"

#include <initializer_list>
#include <random>
#include <stdexcept>
#include <vector>

namespace foxmag {

namespace {

GenWord gen_pow(const GenWord& w, int e) {
    return e >= 0 ? w : inverse(w);
}

GenWord concat(std::initializer_list<GenWord> parts) {
    GenWord out;
    for (const GenWord& p : parts)
        out.insert(out.end(), p.begin(), p.end());
    return out;
}

struct RelationInstance {
    GenWord lhs;
    GenWord rhs;
    std::string label;
};

void check_instances(SuiteResult& result, const std::vector<RelationInstance>& instances,
                     int n, RepSpec spec) {
    for (const auto& inst : instances) {
        result.expect(to_endomorphism(inst.lhs, n) == to_endomorphism(inst.rhs, n),
                      inst.label + " fails as automorphisms: " + str(inst.lhs) +
                          " != " + str(inst.rhs));
        result.expect(rep_of_gen_word(inst.lhs, n, spec) ==
                          rep_of_gen_word(inst.rhs, n, spec),
                      inst.label + " fails as " + to_string(spec) + " matrices: " +
                          str(inst.lhs) + " != " + str(inst.rhs));
    }
}

} // namespace

SuiteResult check_braid_relations(int n) {
    if (n < 2)
        throw std::invalid_argument("braid relations need n >= 2");
    std::vector<RelationInstance> instances;
    for (int i = 1; i + 1 <= n - 1; ++i) {
        const GenWord si = {GenLetter::sigma(i)};
        const GenWord sj = {GenLetter::sigma(i + 1)};
        instances.push_back({concat({si, sj, si}), concat({sj, si, sj}),
                             "braid relation at i=" + std::to_string(i)});
    }
    for (int i = 1; i <= n - 1; ++i)
        for (int j = i + 2; j <= n - 1; ++j) {
            const GenWord si = {GenLetter::sigma(i)};
            const GenWord sj = {GenLetter::sigma(j)};
            instances.push_back({concat({si, sj}), concat({sj, si}),
                                 "commuting relation at i=" + std::to_string(i) +
                                     ", j=" + std::to_string(j)});
        }
    SuiteResult result;
    check_instances(result, instances, n, RepSpec::Burau);
    return result;
}

SuiteResult check_pure_relations(int n) {
    if (n < 3)
        throw std::invalid_argument("pure-braid relations need n >= 3");
    auto A = [](int r, int s, int e = 1) { return GenWord{GenLetter::pure(r, s, e)}; };
    std::vector<RelationInstance> instances;
    auto conjugation = [&](const GenWord& middle, const GenWord& by, int e) {
        return concat({gen_pow(by, e), middle, gen_pow(by, -e)});
    };
    for (int e : {1, -1}) {
        const std::string se = e == 1 ? "+1" : "-1";
        // a_ik^-e a_kj a_ik^e = (a_ij a_kj)^e a_kj (a_ij a_kj)^-e
        for (int i = 1; i <= n; ++i)
            for (int k = i + 1; k <= n; ++k)
                for (int j = k + 1; j <= n; ++j)
                    instances.push_back(
                        {conjugation(A(k, j), A(i, k), -e),
                         conjugation(A(k, j), concat({A(i, j), A(k, j)}), e),
                         "pure relation I (i,k,j)=(" + std::to_string(i) + "," +
                             std::to_string(k) + "," + std::to_string(j) + ") e=" + se});
        // a_km^-e a_kj a_km^e = (a_kj a_mj)^e a_kj (a_kj a_mj)^-e, k < m < j
        for (int k = 1; k <= n; ++k)
            for (int m = k + 1; m <= n; ++m)
                for (int j = m + 1; j <= n; ++j)
                    instances.push_back(
                        {conjugation(A(k, j), A(k, m), -e),
                         conjugation(A(k, j), concat({A(k, j), A(m, j)}), e),
                         "pure relation II (k,m,j)=(" + std::to_string(k) + "," +
                             std::to_string(m) + "," + std::to_string(j) + ") e=" + se});
        // a_im^-e a_kj a_im^e = [a_ij^-e, a_mj^-e]^e a_kj [...]^-e, i < k < m < j
        for (int i = 1; i <= n; ++i)
            for (int k = i + 1; k <= n; ++k)
                for (int m = k + 1; m <= n; ++m)
                    for (int j = m + 1; j <= n; ++j) {
                        const GenWord comm = group_commutator(A(i, j, -e), A(m, j, -e));
                        instances.push_back(
                            {conjugation(A(k, j), A(i, m), -e),
                             conjugation(A(k, j), comm, e),
                             "pure relation III (i,k,m,j)=(" + std::to_string(i) + "," +
                                 std::to_string(k) + "," + std::to_string(m) + "," +
                                 std::to_string(j) + ") e=" + se});
                    }
        // a_im and a_kj commute when the chords are nested or disjoint
        for (int i = 1; i <= n; ++i)
            for (int m = i + 1; m <= n; ++m)
                for (int k = 1; k <= n; ++k)
                    for (int j = k + 1; j <= n; ++j) {
                        if (i == k || i == j || m == k || m == j)
                            continue;
                        const bool nested = k < i && m < j;
                        const bool disjoint = m < k;
                        if (!nested && !disjoint)
                            continue;
                        instances.push_back(
                            {conjugation(A(k, j), A(i, m), -e), A(k, j),
                             "pure relation IV (i,m),(k,j)=(" + std::to_string(i) + "," +
                                 std::to_string(m) + "),(" + std::to_string(k) + "," +
                                 std::to_string(j) + ") e=" + se});
                    }
    }
    SuiteResult result;
    check_instances(result, instances, n, RepSpec::Gassner);
    return result;
}

SuiteResult check_gassner_extension(int n) {
    if (n < 2)
        throw std::invalid_argument("needs n >= 2");
    SuiteResult result;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            const std::string where =
                " for a[" + std::to_string(i) + "," + std::to_string(j) + "]";
            const RepMatrix expected = gassner_matrix(i, j, n);
            const Endomorphism pure = a_pure_endo(i, j, n);
            result.expect(magnus_matrix(pure, RepSpec::Gassner) == expected,
                          "Magnus matrix of the pure automorphism differs" + where);
            for (EpsForm form : {EpsForm::Lower, EpsForm::Upper}) {
                const GenWord w = pure_generator_as_eps(i, j, n, form);
                result.expect(to_endomorphism(w, n) == pure,
                              "McCool word does not compose to the automorphism" + where +
                                  ": " + str(w));
                result.expect(rho_hat_G(w, n) == expected,
                              "Gassner extension disagrees with the closed form" + where +
                                  ": " + str(w));
            }
        }
    return result;
}

SuiteResult check_fundamental_formula(int n, int samples, std::uint64_t seed) {
    if (n < 1)
        throw std::invalid_argument("needs n >= 1");
    std::mt19937_64 rng(seed);
    SuiteResult result;
    for (int s = 0; s < samples; ++s) {
        const GroupRingElem v = random_group_ring_elem(rng, n, 5, 12);
        const auto r = fundamental_formula(v);
        result.expect(r.holds, "fundamental formula fails for " + v.str() + " (lhs " +
                                   r.lhs.str() + ", rhs " + r.rhs.str() + ")");
    }
    return result;
}

SuiteResult check_kernel(int n, int samples, std::uint64_t seed) {
    if (n < 2)
        throw std::invalid_argument("kernel checks need n >= 2");
    SuiteResult result;
    if (n == 2) {
        for (int s = 0; s < samples; ++s) {
            const GenWord w = second_commutator_witness_D1(seed + static_cast<std::uint64_t>(s));
            result.expect(rho_hat_G(w, 2).is_identity(),
                          "witness not in the kernel: " + str(w));
        }
        // the plain commutator of the two generators is not in the kernel
        const GenWord probe =
            group_commutator({GenLetter::eps(1, 2)}, {GenLetter::eps(2, 1)});
        result.expect(!rho_hat_G(probe, 2).is_identity(),
                      "commutator probe unexpectedly maps to the identity");
        return result;
    }
    for (int i = 2; i <= n - 1; ++i)
        for (int s = 0; s < samples; ++s) {
            const GenWord w =
                second_commutator_witness_L(i, n, seed + static_cast<std::uint64_t>(s));
            result.expect(rho_hat_G(w, n).is_identity(),
                          "witness not in the kernel (i=" + std::to_string(i) +
                              "): " + str(w));
        }
    return result;
}

} // namespace foxmag
