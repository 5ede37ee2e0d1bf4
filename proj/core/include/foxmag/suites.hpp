#pragma once

#include <cstdint>
#include <string>

namespace foxmag {

/// Outcome of one relation/identity battery: how many instances ran and the
/// first counterexample if any failed.
struct SuiteResult {
    bool ok = true;
    int checks = 0;
    std::string failure;

    void expect(bool pass, const std::string& what) {
        ++checks;
        if (!pass && ok) {
            ok = false;
            failure = what;
        }
    }
};

/// Braid relations s_i s_{i+1} s_i = s_{i+1} s_i s_{i+1} and the commuting
/// relations, both as automorphisms and as Burau matrices.
SuiteResult check_braid_relations(int n);

/// The four families of pure-braid relations, both as automorphisms and as
/// Gassner matrices.
SuiteResult check_pure_relations(int n);

/// Both McCool-word forms of every a_ij compose to the pure-braid
/// automorphism and evaluate to the closed-form Gassner matrix.
SuiteResult check_gassner_extension(int n);

/// Random group-ring elements satisfy v - (v)^tau = sum_j dv/dx_j (x_j - 1).
SuiteResult check_fundamental_formula(int n, int samples, std::uint64_t seed);

/// Seeded second-commutator witnesses map to the identity matrix under the
/// Gassner extension: the two-generator basis-conjugating group at n = 2
/// (plus a probe that a plain commutator does not), the free subgroups on
/// e[i+1,*] for 2 <= i <= n-1 otherwise.
SuiteResult check_kernel(int n, int samples, std::uint64_t seed);

} // namespace foxmag
