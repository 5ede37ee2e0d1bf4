// foxmag: Fox calculus, Burau/Gassner matrices and their extensions to
// conjugating automorphisms, relation checkers, Alexander polynomials.

#include "foxmag/errors.hpp"
#include "foxmag/fox.hpp"
#include "foxmag/magnus.hpp"
#include "foxmag/parse.hpp"
#include "foxmag/suites.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <iostream>
#include <map>
#include <string>
#include <vector>

namespace {

using foxmag::RepSpec;

constexpr int kExitSuiteFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitPrecondition = 3;
constexpr int kExitDomain = 4;

RepSpec parse_spec(const std::string& s) {
    if (s == "gassner")
        return RepSpec::Gassner;
    if (s == "burau")
        return RepSpec::Burau;
    throw foxmag::ParseError("unknown representation '" + s + "'");
}

nlohmann::ordered_json poly_terms_json(const foxmag::LaurentPoly& p) {
    nlohmann::ordered_json terms = nlohmann::ordered_json::array();
    for (const auto& [coeff, exps] : p.structured())
        terms.push_back({coeff.get_str(), exps});
    return terms;
}

int run_derive(const std::string& word, int by, const std::string& phi, int strands) {
    int rank = strands;
    if (rank == 0)
        rank = std::max({foxmag::max_free_word_index(word), by, 1});
    if (by < 1 || by > rank)
        throw foxmag::ParseError("--by index " + std::to_string(by) +
                                 " out of range for rank " + std::to_string(rank));
    const foxmag::FreeWord w = foxmag::parse_free_word(word, rank);
    const foxmag::GroupRingElem d =
        foxmag::fox_derivative(foxmag::GroupRingElem::from_word(w), by);
    if (phi == "none")
        std::cout << d.str() << "\n";
    else
        std::cout << foxmag::abelianize(d, parse_spec(phi)).str() << "\n";
    return 0;
}

int run_matrix(const std::string& gens, const std::string& rep, int strands, bool as_json) {
    const RepSpec spec = parse_spec(rep);
    const foxmag::GenWord w = foxmag::parse_gen_word(gens, strands);
    const foxmag::RepMatrix m = foxmag::rep_of_gen_word(w, strands, spec);
    if (!as_json) {
        std::cout << m.grid();
        return 0;
    }
    nlohmann::ordered_json out;
    out["dim"] = m.dim();
    out["spec"] = foxmag::to_string(m.spec());
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (int i = 1; i <= m.dim(); ++i) {
        nlohmann::ordered_json row = nlohmann::ordered_json::array();
        for (int j = 1; j <= m.dim(); ++j)
            row.push_back(poly_terms_json(m.at(i, j)));
        rows.push_back(row);
    }
    out["rows"] = rows;
    std::cout << out.dump(2) << "\n";
    return 0;
}

int run_alexander(const std::string& braid, int strands) {
    const foxmag::BraidWord b = foxmag::parse_braid_word(braid, strands);
    std::cout << foxmag::alexander_polynomial(b).str() << "\n";
    return 0;
}

struct SuitePlan {
    int lowest_n;
    int default_high;
    int default_samples; // 0 = unused
};

int run_check(const std::string& suite, int strands, std::uint64_t seed, int samples) {
    static const std::map<std::string, SuitePlan> plans = {
        {"braid-relations", {2, 5, 0}}, {"pure-relations", {3, 5, 0}},
        {"theorem1", {2, 5, 0}},        {"fundamental", {2, 4, 200}},
        {"kernel", {2, 4, 20}},
    };
    const auto plan_it = plans.find(suite);
    if (plan_it == plans.end())
        throw foxmag::ParseError("unknown suite '" + suite + "'");
    const SuitePlan& plan = plan_it->second;

    std::vector<int> sizes;
    if (strands != 0) {
        if (strands < plan.lowest_n || strands > 6)
            throw foxmag::ParseError("--strands out of range for suite '" + suite + "' (" +
                                     std::to_string(plan.lowest_n) + "..6)");
        sizes.push_back(strands);
    } else {
        for (int n = plan.lowest_n; n <= plan.default_high; ++n)
            sizes.push_back(n);
    }
    if (samples == 0)
        samples = plan.default_samples;

    bool all_ok = true;
    std::string first_failure;
    for (int n : sizes) {
        foxmag::SuiteResult r;
        if (suite == "braid-relations")
            r = foxmag::check_braid_relations(n);
        else if (suite == "pure-relations")
            r = foxmag::check_pure_relations(n);
        else if (suite == "theorem1")
            r = foxmag::check_gassner_extension(n);
        else if (suite == "fundamental")
            r = foxmag::check_fundamental_formula(n, samples, seed);
        else
            r = foxmag::check_kernel(n, samples, seed);
        std::cout << suite << " n=" << n << ": " << r.checks << " checks "
                  << (r.ok ? "ok" : "FAILED") << "\n";
        if (!r.ok && all_ok) {
            all_ok = false;
            first_failure = r.failure;
        }
    }
    if (!all_ok) {
        std::cout << "FAIL: " << first_failure << "\n";
        return kExitSuiteFailure;
    }
    std::cout << "PASS\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Fox calculus and Magnus representations of braid-like automorphism groups"};
    app.require_subcommand(1);

    std::string word, phi = "none", gens, rep, braid, suite;
    int by = 0, strands = 0, samples = 0;
    std::uint64_t seed = 8902467143ULL;
    bool as_json = false;

    CLI::App* derive = app.add_subcommand("derive", "Fox derivative of a free word");
    derive->add_option("--word", word, "free word, e.g. \"x1 x2^-1\"")->required();
    derive->add_option("--by", by, "generator index to differentiate by")->required();
    derive->add_option("--phi", phi, "abelianization: gassner, burau or none")
        ->check(CLI::IsMember({"gassner", "burau", "none"}));
    derive->add_option("--strands", strands, "rank of the ambient free group");

    CLI::App* matrix = app.add_subcommand("matrix", "representation matrix of a generator word");
    matrix->add_option("--gens", gens, "generator word, e.g. \"e[1,2]^-1 s1\"")->required();
    matrix->add_option("--rep", rep, "gassner or burau")->required();
    matrix->add_option("--strands", strands, "number of strands / rank")->required();
    matrix->add_flag("--json", as_json, "structured output");

    CLI::App* check = app.add_subcommand("check", "run an identity suite");
    check->add_option("--suite", suite,
                      "braid-relations, pure-relations, theorem1, fundamental or kernel")
        ->required();
    check->add_option("--strands", strands, "run one size only (default: a small range)");
    check->add_option("--seed", seed, "seed for randomized suites");
    check->add_option("--samples", samples, "sample count for randomized suites");

    CLI::App* alexander = app.add_subcommand("alexander", "Alexander polynomial of a braid closure");
    alexander->add_option("--braid", braid, "braid word, e.g. \"s1 s1 s1\"")->required();
    alexander->add_option("--strands", strands, "number of strands")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (derive->parsed())
            return run_derive(word, by, phi, strands);
        if (matrix->parsed())
            return run_matrix(gens, rep, strands, as_json);
        if (check->parsed())
            return run_check(suite, strands, seed, samples);
        return run_alexander(braid, strands);
    } catch (const foxmag::PhiIncompatibleError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const foxmag::NotConjugatingError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const foxmag::ClosureNotKnotError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const foxmag::ExactDivisionError& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const foxmag::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
