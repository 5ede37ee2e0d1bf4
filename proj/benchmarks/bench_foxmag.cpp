#include "foxmag/fox.hpp"
#include "foxmag/magnus.hpp"
#include "foxmag/random_words.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace foxmag;

namespace {

void BM_FreeReduction(benchmark::State& state) {
    std::mt19937_64 rng(1);
    std::vector<int> raw;
    for (int i = 0; i < state.range(0); ++i) {
        const int idx = 1 + static_cast<int>(rng() % 4);
        raw.push_back(rng() % 2 == 0 ? idx : -idx);
    }
    for (auto _ : state) {
        auto w = FreeWord::reduce(4, raw);
        benchmark::DoNotOptimize(w);
    }
}
BENCHMARK(BM_FreeReduction)->Arg(64)->Arg(1024)->Arg(16384);

void BM_FoxDerivative(benchmark::State& state) {
    std::mt19937_64 rng(2);
    const FreeWord w = random_reduced_word(rng, 4, static_cast<int>(state.range(0)));
    for (auto _ : state) {
        auto d = fox_derivative(w, 1);
        benchmark::DoNotOptimize(d);
    }
}
BENCHMARK(BM_FoxDerivative)->Arg(16)->Arg(64)->Arg(256);

void BM_AbelianizedDerivative(benchmark::State& state) {
    std::mt19937_64 rng(3);
    const FreeWord w = random_reduced_word(rng, 4, static_cast<int>(state.range(0)));
    for (auto _ : state) {
        auto p = abelianized_fox_derivative(w, 1, RepSpec::Gassner);
        benchmark::DoNotOptimize(p);
    }
}
BENCHMARK(BM_AbelianizedDerivative)->Arg(64)->Arg(1024)->Arg(16384);

void BM_GassnerWordMatrix(benchmark::State& state) {
    std::mt19937_64 rng(4);
    const GenWord word = random_eps_word(rng, 4, static_cast<int>(state.range(0)));
    for (auto _ : state) {
        auto m = rho_hat_G(word, 4);
        benchmark::DoNotOptimize(m);
    }
}
BENCHMARK(BM_GassnerWordMatrix)->Arg(8)->Arg(16)->Arg(32);

void BM_Alexander(benchmark::State& state) {
    // (s1 s2)^q closes to the (3, q) torus knot when gcd(q, 3) = 1
    std::vector<int> letters;
    for (int i = 0; i < state.range(0); ++i) {
        letters.push_back(1);
        letters.push_back(2);
    }
    const BraidWord b(3, letters);
    for (auto _ : state) {
        auto p = alexander_polynomial(b);
        benchmark::DoNotOptimize(p);
    }
}
BENCHMARK(BM_Alexander)->Arg(4)->Arg(16)->Arg(64);

void BM_KernelWitness(benchmark::State& state) {
    std::uint64_t seed = 0;
    for (auto _ : state) {
        auto w = second_commutator_witness_D1(seed++);
        auto m = rho_hat_G(w, 2);
        benchmark::DoNotOptimize(m);
    }
}
BENCHMARK(BM_KernelWitness);

} // namespace

BENCHMARK_MAIN();
