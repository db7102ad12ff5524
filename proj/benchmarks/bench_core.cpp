#include <benchmark/benchmark.h>

#include "krylovium/krylov.hpp"
#include "krylovium/rng.hpp"

namespace {

using namespace krylovium;

constexpr std::uint64_t kPrime = 4179340454199820289ull;  // 29 * 2^57 + 1

KrylovSpec make_spec(std::size_t n, std::size_t m, std::uint64_t seed) {
    PrimeModulus mod(kPrime);
    CounterRng rng(seed);
    DenseMatrix A = random_matrix(n, n, mod, rng);
    DenseMatrix U = random_matrix(n, m, mod, rng);
    return {std::move(A), std::move(U)};
}

void BM_MatMul(benchmark::State& state) {
    std::size_t n = static_cast<std::size_t>(state.range(0));
    PrimeModulus mod(kPrime);
    CounterRng rng(1);
    DenseMatrix a = random_matrix(n, n, mod, rng), b = random_matrix(n, n, mod, rng);
    for (auto _ : state) {
        DenseMatrix c = a * b;
        benchmark::DoNotOptimize(c);
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_MatMul)->RangeMultiplier(2)->Range(32, 256)->Complexity();

void BM_KernelBasis(benchmark::State& state) {
    std::size_t n = static_cast<std::size_t>(state.range(0));
    KrylovSpec spec = make_spec(n, n / 8, 2);
    for (auto _ : state) {
        DegreeTuple d = max_indices(spec);
        benchmark::DoNotOptimize(d);
    }
}
BENCHMARK(BM_KernelBasis)->RangeMultiplier(2)->Range(16, 128);

void BM_BasisKellerGehrig(benchmark::State& state) {
    std::size_t n = static_cast<std::size_t>(state.range(0));
    KrylovSpec spec = make_spec(n, n / 8, 3);
    AlgoConfig cfg;
    cfg.strategy = Strategy::keller_gehrig;
    for (auto _ : state) {
        KrylovBasisResult r = max_krylov_basis(spec, cfg);
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_BasisKellerGehrig)->RangeMultiplier(2)->Range(16, 128);

void BM_BasisHybrid(benchmark::State& state) {
    std::size_t n = static_cast<std::size_t>(state.range(0));
    KrylovSpec spec = make_spec(n, n / 8, 3);
    for (auto _ : state) {
        KrylovBasisResult r = max_krylov_basis(spec);
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_BasisHybrid)->RangeMultiplier(2)->Range(16, 128);

void BM_BasisPolynomial(benchmark::State& state) {
    std::size_t n = static_cast<std::size_t>(state.range(0));
    KrylovSpec spec = make_spec(n, n / 8, 3);
    AlgoConfig cfg;
    cfg.strategy = Strategy::polmat_only;
    for (auto _ : state) {
        KrylovBasisResult r = max_krylov_basis(spec, cfg);
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_BasisPolynomial)->RangeMultiplier(2)->Range(16, 128);

}  // namespace

BENCHMARK_MAIN();
