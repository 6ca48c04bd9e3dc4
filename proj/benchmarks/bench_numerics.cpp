#include <random>

#include <benchmark/benchmark.h>

#include "pcli/bounds.hpp"
#include "pcli/eigen.hpp"
#include "pcli/roots.hpp"
#include "pcli/schemes.hpp"

namespace {

void BM_PolyRoots(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::vector<double> c(n + 1);
    for (auto& v : c) v = u(rng);
    c[n] = 1.0;
    const pcli::Polynomial p(c);
    for (auto _ : state) benchmark::DoNotOptimize(pcli::poly_roots(p));
}
BENCHMARK(BM_PolyRoots)->Arg(2)->Arg(4)->Arg(8)->Arg(16)->Arg(64);

void BM_DenseSpectrum(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    std::mt19937_64 rng(2);
    std::normal_distribution<double> g;
    pcli::DenseMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = g(rng);
    for (auto _ : state) benchmark::DoNotOptimize(pcli::dense_spectrum(m));
}
BENCHMARK(BM_DenseSpectrum)->Arg(8)->Arg(32)->Arg(128);

void BM_SymmetricEigen(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    std::mt19937_64 rng(3);
    std::normal_distribution<double> g;
    pcli::DenseMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j <= i; ++j) m(i, j) = m(j, i) = g(rng);
    for (auto _ : state) benchmark::DoNotOptimize(pcli::symmetric_eigen(m));
}
BENCHMARK(BM_SymmetricEigen)->Arg(8)->Arg(32)->Arg(128);

void BM_MaxRhoOverInterval(benchmark::State& state) {
    const int p = static_cast<int>(state.range(0));
    const auto r = pcli::synth_linear(p, pcli::nu_optimal(p, 1.0, 100.0), 1.0, 100.0);
    for (auto _ : state) benchmark::DoNotOptimize(pcli::max_rho_over_interval(r.a_poly, r.b_poly, p, 1.0, 100.0));
}
BENCHMARK(BM_MaxRhoOverInterval)->Arg(2)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_ConjectureProbe(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(pcli::conjecture_probe(3, 1.0, 100.0, 50, 42, 1));
}
BENCHMARK(BM_ConjectureProbe)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
