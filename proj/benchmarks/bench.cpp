#include <benchmark/benchmark.h>

#include <random>

#include "magtop/causal.hpp"
#include "magtop/chain_complex.hpp"
#include "magtop/homology.hpp"
#include "magtop/random_space.hpp"
#include "magtop/series.hpp"
#include "magtop/smith.hpp"

using namespace magtop;

namespace {

MetricSpace complete_graph(std::size_t n) {
    std::vector<std::string> v;
    std::vector<WeightedEdge> e;
    for (std::size_t i = 0; i < n; ++i) v.push_back("v" + std::to_string(i));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) e.push_back({v[i], v[j], Rational(1)});
    }
    return MetricSpace::from_weighted_graph(v, e);
}

MetricSpace cycle(std::size_t n) {
    std::vector<std::string> v;
    std::vector<WeightedEdge> e;
    for (std::size_t i = 0; i < n; ++i) v.push_back("v" + std::to_string(i));
    for (std::size_t i = 0; i < n; ++i) e.push_back({v[i], v[(i + 1) % n], Rational(1)});
    return MetricSpace::from_weighted_graph(v, e);
}

}  // namespace

static void BM_Enumerate(benchmark::State& state) {
    const MetricSpace X = complete_graph(5);
    const Rational l(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(lightlike_sequences(X, 0, 1, l));
}
BENCHMARK(BM_Enumerate)->DenseRange(2, 5);

static void BM_SmithDense(benchmark::State& state) {
    std::mt19937_64 rng(1);
    std::uniform_int_distribution<int> entry(-3, 3);
    const auto n = static_cast<std::size_t>(state.range(0));
    std::vector<std::vector<std::int64_t>> m(n, std::vector<std::int64_t>(n));
    for (auto& row : m) {
        for (auto& x : row) x = entry(rng);
    }
    const IntMatrix A = IntMatrix::from_dense(m);
    for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(A));
}
BENCHMARK(BM_SmithDense)->RangeMultiplier(2)->Range(8, 64);

static void BM_MagnitudeHomologyCycle(benchmark::State& state) {
    const MetricSpace X = cycle(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(total_magnitude_homology(X, Rational(3)));
}
BENCHMARK(BM_MagnitudeHomologyCycle)->DenseRange(5, 8);

static void BM_ZInverse(benchmark::State& state) {
    std::mt19937_64 rng(3);
    const MetricSpace X = random_rational_space(static_cast<std::size_t>(state.range(0)), rng);
    for (auto _ : state) benchmark::DoNotOptimize(z_inverse(X, Rational(3)));
}
BENCHMARK(BM_ZInverse)->DenseRange(4, 7);

static void BM_Perturbative(benchmark::State& state) {
    std::mt19937_64 rng(3);
    const MetricSpace X = random_rational_space(static_cast<std::size_t>(state.range(0)), rng);
    for (auto _ : state) benchmark::DoNotOptimize(perturbative_inverse(X, 0, 1, Rational(3)));
}
BENCHMARK(BM_Perturbative)->DenseRange(4, 6);
BENCHMARK_MAIN();
