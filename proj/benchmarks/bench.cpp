#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include <benchmark/benchmark.h>

#include "degseq/beta_model.hpp"
#include "degseq/degree_function.hpp"
#include "degseq/degree_sequence.hpp"
#include "degseq/graphon.hpp"
#include "degseq/mle.hpp"

using namespace degseq;

namespace {

std::vector<int> random_graphical(int n, std::uint64_t seed) {
    const SimpleGraph g = sample_graph(BetaVector(std::vector<double>(n, 0.0)), seed);
    auto d = g.degrees();
    std::sort(d.begin(), d.end(), std::greater<int>());
    return d;
}

void bm_erdos_gallai(benchmark::State& state) {
    const DegreeSequence d(random_graphical(static_cast<int>(state.range(0)), 1));
    for (auto _ : state)
        benchmark::DoNotOptimize(erdos_gallai_check(d));
}
BENCHMARK(bm_erdos_gallai)->Arg(100)->Arg(1000)->Arg(10000);

void bm_phi_step(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    std::mt19937_64 gen(2);
    std::uniform_real_distribution<double> xd(-1, 1), dd(1.0, n - 2.0);
    std::vector<double> x(n), d(n);
    for (int i = 0; i < n; ++i) {
        x[i] = xd(gen);
        d[i] = dd(gen);
    }
    for (auto _ : state)
        benchmark::DoNotOptimize(phi(x, d));
}
BENCHMARK(bm_phi_step)->Arg(100)->Arg(300)->Arg(1000);

void bm_fit_mle(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    std::mt19937_64 gen(3);
    std::uniform_real_distribution<double> bd(-1, 1);
    std::vector<double> beta(n);
    for (double& b : beta)
        b = bd(gen);
    const auto d = expected_degrees(BetaVector(beta));
    for (auto _ : state)
        benchmark::DoNotOptimize(fit_mle(d));
}
BENCHMARK(bm_fit_mle)->Arg(100)->Arg(300);

void bm_sample_graph(benchmark::State& state) {
    const BetaVector beta(std::vector<double>(static_cast<int>(state.range(0)), 0.0));
    std::uint64_t seed = 0;
    for (auto _ : state)
        benchmark::DoNotOptimize(sample_graph(beta, ++seed));
}
BENCHMARK(bm_sample_graph)->Arg(100)->Arg(500);

void bm_hom_density_graphon_triangle(benchmark::State& state) {
    const int M = static_cast<int>(state.range(0));
    const DegreeFunction f(0.5, std::vector<double>(M, 0.5));
    const auto fit = fit_graphon(f, M);
    for (auto _ : state)
        benchmark::DoNotOptimize(hom_density_graphon(MotifGraph::triangle(), fit));
}
BENCHMARK(bm_hom_density_graphon_triangle)->Arg(64)->Arg(256);

void bm_hom_density_graph_triangle(benchmark::State& state) {
    const SimpleGraph g =
        sample_graph(BetaVector(std::vector<double>(static_cast<int>(state.range(0)), 0.0)), 9);
    for (auto _ : state)
        benchmark::DoNotOptimize(hom_density_graph(MotifGraph::triangle(), g));
}
BENCHMARK(bm_hom_density_graph_triangle)->Arg(50)->Arg(100);

} // namespace

BENCHMARK_MAIN();
