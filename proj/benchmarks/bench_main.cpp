// SPDX-License-Identifier: Apache-2.0
#include <benchmark/benchmark.h>

#include "adelic/certifier.hpp"
#include "adelic/equilibrium.hpp"
#include "adelic/fekete.hpp"
#include "adelic/filtration.hpp"
#include "adelic/padic.hpp"

using namespace adelic;

static void BM_NewtonPolygonLog1p(benchmark::State &state) {
    auto phi = PowerSeriesTrunc::from_identity(SeriesIdentity::log1p(), static_cast<std::size_t>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(newton_polygon(phi, 3));
}
BENCHMARK(BM_NewtonPolygonLog1p)->Arg(100)->Arg(200)->Arg(400);

static void BM_SizeOfGraph(benchmark::State &state) {
    auto phi = PowerSeriesTrunc::from_identity(SeriesIdentity::log1p(), 200);
    for (auto _ : state)
        benchmark::DoNotOptimize(size_of_graph(phi, 7));
}
BENCHMARK(BM_SizeOfGraph);

// path of n components, T = all but the first
static void BM_EquilibriumChain(benchmark::State &state) {
    std::size_t n = static_cast<std::size_t>(state.range(0));
    IntersectionGraph g;
    g.Q.assign(n, std::vector<Rational>(n, Rational(0)));
    for (std::size_t s = 0; s < n; ++s) {
        g.names.push_back("s" + std::to_string(s));
        g.multiplicities.push_back(Integer(1));
        if (s + 1 < n)
            g.Q[s][s + 1] = g.Q[s + 1][s] = 1;
    }
    for (std::size_t s = 0; s < n; ++s)
        g.Q[s][s] = (s == 0 || s + 1 == n) ? -1 : -2;
    std::vector<std::size_t> T;
    for (std::size_t s = 1; s < n; ++s)
        T.push_back(s);
    HorizontalIncidence inc{std::vector<Rational>(n, Rational(0))};
    inc.d[n - 1] = 1;
    for (auto _ : state)
        benchmark::DoNotOptimize(solve_equilibrium(g, inc, T));
}
BENCHMARK(BM_EquilibriumChain)->Arg(4)->Arg(8)->Arg(12)->Arg(32);

static void BM_FeketeSegment(benchmark::State &state) {
    auto seg = polyline_curve({Complex(-2, 0), Complex(2, 0)});
    for (auto _ : state)
        benchmark::DoNotOptimize(fekete_points(seg, static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_FeketeSegment)->Arg(16)->Arg(32)->Arg(64);

static void BM_FiltrationExpm1(benchmark::State &state) {
    std::size_t D = static_cast<std::size_t>(state.range(0));
    auto phi = PowerSeriesTrunc::from_identity(SeriesIdentity::expm1(), (D + 1) * (D + 1) + 1);
    for (auto _ : state)
        benchmark::DoNotOptimize(vanishing_filtration(phi, D, (D + 1) * (D + 1) - 1));
}
BENCHMARK(BM_FiltrationExpm1)->DenseRange(2, 6, 2);

static void BM_JetNormsLog1p(benchmark::State &state) {
    auto phi = PowerSeriesTrunc::from_identity(SeriesIdentity::log1p(), 42);
    for (auto _ : state)
        benchmark::DoNotOptimize(jet_norms_padic(phi, static_cast<std::size_t>(state.range(0)), 40, 2));
}
BENCHMARK(BM_JetNormsLog1p)->Arg(2)->Arg(6);

static void BM_HankelCentralBinomial(benchmark::State &state) {
    auto phi = PowerSeriesTrunc::from_identity(SeriesIdentity::central_binomial(), 40);
    for (auto _ : state)
        benchmark::DoNotOptimize(hankel_rationality_oracle(phi, static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_HankelCentralBinomial)->Arg(4)->Arg(8);

BENCHMARK_MAIN();
