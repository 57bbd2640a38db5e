#include <benchmark/benchmark.h>

#include "mantra/complex.hpp"
#include "mantra/homology.hpp"
#include "mantra/manifold.hpp"
#include "mantra/operators.hpp"
#include "mantra/subdivision.hpp"

namespace {

using mantra::SimplicialComplex;

/// 7-vertex torus, the smallest vertex-minimal triangulation of T^2.
SimplicialComplex torus7() {
    std::vector<std::vector<int>> facets;
    for (int i = 0; i < 7; ++i) {
        facets.push_back({i % 7 + 1, (i + 1) % 7 + 1, (i + 3) % 7 + 1});
        facets.push_back({i % 7 + 1, (i + 2) % 7 + 1, (i + 3) % 7 + 1});
    }
    return SimplicialComplex::from_facets(facets);
}

SimplicialComplex subdivided(SimplicialComplex K, int times) {
    for (int i = 0; i < times; ++i)
        K = mantra::barycentric_subdivision(K).first;
    return K;
}

void BM_FromFacets(benchmark::State& state) {
    auto facets = subdivided(torus7(), static_cast<int>(state.range(0)));
    std::vector<std::vector<int>> raw;
    for (const auto& f : facets.facets()) raw.push_back(f.vertices);
    for (auto _ : state)
        benchmark::DoNotOptimize(SimplicialComplex::from_facets(raw));
}
BENCHMARK(BM_FromFacets)->Arg(0)->Arg(1);

void BM_SmithNormalForm(benchmark::State& state) {
    auto K = subdivided(torus7(), static_cast<int>(state.range(0)));
    auto M = mantra::boundary_matrix(K, 2);
    for (auto _ : state)
        benchmark::DoNotOptimize(mantra::smith_normal_form(M));
}
BENCHMARK(BM_SmithNormalForm)->Arg(0)->Arg(1);

void BM_HomologyProfile(benchmark::State& state) {
    auto K = subdivided(torus7(), static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(mantra::homology_profile(K));
}
BENCHMARK(BM_HomologyProfile)->Arg(0)->Arg(1);

void BM_ManifoldCheck(benchmark::State& state) {
    auto K = subdivided(torus7(), static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(mantra::is_combinatorial_manifold(K));
}
BENCHMARK(BM_ManifoldCheck)->Arg(0)->Arg(1)->Arg(2);

void BM_BarycentricSubdivision(benchmark::State& state) {
    auto K = subdivided(torus7(), static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(mantra::barycentric_subdivision(K));
}
BENCHMARK(BM_BarycentricSubdivision)->Arg(0)->Arg(1);

void BM_HodgeLaplacian(benchmark::State& state) {
    auto K = subdivided(torus7(), static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(mantra::hodge_laplacian(K, 1));
}
BENCHMARK(BM_HodgeLaplacian)->Arg(0)->Arg(1);

}  // namespace

BENCHMARK_MAIN();
