#include <benchmark/benchmark.h>

#include <random>

#include "bary/canonical.hpp"
#include "bary/derived.hpp"
#include "bary/graphs.hpp"
#include "bary/orientation.hpp"
#include "bary/reconstruct.hpp"
#include "bary/verify.hpp"

namespace {

bary::SimplicialComplex cycle(int n) {
  std::vector<bary::VertexSet> facets;
  for (int i = 1; i <= n; ++i) facets.push_back(bary::VertexSet{i, i % n + 1});
  return bary::SimplicialComplex::from_facets(n, facets);
}

void BM_CanonicalFormSkeleton(benchmark::State& state) {
  const auto c = bary::skeleton(bary::SimplicialComplex::simplex(static_cast<int>(state.range(0))), 1);
  for (auto _ : state) benchmark::DoNotOptimize(bary::canonical_form(c));
}
BENCHMARK(BM_CanonicalFormSkeleton)->Arg(8)->Arg(16)->Arg(32);

void BM_CanonicalFormCycle(benchmark::State& state) {
  const auto c = cycle(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(bary::canonical_form(c));
}
BENCHMARK(BM_CanonicalFormCycle)->Arg(16)->Arg(64);

void BM_Subdivision(benchmark::State& state) {
  const auto c = bary::SimplicialComplex::simplex(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(bary::barycentric_subdivision(c));
}
BENCHMARK(BM_Subdivision)->Arg(3)->Arg(5)->Arg(6);

void BM_MinimalNonfaces(benchmark::State& state) {
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<std::uint64_t> bits(1, (std::uint64_t{1} << 20) - 1);
  std::vector<bary::VertexSet> facets;
  for (int i = 0; i < state.range(0); ++i) facets.push_back(bary::VertexSet::from_bits(bits(rng)));
  const auto c = bary::SimplicialComplex::from_facets(20, facets);
  for (auto _ : state) benchmark::DoNotOptimize(bary::minimal_nonfaces(c));
}
BENCHMARK(BM_MinimalNonfaces)->Arg(4)->Arg(16);

void BM_TransitiveOrientations(benchmark::State& state) {
  const auto g = bary::comparability_graph(bary::skeleton(bary::SimplicialComplex::simplex(5), 2));
  for (auto _ : state) benchmark::DoNotOptimize(bary::transitive_orientations(g));
}
BENCHMARK(BM_TransitiveOrientations);

void BM_Reconstruct(benchmark::State& state) {
  const auto g = bary::comparability_graph(cycle(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(bary::reconstruct_from_comparability_graph(g));
}
BENCHMARK(BM_Reconstruct)->Arg(8)->Arg(20);

void BM_Enumerate(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(bary::enumerate_complexes(static_cast<int>(state.range(0)), true));
}
BENCHMARK(BM_Enumerate)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
