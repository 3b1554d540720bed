#include <benchmark/benchmark.h>

#include "epw/double_cover.hpp"
#include "epw/lattice.hpp"

namespace {

using namespace epw;

void BM_SmithHPerp(benchmark::State& state) {
  const IntegralLattice h = build_h_perp();
  for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(h.gram()));
}
BENCHMARK(BM_SmithHPerp)->Unit(benchmark::kMillisecond);

void BM_OrthComplementGamma(benchmark::State& state) {
  const IntegralLattice h = build_h_perp();
  const LatticeVector beta = gamma_beta(h);
  for (auto _ : state) benchmark::DoNotOptimize(orth_complement(beta, h));
}
BENCHMARK(BM_OrthComplementGamma)->Unit(benchmark::kMillisecond);

void BM_HeegnerClassify(benchmark::State& state) {
  const long e = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(heegner_classify(e));
}
BENCHMARK(BM_HeegnerClassify)->Arg(6)->Arg(40)->Unit(benchmark::kMillisecond);

void BM_NoK3(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(no_k3_certificate(state.range(0)));
}
BENCHMARK(BM_NoK3)->Arg(10)->Arg(50)->Unit(benchmark::kMillisecond);

void BM_CoordRing(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(verify_coord_ring(3, 3));
}
BENCHMARK(BM_CoordRing)->Unit(benchmark::kMillisecond);

}  // namespace
