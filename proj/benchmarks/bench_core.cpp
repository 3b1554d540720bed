#include <benchmark/benchmark.h>

#include "epw/certificate.hpp"
#include "epw/exterior.hpp"
#include "epw/lagrangian.hpp"
#include "epw/random.hpp"

namespace {

using namespace epw;

void BM_TangentLagrangian(benchmark::State& state) {
  Rng rng(1);
  QMatrix u(3, kV6);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < kV6; ++j) u(i, j) = rng.uniform(-10, 10);
  const Subspace s = Subspace::span(kV6, u);
  for (auto _ : state) benchmark::DoNotOptimize(tangent_lagrangian(s));
}
BENCHMARK(BM_TangentLagrangian);

void BM_IsLagrangian(benchmark::State& state) {
  const Subspace a = random_lagrangian(3);
  for (auto _ : state) benchmark::DoNotOptimize(is_lagrangian(a));
}
BENCHMARK(BM_IsLagrangian);

void BM_RandomLagrangian(benchmark::State& state) {
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(random_lagrangian(seed++));
}
BENCHMARK(BM_RandomLagrangian);

// Certificate for a random 4-dimensional subspace of the tangent space.
void BM_CertificateTangentK(benchmark::State& state) {
  const Chart c = Chart::standard();
  const Subspace k = Subspace::span(kWedge3, random_subspace(10, 4, 5).basis() * c.tangent_frame());
  for (auto _ : state) benchmark::DoNotOptimize(decomposable_free_certificate(k, 6));
}
BENCHMARK(BM_CertificateTangentK)->Unit(benchmark::kMillisecond);

// Full 10-dimensional certificate: one Macaulay rank computation per degree.
void BM_CertificateLagrangian(benchmark::State& state) {
  const Subspace a = random_lagrangian(Rng::derive_seed(0, 100));
  for (auto _ : state) benchmark::DoNotOptimize(decomposable_free_certificate(a, 6));
}
BENCHMARK(BM_CertificateLagrangian)->Unit(benchmark::kSecond)->Iterations(1);

}  // namespace

BENCHMARK_MAIN();
