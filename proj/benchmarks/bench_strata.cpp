#include <benchmark/benchmark.h>

#include "epw/lagrangian.hpp"
#include "epw/random.hpp"
#include "epw/strata.hpp"

namespace {

using namespace epw;

std::vector<Subspace> random_planes(std::size_t n) {
  Rng rng(9);
  std::vector<Subspace> out;
  while (out.size() < n) {
    QMatrix m(3, kV6);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < kV6; ++j) m(i, j) = rng.uniform(-10, 10);
    Subspace u = Subspace::span(kV6, m);
    if (u.dim() == 3) out.push_back(std::move(u));
  }
  return out;
}

void BM_CorankExact(benchmark::State& state) {
  const Subspace a = random_lagrangian(1);
  const auto planes = random_planes(64);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(corank(a, planes[i++ % planes.size()]));
}
BENCHMARK(BM_CorankExact);

void BM_CorankEngine(benchmark::State& state) {
  const Subspace a = random_lagrangian(1);
  const CorankEngine engine(a);
  const auto planes = random_planes(64);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(engine(planes[i++ % planes.size()]));
}
BENCHMARK(BM_CorankEngine);

void BM_PhiCofactor(benchmark::State& state) {
  Matrix3 m;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) m(i, j) = static_cast<long>(3 * i + j * j) - 4;
  for (auto _ : state) benchmark::DoNotOptimize(phi_cofactor(m));
}
BENCHMARK(BM_PhiCofactor);

void BM_RestrictionMapK4(benchmark::State& state) {
  const Chart c = Chart::standard();
  const Subspace k = Subspace::span(kWedge3, random_subspace(10, 4, 2).basis() * c.tangent_frame());
  for (auto _ : state) benchmark::DoNotOptimize(restriction_map(k, c));
}
BENCHMARK(BM_RestrictionMapK4)->Unit(benchmark::kMillisecond);

void BM_TangentMapCheckK4(benchmark::State& state) {
  const Chart c = Chart::standard();
  const auto inst = constructed_instance(c, 4, 7);
  for (auto _ : state) benchmark::DoNotOptimize(tangent_map_check(inst->a, c));
}
BENCHMARK(BM_TangentMapCheckK4)->Unit(benchmark::kMillisecond);

void BM_LineDegree(benchmark::State& state) {
  const Subspace a = random_lagrangian(Rng::derive_seed(0, 100));
  const Pencil p = random_pencil(3);
  for (auto _ : state) benchmark::DoNotOptimize(line_degree(a, p, 4));
}
BENCHMARK(BM_LineDegree)->Unit(benchmark::kMillisecond);

}  // namespace
