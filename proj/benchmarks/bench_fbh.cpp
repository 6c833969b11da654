#include <benchmark/benchmark.h>

#include <random>

#include "fbh/parse.hpp"
#include "fbh/tower.hpp"
#include "fbh/witt.hpp"

using namespace fbh;

static void BM_LaurentMul(benchmark::State& state) {
  auto F = Field::make(5);
  LaurentPoly f = parse_poly("x0^4+x1^4+x2^4+x3^4+x0*x1*x2*x3", F);
  LaurentPoly g = f;
  for (int k = 1; k < state.range(0); ++k) g = g * f;
  for (auto _ : state) benchmark::DoNotOptimize(g * f);
  state.SetLabel(std::to_string(g.size()) + " terms");
}
BENCHMARK(BM_LaurentMul)->Arg(1)->Arg(2)->Arg(4);

static void BM_WittAdd(benchmark::State& state) {
  auto F = Field::make(3, 2);
  std::mt19937_64 rng(7);
  const auto n = std::size_t(state.range(0));
  std::vector<FieldElement> x, y;
  for (std::size_t k = 0; k < n; ++k) {
    x.emplace_back(F, std::uint32_t(rng() % F->order()));
    y.emplace_back(F, std::uint32_t(rng() % F->order()));
  }
  WittVector<FieldElement> a(3, x), b(3, y);
  for (auto _ : state) benchmark::DoNotOptimize(witt_add(a, b));
}
BENCHMARK(BM_WittAdd)->Arg(2)->Arg(4)->Arg(6);

static void BM_TowerLevels(benchmark::State& state) {
  auto F = Field::make(3);
  CechComplex C(Hypersurface::make(parse_poly("x0^4+x1^4+x2^4+x3^4", F)));
  TowerOptions opts;
  opts.i_max = unsigned(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(phi_tower(C, opts));
}
BENCHMARK(BM_TowerLevels)->Arg(1)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
