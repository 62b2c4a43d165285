#include <benchmark/benchmark.h>

#include "polycontact/random_objects.hpp"
#include "polycontact/super_poly.hpp"
#include "polycontact/susy.hpp"

using namespace polycontact;

namespace {

std::vector<SuperPoly> sample(int terms, int count) {
  RandomObjects rnd(susy_chart(), 42);
  std::vector<SuperPoly> out;
  for (int k = 0; k < count; ++k) out.push_back(rnd.poly(rnd.parity(), terms, 2, true));
  return out;
}

void BM_Product(benchmark::State& state) {
  auto polys = sample(static_cast<int>(state.range(0)), 64);
  std::size_t k = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(polys[k % 64] * polys[(k + 1) % 64]);
    ++k;
  }
}
BENCHMARK(BM_Product)->Arg(2)->Arg(8)->Arg(32);

void BM_OddDerivative(benchmark::State& state) {
  auto polys = sample(static_cast<int>(state.range(0)), 64);
  const GenIndex th = susy_chart().context()->index("th2");
  std::size_t k = 0;
  for (auto _ : state) benchmark::DoNotOptimize(polys[k++ % 64].derivative(th));
}
BENCHMARK(BM_OddDerivative)->Arg(8)->Arg(32);

void BM_SusySubstitution(benchmark::State& state) {
  const Chart& c = susy_chart();
  SuperMap m = susy_map(c);
  auto polys = sample(static_cast<int>(state.range(0)), 16);
  std::size_t k = 0;
  for (auto _ : state) benchmark::DoNotOptimize(m.substitute_base(polys[k++ % 16]));
}
BENCHMARK(BM_SusySubstitution)->Arg(4)->Arg(16);

}  // namespace

BENCHMARK_MAIN();
