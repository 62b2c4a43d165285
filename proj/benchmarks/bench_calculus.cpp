#include <benchmark/benchmark.h>

#include "polycontact/calculus.hpp"
#include "polycontact/nondegeneracy.hpp"
#include "polycontact/polysymplectic.hpp"
#include "polycontact/susy.hpp"

using namespace polycontact;

namespace {

void BM_ExteriorDerivativeAlpha(benchmark::State& state) {
  VectorValuedForm alpha = polycontact_form(susy_chart());
  for (auto _ : state) benchmark::DoNotOptimize(exterior_derivative(alpha));
}
BENCHMARK(BM_ExteriorDerivativeAlpha);

void BM_LieDerivativeQ(benchmark::State& state) {
  const Chart& c = susy_chart();
  VectorValuedForm alpha = polycontact_form(c);
  SusyGenerators g = build_generators(c);
  for (auto _ : state) benchmark::DoNotOptimize(lie_derivative(g.Q[0], alpha));
}
BENCHMARK(BM_LieDerivativeQ);

void BM_CartanLieDerivativeQ(benchmark::State& state) {
  const Chart& c = susy_chart();
  VectorValuedForm alpha = polycontact_form(c);
  SusyGenerators g = build_generators(c);
  for (auto _ : state) benchmark::DoNotOptimize(lie_derivative_cartan(g.Q[0], alpha));
}
BENCHMARK(BM_CartanLieDerivativeQ);

void BM_Commutator(benchmark::State& state) {
  SusyGenerators g = build_generators(susy_chart());
  for (auto _ : state) benchmark::DoNotOptimize(graded_commutator(g.D[0], g.Dbar[1]));
}
BENCHMARK(BM_Commutator);

void BM_TransformSusy(benchmark::State& state) {
  const Chart& c = susy_chart();
  VectorValuedForm alpha = polycontact_form(c);
  SuperMap m = susy_map(c);
  for (auto _ : state) benchmark::DoNotOptimize(transform_vector_valued(m, alpha));
}
BENCHMARK(BM_TransformSusy);

void BM_NondegeneracyOmega(benchmark::State& state) {
  const Chart& m = symplectization_chart();
  VectorValuedForm omega = symplectic_form();
  std::vector<VectorField> frame;
  for (std::size_t s = 0; s < m.dim(); ++s) frame.push_back(VectorField::coordinate(m, s));
  for (auto _ : state) benchmark::DoNotOptimize(nondegeneracy_check(omega, frame));
}
BENCHMARK(BM_NondegeneracyOmega);

}  // namespace

BENCHMARK_MAIN();
