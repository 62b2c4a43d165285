#include <benchmark/benchmark.h>

#include "polycontact/catalogue.hpp"
#include "polycontact/cli/evaluator.hpp"

using namespace polycontact;

namespace {

void BM_Check(benchmark::State& state, const std::string& id) {
  const CatalogueEntry* e = find_check(id);
  CheckOptions opts;
  for (auto _ : state) benchmark::DoNotOptimize(run_check(*e, opts));
}
BENCHMARK_CAPTURE(BM_Check, kernel, std::string("kernel-theorem"))->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Check, reeb, std::string("reeb"))->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Check, algebra_table, std::string("algebra-table"))->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Check, maurer_cartan, std::string("maurer-cartan"))->Unit(benchmark::kMillisecond);

void BM_KernelByDegree(benchmark::State& state) {
  CheckOptions opts;
  opts.kernel_xdeg = static_cast<int>(state.range(0));
  const CatalogueEntry* e = find_check("kernel-theorem");
  for (auto _ : state) benchmark::DoNotOptimize(run_check(*e, opts));
}
BENCHMARK(BM_KernelByDegree)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

void BM_ParseEvaluate(benchmark::State& state) {
  const auto& ws = cli::Workspace::shared();
  const std::string text = "L_(Q1, alpha) + i_(D1, dalpha) - 0*[R, Qb2] + d(exp(l)*alpha)";
  for (auto _ : state) benchmark::DoNotOptimize(cli::evaluate(text, ws));
}
BENCHMARK(BM_ParseEvaluate)->Unit(benchmark::kMicrosecond);

void BM_RenderOmega(benchmark::State& state) {
  const auto& ws = cli::Workspace::shared();
  const cli::Value& omega = ws.named("omega");
  for (auto _ : state) benchmark::DoNotOptimize(cli::render(omega));
}
BENCHMARK(BM_RenderOmega)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
