#include <benchmark/benchmark.h>

#include "shc/charstack/enumerate.hpp"
#include "shc/cobcat/parser.hpp"
#include "shc/lagstruct/presets.hpp"

using namespace shc;

namespace {

const chars::FiniteGroup& group(int which) {
  static const chars::FiniteGroup sl23 = chars::FiniteGroup::special_linear_2(3);
  static const chars::FiniteGroup a5 = chars::FiniteGroup::alternating(5);
  static const chars::FiniteGroup sl25 = chars::FiniteGroup::special_linear_2(5);
  return which == 0 ? sl23 : which == 1 ? a5 : sl25;
}

cob::ComponentPresentation presentation(int which) {
  const char* exprs[] = {"genus(1; 0, 0)", "genus(1; 1, 1)", "genus(1; 1, 0)"};
  return cob::to_cospan(cob::parse(exprs[which])).components.at(0);
}

// Arguments: group (SL2(F3), A5, SL2(F5)), surface (torus, genus(1;1,1), one-holed torus).
void args(benchmark::internal::Benchmark* b) {
  b->Args({0, 1})->Args({1, 0})->Args({1, 1})->Args({2, 0});
}

void BM_EnumerateSerial(benchmark::State& state) {
  const auto& g = group(static_cast<int>(state.range(0)));
  auto p = presentation(static_cast<int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(chars::enumerate_reps_serial(g, p, 1ull << 32).count);
  state.SetLabel(g.name());
}
BENCHMARK(BM_EnumerateSerial)->Apply(args)->Unit(benchmark::kMillisecond);

void BM_EnumerateParallel(benchmark::State& state) {
  const auto& g = group(static_cast<int>(state.range(0)));
  auto p = presentation(static_cast<int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(chars::enumerate_reps(g, p, 1ull << 32).count);
  state.SetLabel(g.name());
}
BENCHMARK(BM_EnumerateParallel)->Apply(args)->Unit(benchmark::kMillisecond);

void quasi_check(benchmark::State& state, Execution e) {
  GroupPtr g = MatrixGroup::special_linear(2);
  QuasiHamiltonianSpace d = double_preset(g, g->trace_pairing());
  LagrangianCheckOptions o;
  o.base.samples = static_cast<std::size_t>(state.range(0));
  o.base.execution = e;
  for (auto _ : state) benchmark::DoNotOptimize(check_quasi_hamiltonian(d, o).passed());
}

void BM_QuasiHamiltonianSerial(benchmark::State& state) { quasi_check(state, Execution::Serial); }
void BM_QuasiHamiltonianParallel(benchmark::State& state) { quasi_check(state, Execution::Parallel); }
BENCHMARK(BM_QuasiHamiltonianSerial)->Arg(4)->Arg(16)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_QuasiHamiltonianParallel)->Arg(4)->Arg(16)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
