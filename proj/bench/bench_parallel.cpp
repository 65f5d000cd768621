// Serial reference vs OpenMP for the parallel kernels. Arg 0 = serial,
// 1 = parallel. With one core the two should be close; the parallel path
// must never change results (checked in the tests).

#include <benchmark/benchmark.h>

#include "poincare/rep.hpp"
#include "poincare/super.hpp"

using namespace poincare;

namespace {

Exec exec_of(const benchmark::State& s) { return s.range(0) ? Exec::Parallel : Exec::Serial; }

void BM_FirstOrderSweep(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(first_order_sweep({1, 1}, exec_of(state)));
}
BENCHMARK(BM_FirstOrderSweep)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

// A conjugated copy of the 16-dim family member: hom is 1-dim so the
// lattice search is short; the 5+5 sum gives a 4-dim hom and a longer one.
void BM_Equivalence(benchmark::State& state) {
  FamilySpec f{{1, 0}, {1, 2}, {0, 1}, {2, 1}, {1, 2, 3, 5}};
  RepMatrices a = build_family(f);
  Matrix p = Matrix::identity(a.dim);
  for (std::size_t i = 0; i + 1 < a.dim; ++i) p.set(i, i + 1, Rational(static_cast<long>(i % 3) - 1));
  RepMatrices b = conjugate(a, p);
  for (auto _ : state) benchmark::DoNotOptimize(equivalence(a, b, exec_of(state)));
}
BENCHMARK(BM_Equivalence)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_ElementOfRank(benchmark::State& state) {
  FamilySpec f{{1, 0}, {1, 0}, {2, 1}, {0, 1}, {1, 2, 3, 5}};
  RepMatrices a = build_family(f);
  auto basis = hom_basis(a, a);
  for (auto _ : state) benchmark::DoNotOptimize(element_of_rank(basis, a.dim, exec_of(state)));
}
BENCHMARK(BM_ElementOfRank)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_EnumerateTriples(benchmark::State& state) {
  IdealSpec i7{{{1, 0}}};
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_triples(i7, 20, exec_of(state)));
}
BENCHMARK(BM_EnumerateTriples)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
