// Serial reference vs OpenMP kernels.
#include <benchmark/benchmark.h>

#include "tlloops/complex.hpp"
#include "tlloops/homology.hpp"

using namespace tlloops;

namespace {

ComplexSpec reduced(int max_degree, PointedRing ring = PointedRing::with_a(Domain::integers(), 0)) {
  ComplexSpec s;
  s.ring = ring;
  s.max_degree = max_degree;
  return s;
}

void BM_BuildReference(benchmark::State& st) {
  ComplexSpec s = reduced(static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(build_complex_reference(s));
}

// range(1) = threads; 1 is the serial path of the table-driven kernel
void BM_BuildTable(benchmark::State& st) {
  ComplexSpec s = reduced(static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(build_complex(s, static_cast<int>(st.range(1))));
}

void BM_BuildTableUniversal(benchmark::State& st) {
  ComplexSpec s = reduced(static_cast<int>(st.range(0)), PointedRing::universal());
  for (auto _ : st) benchmark::DoNotOptimize(build_complex(s, static_cast<int>(st.range(1))));
}

const SparseMatrix& d4_f2() {
  static const ChainComplexData c = build_complex(reduced(4, PointedRing::with_a(Domain::prime_field(2), 0)));
  return c.d(4);
}

void BM_RankSparse(benchmark::State& st) {
  const SparseMatrix& m = d4_f2();
  for (auto _ : st) benchmark::DoNotOptimize(rank_over_field(m));
}

void BM_RankDense(benchmark::State& st) {
  const SparseMatrix& m = d4_f2();
  for (auto _ : st) benchmark::DoNotOptimize(rank_over_field_dense(m));
}

void BM_HomologyByWeight(benchmark::State& st) {
  static const ChainComplexData c = build_complex(reduced(5, PointedRing::with_a(Domain::prime_field(2), 0)));
  HomologyOptions o{false, static_cast<int>(st.range(0))};
  for (auto _ : st) benchmark::DoNotOptimize(homology_by_weight(c, 1, 4, o));
}

}  // namespace

BENCHMARK(BM_BuildReference)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BuildTable)->Args({3, 1})->Args({4, 1})->Args({4, 0})->Args({5, 1})->Args({5, 0})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BuildTableUniversal)->Args({4, 1})->Args({4, 0})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RankSparse)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RankDense)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_HomologyByWeight)->Arg(1)->Arg(0)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
