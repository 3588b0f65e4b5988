#include <benchmark/benchmark.h>

#include "wtrace/daha.hpp"
#include "wtrace/fock.hpp"
#include "wtrace/partition.hpp"
#include "wtrace/series.hpp"
#include "wtrace/sparse.hpp"
#include "wtrace/traceh.hpp"
#include "wtrace/walgebra.hpp"

namespace {

using namespace wtrace;

// Fresh operator graphs each iteration so that memoized blocks are not reused.
void BM_CommutatorBlock(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  for (auto _ : state) {
    const auto x = GradedOperator::creation(1);
    const auto y = compose(GradedOperator::annihilation(2), GradedOperator::creation(1));
    const auto comm = commutator(y, x);
    for (int k = 0; k <= d; ++k) benchmark::DoNotOptimize(comm.block(k));
  }
}
BENCHMARK(BM_CommutatorBlock)->DenseRange(4, 12, 4);

void BM_StructureConstants(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(structure_constants(2, k, -2, k));
}
BENCHMARK(BM_StructureConstants)->DenseRange(1, 7, 2);

void BM_WRelationSuite(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(wsuite::relations(2, 2, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_WRelationSuite)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_RowReduction(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    RowSpace space;
    for (std::size_t i = 0; i < n; ++i) {
      SparseVec v;
      for (std::size_t j = 0; j < n; ++j) v.set(j, Rational(static_cast<long>((i * 7 + j * j * 3) % 11) - 5));
      space.insert(v);
    }
    benchmark::DoNotOptimize(space.rank());
  }
}
BENCHMARK(BM_RowReduction)->RangeMultiplier(2)->Range(8, 64);

void BM_DahaMultiply(benchmark::State& state) {
  std::mt19937 rng(3);
  const auto f = random_element(3, static_cast<int>(state.range(0)), 4, rng);
  const auto g = random_element(3, static_cast<int>(state.range(0)), 4, rng);
  for (auto _ : state) benchmark::DoNotOptimize(f * g);
}
BENCHMARK(BM_DahaMultiply)->DenseRange(1, 5, 2);

void BM_Cocenter(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(cocenter_dims(static_cast<int>(state.range(0)), 2, 2));
}
BENCHMARK(BM_Cocenter)->DenseRange(2, 3)->Unit(benchmark::kMillisecond);

void BM_ProductFormula(benchmark::State& state) {
  const int r = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(product_formula(BiSeries::Side::positive, r, 3));
}
BENCHMARK(BM_ProductFormula)->DenseRange(5, 15, 5);

void BM_PartitionBasis(benchmark::State& state) {
  for (auto _ : state) {
    for (int d = 0; d <= state.range(0); ++d) benchmark::DoNotOptimize(partition_count(d));
  }
}
BENCHMARK(BM_PartitionBasis)->Arg(20);

}  // namespace

BENCHMARK_MAIN();
