#include <benchmark/benchmark.h>

#include "regulus/morita.hpp"
#include "regulus/regularity.hpp"

using namespace regulus;

namespace {

void BM_RingAxioms_M2Z4(benchmark::State& state) {
  auto tables = matrix_ring(cyclic_ring(4), 2).ring->tables();
  for (auto _ : state) {
    auto rep = check_ring_axioms(tables);
    benchmark::DoNotOptimize(rep.ok());
  }
}
BENCHMARK(BM_RingAxioms_M2Z4)->Unit(benchmark::kMillisecond);

void BM_VnrCheck_M2Z4(benchmark::State& state) {
  auto ring = matrix_ring(cyclic_ring(4), 2).ring;
  for (auto _ : state) {
    auto cert = vnr_check(ring);
    benchmark::DoNotOptimize(cert.regular);
  }
}
BENCHMARK(BM_VnrCheck_M2Z4)->Unit(benchmark::kMillisecond);

void BM_EnumerateHoms_Z8(benchmark::State& state) {
  auto reg = regular_left_module(cyclic_ring(8));
  auto sum = direct_sum(reg, reg).module;
  for (auto _ : state) {
    auto homs = enumerate_homs(reg, sum);
    benchmark::DoNotOptimize(homs.size());
  }
}
BENCHMARK(BM_EnumerateHoms_Z8)->Unit(benchmark::kMicrosecond);

void BM_RelativeRegular_Z6(benchmark::State& state) {
  auto reg = regular_left_module(cyclic_ring(6));
  for (auto _ : state) {
    auto cert = is_relative_regular(reg, reg);
    benchmark::DoNotOptimize(cert.regular);
  }
}
BENCHMARK(BM_RelativeRegular_Z6)->Unit(benchmark::kMicrosecond);

void BM_ContextRing_StdZ4(benchmark::State& state) {
  auto ctx = standard_context(cyclic_ring(4));
  for (auto _ : state) {
    auto t = context_ring(ctx);
    benchmark::DoNotOptimize(t.ring->order());
  }
}
BENCHMARK(BM_ContextRing_StdZ4)->Unit(benchmark::kMillisecond);

void BM_EndoRing_Z4Sq(benchmark::State& state) {
  auto p = free_module(cyclic_ring(4), 2);
  for (auto _ : state) {
    auto e = endo_ring(p);
    benchmark::DoNotOptimize(e.ring->order());
  }
}
BENCHMARK(BM_EndoRing_Z4Sq)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
