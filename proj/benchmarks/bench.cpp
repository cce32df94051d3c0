#include <benchmark/benchmark.h>

#include "mvw/axioms.hpp"
#include "mvw/builders.hpp"
#include "mvw/catalog.hpp"
#include "mvw/ideals.hpp"
#include "mvw/locale.hpp"
#include "mvw/spectrum.hpp"

namespace {

mvw::MvwRig zn_square(std::size_t n) {
  auto z = mvw::build_zn(n);
  return mvw::direct_product(z, z);
}

void BM_CheckAll(benchmark::State& state) {
  auto r = zn_square(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(mvw::check_all(r).ok());
  state.counters["carrier"] = static_cast<double>(r.size());
}
BENCHMARK(BM_CheckAll)->Arg(1)->Arg(3)->Arg(7)->Arg(15)->Unit(benchmark::kMillisecond);

void BM_EnumerateIdeals(benchmark::State& state) {
  auto r = zn_square(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(mvw::enumerate_ideals(r).size());
  state.counters["carrier"] = static_cast<double>(r.size());
}
BENCHMARK(BM_EnumerateIdeals)->Arg(1)->Arg(3)->Arg(7)->Arg(15)->Unit(benchmark::kMicrosecond);

void BM_Spec(benchmark::State& state) {
  auto r = zn_square(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(mvw::spec(r).opens.size());
}
BENCHMARK(BM_Spec)->Arg(1)->Arg(3)->Arg(7)->Unit(benchmark::kMicrosecond);

void BM_Frame(benchmark::State& state) {
  auto r = zn_square(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(mvw::frame(r).filters.size());
}
BENCHMARK(BM_Frame)->Arg(1)->Arg(3)->Arg(7)->Unit(benchmark::kMicrosecond);

void BM_MatrixRig(benchmark::State& state) {
  auto z1 = mvw::build_zn(1);
  for (auto _ : state) benchmark::DoNotOptimize(mvw::build_matrix_rig(z1, 2).rig.size());
}
BENCHMARK(BM_MatrixRig)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
