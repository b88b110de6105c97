#include "bellcone/cone.hpp"
#include "bellcone/fixtures.hpp"
#include "bellcone/lifting.hpp"
#include "bellcone/scenario.hpp"
#include "bellcone/symmetry.hpp"

#include <benchmark/benchmark.h>

using namespace bellcone;

namespace {

void bm_ns2_rays(benchmark::State& state) {
  const auto ns2 = ns_cone(2);
  for (auto _ : state) benchmark::DoNotOptimize(extreme_rays(ns2));
}
BENCHMARK(bm_ns2_rays)->Unit(benchmark::kMillisecond);

void bm_b2_facets(benchmark::State& state) {
  const auto b2 = bell_cone(2);
  for (auto _ : state) benchmark::DoNotOptimize(facets(b2));
}
BENCHMARK(bm_b2_facets)->Unit(benchmark::kMillisecond);

void bm_orbit_canonical_form(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto group = SymmetryGroup::full(n);
  const auto v = n == 2 ? pr_box().entries() : gyni_box().entries();
  for (auto _ : state) benchmark::DoNotOptimize(orbit_canonical_form(v, group));
}
BENCHMARK(bm_orbit_canonical_form)->Arg(2)->Arg(3)->Unit(benchmark::kMicrosecond);

void bm_bell_membership(benchmark::State& state) {
  const auto b3 = bell_cone(3);
  const auto x = gyni_box().entries();
  for (auto _ : state) benchmark::DoNotOptimize(membership(b3, x));
}
BENCHMARK(bm_bell_membership)->Unit(benchmark::kMillisecond);

void bm_mermin_klyshko(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(mermin_klyshko(n));
}
BENCHMARK(bm_mermin_klyshko)->DenseRange(2, 5)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
