#include <benchmark/benchmark.h>

#include "hpoly/catalog.hpp"
#include "hpoly/constructions.hpp"
#include "hpoly/coset.hpp"
#include "hpoly/hereditary.hpp"
#include "hpoly/presentation.hpp"
#include "hpoly/symmetry.hpp"

using namespace hpoly;

static void BM_CosetEnumerationU5512(benchmark::State& state) {
  const GroupPresentation pres = read_presentation(catalog_dir() / catalog_entry("u5512").file);
  for (auto _ : state) benchmark::DoNotOptimize(coset_enumerate(pres).coset_count);
}
BENCHMARK(BM_CosetEnumerationU5512)->Unit(benchmark::kMillisecond);

static void BM_FlagGraph(benchmark::State& state) {
  const FacePoset p = catalog_get("n98-6");
  for (auto _ : state) benchmark::DoNotOptimize(flag_graph(p).flag_count());
}
BENCHMARK(BM_FlagGraph)->Unit(benchmark::kMillisecond);

static void BM_Automorphisms(benchmark::State& state) {
  const FlagGraph fg = flag_graph(catalog_get("n98-6"));
  for (auto _ : state) benchmark::DoNotOptimize(automorphisms(fg));
}
BENCHMARK(BM_Automorphisms)->Unit(benchmark::kMillisecond);

static void BM_HereditaryReport(benchmark::State& state) {
  const FacePoset p = catalog_get("t434-4");
  for (auto _ : state) benchmark::DoNotOptimize(hereditary_report(p));
}
BENCHMARK(BM_HereditaryReport)->Unit(benchmark::kMillisecond);

static void BM_TwoPower(benchmark::State& state) {
  const FacePoset k = catalog_get("cuboctahedron");
  for (auto _ : state) benchmark::DoNotOptimize(two_power(k).vertex_count());
}
BENCHMARK(BM_TwoPower)->Unit(benchmark::kMillisecond);

static void BM_Medial(benchmark::State& state) {
  const FacePoset p = catalog_get("n98-6");
  for (auto _ : state) benchmark::DoNotOptimize(medial(p).vertex_count());
}
BENCHMARK(BM_Medial)->Unit(benchmark::kMillisecond);

static void BM_CatalogHull(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(builtin_poset("icosidodecahedron").vertex_count());
}
BENCHMARK(BM_CatalogHull)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
