#include <benchmark/benchmark.h>

#include <random>

#include "coxcensus/abelianization.hpp"
#include "coxcensus/catalog.hpp"
#include "coxcensus/census.hpp"
#include "coxcensus/epimorphism.hpp"
#include "coxcensus/families.hpp"
#include "coxcensus/integer_matrix.hpp"
#include "coxcensus/perm_group.hpp"
#include "coxcensus/reidemeister_schreier.hpp"
#include "coxcensus/smith.hpp"
#include "coxcensus/todd_coxeter.hpp"

using namespace coxcensus;

namespace {

std::shared_ptr<const Presentation> family(const char* spec) {
  return std::make_shared<const Presentation>(build_presentation(parse_family_spec(spec)));
}

void BM_ToddCoxeterH4(benchmark::State& state) {
  auto p = family("C(3,5;2,2;2,3)");
  for (auto _ : state) {
    auto r = todd_coxeter(p, {});
    benchmark::DoNotOptimize(r.table->index());
  }
  state.SetLabel("order 14400");
}
BENCHMARK(BM_ToddCoxeterH4)->Unit(benchmark::kMillisecond);

void BM_EpiSearch(benchmark::State& state) {
  auto p = family("T(5,5;2,2;3,3)");
  auto g = catalog_finite_group("A5");
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_epimorphisms(p, g).classes.size());
}
BENCHMARK(BM_EpiSearch)->Unit(benchmark::kMillisecond);

void BM_EpiSearchPSL219(benchmark::State& state) {
  auto p = family("T(5,5;2,2;2,3)");
  auto g = catalog_finite_group("PSL(2,19)");
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_epimorphisms(p, g).classes.size());
}
BENCHMARK(BM_EpiSearchPSL219)->Unit(benchmark::kMillisecond)->Iterations(1);

// Kernel abelianization at increasing index: A5 (60), PSL(2,7) (168),
// PSL(2,19) (3420).
void BM_KernelAbelianization(benchmark::State& state) {
  struct Case {
    const char* spec;
    const char* target;
  };
  static const Case cases[] = {{"T(5,5;2,2;3,3)", "A5"}, {"T(4,4;2,2;3,3)", "PSL(2,7)"}, {"T(5,5;2,2;2,3)", "PSL(2,19)"}};
  const auto& c = cases[state.range(0)];
  auto res = enumerate_epimorphisms(family(c.spec), catalog_finite_group(c.target));
  const auto& e = res.classes.front().representative;
  for (auto _ : state) benchmark::DoNotOptimize(kernel_abelianization(e).rank);
  state.SetLabel(std::string(c.spec) + " -> " + c.target);
}
BENCHMARK(BM_KernelAbelianization)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

void BM_SparseSmith(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937 rng(1);
  IntegerMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (int k = 0; k < 4; ++k) m.set(i, rng() % n, static_cast<long>(rng() % 7) - 3);
  for (auto _ : state) benchmark::DoNotOptimize(smith_invariant_factors(m).size());
}
// Random integer matrices, unlike relator matrices, have few unit pivots and
// grow large entries; keep them small.
BENCHMARK(BM_SparseSmith)->RangeMultiplier(2)->Range(32, 256)->Unit(benchmark::kMillisecond);

void BM_SchreierSims(benchmark::State& state) {
  for (auto _ : state) {
    PermGroup g = projective_general_linear(19);
    benchmark::DoNotOptimize(g.order());
  }
}
BENCHMARK(BM_SchreierSims)->Unit(benchmark::kMicrosecond);

void BM_AnalyzeQuick(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(analyze("Ttau(5,5;2,2;3,3)", "A5").class_count);
}
BENCHMARK(BM_AnalyzeQuick)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
