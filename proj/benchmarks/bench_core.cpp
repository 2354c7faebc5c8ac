#include <benchmark/benchmark.h>

#include <random>

#include "curvepi/abelian.hpp"
#include "curvepi/catalog.hpp"
#include "curvepi/coset_table.hpp"
#include "curvepi/presentation.hpp"
#include "curvepi/schreier.hpp"
#include "curvepi/simplify.hpp"
#include "curvepi/verify.hpp"

using namespace curvepi;

static void BM_EnumerateQuintic320(benchmark::State& state) {
  Presentation const p = parse_presentation("<a,b | b=a b^4 a, a^2=b^2 a^3 b^2>");
  for (auto _ : state) {
    auto r = todd_coxeter(p, {});
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_EnumerateQuintic320)->Unit(benchmark::kMillisecond);

static void BM_EnumerateTriangle(benchmark::State& state) {
  // Delta(2,3,n) is finite for n <= 5.
  Presentation const p = build(parse_tag("triangle:2,3," + std::to_string(state.range(0))));
  for (auto _ : state) {
    auto r = todd_coxeter(p, {});
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_EnumerateTriangle)->DenseRange(3, 5)->Unit(benchmark::kMicrosecond);

static void BM_SmithNormalForm(benchmark::State& state) {
  auto const      n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(42);
  std::uniform_int_distribution<long> entry(-20, 20);
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      m(i, j) = entry(rng);
    }
  }
  for (auto _ : state) {
    auto s = smith_normal_form(m, true);
    benchmark::DoNotOptimize(s);
  }
}
BENCHMARK(BM_SmithNormalForm)->RangeMultiplier(2)->Range(4, 32)->Unit(benchmark::kMicrosecond);

static void BM_ReidemeisterSchreierKernel(benchmark::State& state) {
  // Index-168 kernel pipeline: enumeration over the PSL(2,7) quotient, rewrite, simplify.
  for (auto _ : state) {
    SuiteOptions o;
    o.only = {"V3"};
    auto r = run_suite(o);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_ReidemeisterSchreierKernel)->Unit(benchmark::kMillisecond);

static void BM_SubgroupPresentation(benchmark::State& state) {
  Presentation const p = parse_presentation("<a,b | a^2, b^3, (ab)^5>");
  CosetTable const   t = std::get<CosetTable>(todd_coxeter(p, {}));
  for (auto _ : state) {
    auto sub = simplify(subgroup_presentation(p, t));
    benchmark::DoNotOptimize(sub);
  }
}
BENCHMARK(BM_SubgroupPresentation)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
