// Microbenchmarks for the hot paths: preorder comparisons, canonical
// tilings, dilation round-trips, and the axiom sweep.  Build with
// -DCUSPIDAL_BUILD_BENCHMARKS=ON and run ./benchmarks/cuspidal-bench.

#include <benchmark/benchmark.h>

#include <vector>

#include "cuspidal/cuspidal.hpp"
#include "cuspidal/dilation.hpp"
#include "cuspidal/preorder.hpp"
#include "cuspidal/roots.hpp"
#include "cuspidal/shape.hpp"

namespace {

using namespace cusp;

const ConvexPreorder& big() {
  static const ConvexPreorder p = ConvexPreorder::preset("bigex");
  return p;
}

// All positive roots of height <= bound, for comparison fodder.
std::vector<RootVector> roots_to_height(int e, Int bound) {
  std::vector<RootVector> out;
  for (Int h = 1; h <= bound; ++h) {
    if (h % e == 0) {
      out.push_back(RootVector::delta(e).times(h / e));
      continue;
    }
    for (int t = 0; t < e; ++t) out.push_back(alpha(e, t, h));
  }
  return out;
}

void BM_PreorderCompare(benchmark::State& state) {
  const auto roots = roots_to_height(3, 40);
  std::size_t i = 0, j = roots.size() / 2;
  for (auto _ : state) {
    benchmark::DoNotOptimize(big().compare(roots[i], roots[j]));
    if (++i == roots.size()) i = 0;
    if (++j == roots.size()) j = 0;
  }
}
BENCHMARK(BM_PreorderCompare);

void BM_GammaTilingStaircase(benchmark::State& state) {
  const Shape host = from_skew_partition({6, 5, 5, 5, 5, 2, 2, 1}, {},
                                         static_cast<int>(state.range(0)));
  for (auto _ : state) {
    GammaTiling g = gamma_tiling(host, big());
    benchmark::DoNotOptimize(g.tiles.size());
  }
}
BENCHMARK(BM_GammaTilingStaircase)->Arg(0)->Arg(1)->Arg(2);

void BM_DilateUndilate(benchmark::State& state) {
  const Shape core = from_skew_partition({4, 3, 2}, {}, 0);
  for (auto _ : state) {
    Shape image = dilate(2, core, big());
    auto rec = undilate(image, big());
    benchmark::DoNotOptimize(rec.has_value());
  }
}
BENCHMARK(BM_DilateUndilate);

void BM_VerifyAxioms(benchmark::State& state) {
  for (auto _ : state) {
    AxiomReport rep = verify_axioms(big(), state.range(0));
    benchmark::DoNotOptimize(rep.cases_checked);
  }
}
BENCHMARK(BM_VerifyAxioms)->Arg(8)->Arg(12);

}  // namespace

BENCHMARK_MAIN();
