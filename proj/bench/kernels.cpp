#include <benchmark/benchmark.h>

#include "tverberg/chain_complex.hpp"
#include "tverberg/constructions.hpp"
#include "tverberg/homology.hpp"
#include "tverberg/partitions.hpp"

using namespace tverberg;

namespace {

// No partition exists, so the whole family space is walked.
void BM_SearchWitness(benchmark::State& state) {
  auto p = witness_configuration(2, 3);
  for (auto _ : state) {
    auto c = state.range(0) ? tverberg_search(p, 3) : tverberg_search_serial(p, 3);
    benchmark::DoNotOptimize(c);
  }
}
BENCHMARK(BM_SearchWitness)->Arg(0)->Arg(1)->ArgName("parallel");

void BM_Homology(benchmark::State& state) {
  auto c = chain_complex(chessboard(5, 6).complex);
  for (auto _ : state) {
    auto h = state.range(0) ? homology(c) : homology_serial(c);
    benchmark::DoNotOptimize(h);
  }
}
BENCHMARK(BM_Homology)->Arg(0)->Arg(1)->ArgName("parallel")->Unit(benchmark::kMillisecond);

void BM_BoundarySquares(benchmark::State& state) {
  auto c = deleted_product_chain(full_simplex(7), 3);
  for (auto _ : state) {
    bool ok = state.range(0) ? boundary_squares_vanish(c) : boundary_squares_vanish_serial(c);
    benchmark::DoNotOptimize(ok);
  }
}
BENCHMARK(BM_BoundarySquares)->Arg(0)->Arg(1)->ArgName("parallel")->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
