#include <benchmark/benchmark.h>

#include "pdp/oracle.hpp"
#include "pdp/search.hpp"

namespace {

pdp::Instance grid_instance(int rows, int cols, int k) {
  pdp::GenSpec spec;
  spec.family = "grid";
  spec.rows = rows;
  spec.cols = cols;
  spec.k = k;
  spec.order = pdp::TerminalOrder::kGeneral;
  spec.seed = 17;
  return pdp::gen_instance(spec);
}

void BM_CountOneFaceGrid(benchmark::State& state) {
  auto inst = grid_instance(static_cast<int>(state.range(0)),
                            static_cast<int>(state.range(1)), 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(pdp::count_one_face(inst));
  }
}
BENCHMARK(BM_CountOneFaceGrid)->Args({3, 3})->Args({3, 4})->Args({4, 4});

void BM_CountTwoFaceLadder(benchmark::State& state) {
  pdp::GenSpec spec;
  spec.family = "annulus";
  spec.rings = 2;
  spec.spokes = static_cast<int>(state.range(0));
  spec.k = 2;
  spec.seed = 5;
  auto inst = pdp::gen_instance(spec);
  for (auto _ : state) {
    benchmark::DoNotOptimize(pdp::count_two_face(inst));
  }
}
BENCHMARK(BM_CountTwoFaceLadder)->Arg(4)->Arg(6)->Arg(8);

void BM_GreedySearchGrid(benchmark::State& state) {
  auto inst = grid_instance(3, 3, 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(pdp::greedy_search(inst));
  }
}
BENCHMARK(BM_GreedySearchGrid);

}  // namespace
