#include <benchmark/benchmark.h>

#include <random>

#include "pdp/det.hpp"

namespace {

pdp::SquareMatrix<pdp::BigInt> random_matrix(int d, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> dist(-9, 9);
  pdp::SquareMatrix<pdp::BigInt> m(d, pdp::BigInt(0));
  for (int r = 0; r < d; ++r)
    for (int c = 0; c < d; ++c) m.at(r, c) = dist(rng);
  return m;
}

void BM_BareissDet(benchmark::State& state) {
  auto m = random_matrix(static_cast<int>(state.range(0)), 7);
  for (auto _ : state) {
    benchmark::DoNotOptimize(pdp::det_integer(m));
  }
}
BENCHMARK(BM_BareissDet)->Arg(8)->Arg(12)->Arg(16)->Arg(24);

void BM_ClowDet(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const int k = 3;
  std::mt19937_64 rng(11);
  pdp::SquareMatrix<pdp::CyclicInt> m(d, pdp::CyclicInt(k));
  for (int r = 0; r < d; ++r) {
    for (int c = 0; c < d; ++c) {
      if (rng() % 3 == 0) continue;
      m.at(r, c) = pdp::CyclicInt::monomial(
          k, pdp::BigInt(static_cast<long>(rng() % 7) - 3), rng() % k);
    }
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(pdp::det_division_free(m));
  }
}
BENCHMARK(BM_ClowDet)->Arg(6)->Arg(10)->Arg(14);

void BM_PolyDet(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  std::mt19937_64 rng(13);
  pdp::SquareMatrix<pdp::Poly> m(d, pdp::Poly());
  for (int r = 0; r < d; ++r) {
    for (int c = 0; c < d; ++c) {
      if (rng() % 3 == 0) continue;
      m.at(r, c) = pdp::Poly::monomial(pdp::BigInt(1), rng() % 4);
    }
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(pdp::det_poly(m));
  }
}
BENCHMARK(BM_PolyDet)->Arg(8)->Arg(12)->Arg(16);

}  // namespace
