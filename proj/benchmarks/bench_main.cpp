#include <benchmark/benchmark.h>

#include "posmaps/classify.hpp"
#include "posmaps/dtype.hpp"
#include "posmaps/matrix.hpp"
#include "posmaps/witness.hpp"

namespace {

posmaps::MapParams cyclic(int n) {
  return posmaps::MapParams(posmaps::Permutation::tau(n, 1), n - 1.0,
                            std::vector<double>(static_cast<std::size_t>(n), 1.0));
}

void BM_Choi(benchmark::State& state) {
  const auto p = cyclic(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(posmaps::choi(p));
}
BENCHMARK(BM_Choi)->DenseRange(3, 8);

void BM_HermitianSpectrum(benchmark::State& state) {
  const auto c = posmaps::choi(cyclic(static_cast<int>(state.range(0)))).matrix;
  for (auto _ : state) benchmark::DoNotOptimize(posmaps::hermitian_spectrum(c));
}
BENCHMARK(BM_HermitianSpectrum)->DenseRange(3, 8)->Unit(benchmark::kMicrosecond);

void BM_PositivityNumeric(benchmark::State& state) {
  const auto p = cyclic(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(posmaps::verify_positivity_numeric(p, 2000, 1e-9, 0));
}
BENCHMARK(BM_PositivityNumeric)->Arg(3)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_CertifyOptimality(benchmark::State& state) {
  const auto p = cyclic(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(posmaps::certify_optimality(p));
}
BENCHMARK(BM_CertifyOptimality)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
