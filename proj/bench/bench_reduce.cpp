// reduce() against the serial reference on random dense matrices.

#include <benchmark/benchmark.h>

#include <random>

#include "rigdim/matrix.hpp"

using namespace rigdim;

namespace {

Matrix random_matrix(const Field& f, std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> d(-9, 9);
  Matrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m.set(i, j, Scalar(d(rng)));
  return m;
}

template <Reduction (*F)(const Matrix&)>
void run(benchmark::State& state, const Field& f) {
  Matrix m = random_matrix(f, static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(F(m).rank);
}

void BM_reduce_Fp(benchmark::State& s) { run<reduce>(s, Field::prime(1000003)); }
void BM_reduce_serial_Fp(benchmark::State& s) { run<reduce_serial>(s, Field::prime(1000003)); }
void BM_reduce_Q(benchmark::State& s) { run<reduce>(s, Field::rational()); }
void BM_reduce_serial_Q(benchmark::State& s) { run<reduce_serial>(s, Field::rational()); }

}  // namespace

BENCHMARK(BM_reduce_Fp)->Arg(32)->Arg(96)->Arg(192)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_reduce_serial_Fp)->Arg(32)->Arg(96)->Arg(192)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_reduce_Q)->Arg(16)->Arg(48)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_reduce_serial_Q)->Arg(16)->Arg(48)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
