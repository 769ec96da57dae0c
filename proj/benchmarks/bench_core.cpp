#include <benchmark/benchmark.h>

#include "spectra/assignment.hpp"
#include "spectra/constants.hpp"
#include "spectra/ineq.hpp"
#include "spectra/jacobi.hpp"
#include "spectra/random.hpp"

namespace {

using namespace spectra;

void BM_Schur(benchmark::State& state) {
  Rng rng = derive_rng(1, 0);
  const CMatrix m = ginibre(rng, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(schur(m));
}
BENCHMARK(BM_Schur)->RangeMultiplier(2)->Range(4, 64);

void BM_NRangeBracket(benchmark::State& state) {
  Rng rng = derive_rng(2, 0);
  const CMatrix m = ginibre(rng, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(nrange_bracket(m, static_cast<int>(state.range(1))));
}
BENCHMARK(BM_NRangeBracket)->ArgsProduct({{8, 32}, {64, 256}});

void BM_CheckThm2(benchmark::State& state) {
  Rng rng = derive_rng(3, 0);
  const int n = static_cast<int>(state.range(0));
  const CMatrix a = ginibre(rng, n);
  const CMatrix b = a + random_low_rank(rng, n, 4, 3.0);
  for (auto _ : state) benchmark::DoNotOptimize(check_thm2(a, b, 2.0));
}
BENCHMARK(BM_CheckThm2)->Arg(8)->Arg(32);

void BM_Hungarian(benchmark::State& state) {
  Rng rng = derive_rng(4, 0);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const auto n = state.range(0);
  Eigen::MatrixXd cost(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) cost(i, j) = u(rng);
  for (auto _ : state) benchmark::DoNotOptimize(solve_assignment(cost));
}
BENCHMARK(BM_Hungarian)->RangeMultiplier(4)->Range(4, 256);

void BM_C1Quadrature(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(c1(3, 2.5, 0.75));
}
BENCHMARK(BM_C1Quadrature);

void BM_LtSum(benchmark::State& state) {
  Rng rng = derive_rng(5, 0);
  const JacobiSpec spec = random_spec(rng, 3, false);
  for (auto _ : state) benchmark::DoNotOptimize(lt_sum_nonselfadjoint(spec, 1.0));
}
BENCHMARK(BM_LtSum);

}  // namespace

BENCHMARK_MAIN();
