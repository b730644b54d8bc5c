#include <benchmark/benchmark.h>

#include <cmath>
#include <numbers>

#include "wigneg/haar.hpp"
#include "wigneg/indicators.hpp"
#include "wigneg/states.hpp"
#include "wigneg/wigner.hpp"

using namespace wigneg;

namespace {

EulerPointSU3 some_point() {
  EulerPointSU3 p;
  p.alpha = 0.3;
  p.beta = 1.1;
  p.gamma = 2.7;
  p.theta = 0.6;
  p.a = 4.0;
  p.b = 2.0;
  p.c = 5.5;
  p.phi = 1.9;
  return p;
}

void BM_su3_from_euler(benchmark::State& state) {
  const EulerPointSU3 p = some_point();
  for (auto _ : state) {
    benchmark::DoNotOptimize(su3_from_euler(p));
  }
}
BENCHMARK(BM_su3_from_euler);

void BM_wigner_value_bloch(benchmark::State& state) {
  const BlochState st = BlochState::qutrit_diagonal(0.3, 0.4);
  const KernelModuli m = KernelModuli::from_zeta(0.5);
  const CMatrix u = su3_from_euler(some_point());
  for (auto _ : state) {
    benchmark::DoNotOptimize(wigner_value(st, m, u));
  }
}
BENCHMARK(BM_wigner_value_bloch);

void BM_wigner_value_matrix(benchmark::State& state) {
  const BlochState st = BlochState::qutrit_diagonal(0.3, 0.4);
  const KernelModuli m = KernelModuli::from_zeta(0.5);
  const CMatrix u = su3_from_euler(some_point());
  for (auto _ : state) {
    benchmark::DoNotOptimize(wigner_value_matrix(st, m, u));
  }
}
BENCHMARK(BM_wigner_value_matrix);

void BM_kz_degenerate_quadrature(benchmark::State& state) {
  const BlochState st = BlochState::qutrit_diagonal(0.3, 0.4);
  const KernelModuli m = KernelModuli::from_zeta(0.0);
  IntegratorConfig cfg;
  cfg.nodes_per_dim = static_cast<int>(state.range(0));
  cfg.threads = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(kz_numeric(st, m, cfg).value);
  }
}
BENCHMARK(BM_kz_degenerate_quadrature)->Arg(16)->Arg(32)->Arg(48);

void BM_haar_sampling(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(sample_haar_su3(1000, 7));
  }
}
BENCHMARK(BM_haar_sampling);

}  // namespace

BENCHMARK_MAIN();
