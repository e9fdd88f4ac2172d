// Parallel kernels against their serial reference twins.

#include "liedeform/kernels.hpp"
#include "liedeform/registry.hpp"
#include "liedeform/sweep.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace liedeform;

namespace {

Tensor3 random_tensor(int n) {
  std::mt19937_64 gen(static_cast<std::uint64_t>(n));
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Tensor3 f(n);
  for (int m = 0; m < n; ++m)
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b) {
        f(m, a, b) = u(gen);
        f(m, b, a) = -f(m, a, b);
      }
  return f;
}

Matrix random_antisymmetric(int n) {
  const Matrix r = Matrix::Random(n, n);
  return r - r.transpose();
}

template <Tensor3 (*Kernel)(const Tensor3&, const Matrix&)>
void BM_delta2(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Tensor3 f = random_tensor(n);
  const Matrix Theta = random_antisymmetric(n);
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(f, Theta));
}

template <double (*Kernel)(const Tensor3&)>
void BM_jacobi(benchmark::State& state) {
  const Tensor3 f = random_tensor(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(f));
}

template <Matrix (*Kernel)(const Tensor3&)>
void BM_killing(benchmark::State& state) {
  const Tensor3 f = random_tensor(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(f));
}

template <bool Parallel>
void BM_sweep(benchmark::State& state) {
  const LieAlgebra A = registry::abelian(2);
  const double step = 2.0 / static_cast<double>(state.range(0));
  const std::string range = "0:2:" + std::to_string(step);
  const std::vector<app::SweepAxis> axes{app::parse_axis("Theta[0][1]=" + range, 2),
                                         app::parse_axis("Upsilon[0][1]=" + range, 2)};
  const app::SweepBase base{Matrix::Zero(2, 2), Matrix::Zero(2, 2), Vector::Zero(2)};
  const auto entries = app::default_entries(2);
  for (auto _ : state) {
    if constexpr (Parallel)
      benchmark::DoNotOptimize(app::run_sweep(A, base, axes, entries));
    else
      benchmark::DoNotOptimize(app::run_sweep_serial(A, base, axes, entries));
  }
}

}  // namespace

BENCHMARK(BM_delta2<kernels::delta2>)->Name("delta2/parallel")->DenseRange(8, 20, 4);
BENCHMARK(BM_delta2<reference::delta2>)->Name("delta2/serial")->DenseRange(8, 20, 4);
BENCHMARK(BM_jacobi<kernels::jacobi_residual>)->Name("jacobi/parallel")->DenseRange(8, 20, 4);
BENCHMARK(BM_jacobi<reference::jacobi_residual>)->Name("jacobi/serial")->DenseRange(8, 20, 4);
BENCHMARK(BM_killing<kernels::killing_form>)->Name("killing/parallel")->DenseRange(8, 20, 4);
BENCHMARK(BM_killing<reference::killing_form>)->Name("killing/serial")->DenseRange(8, 20, 4);
BENCHMARK(BM_sweep<true>)->Name("sweep/parallel")->Arg(16)->Arg(64);
BENCHMARK(BM_sweep<false>)->Name("sweep/serial")->Arg(16)->Arg(64);

BENCHMARK_MAIN();
