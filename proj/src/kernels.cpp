#include "liedeform/kernels.hpp"

#include <omp.h>

#include <cmath>

namespace liedeform::kernels {

namespace {
// Below this dimension the fork/join cost dominates the O(N^4) work.
constexpr int kParallelMinDim = 8;
}  // namespace

int thread_count() { return omp_get_max_threads(); }

double antisymmetry_residual(const Tensor3& f) {
  const int n = f.dim();
  double worst = 0.0;
#pragma omp parallel for reduction(max : worst) if (n >= kParallelMinDim)
  for (int m = 0; m < n; ++m)
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) worst = std::fmax(worst, std::fabs(f(m, a, b) + f(m, b, a)));
  return worst;
}

double jacobi_residual(const Tensor3& f) {
  const int n = f.dim();
  double worst = 0.0;
#pragma omp parallel for reduction(max : worst) if (n >= kParallelMinDim)
  for (int m = 0; m < n; ++m) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int g = 0; g < n; ++g) {
          double s = 0.0;
          for (int k = 0; k < n; ++k)
            s += f(m, a, k) * f(k, b, g) + f(m, b, k) * f(k, g, a) + f(m, g, k) * f(k, a, b);
          worst = std::fmax(worst, std::fabs(s));
        }
  }
  return worst;
}

Matrix killing_form(const Tensor3& f) {
  const int n = f.dim();
  Matrix B = Matrix::Zero(n, n);
#pragma omp parallel for if (n >= kParallelMinDim)
  for (int a = 0; a < n; ++a)
    for (int b = a; b < n; ++b) {
      double s = 0.0;
      for (int m = 0; m < n; ++m)
        for (int k = 0; k < n; ++k) s += f(m, a, k) * f(k, b, m);
      B(a, b) = s;
      B(b, a) = s;
    }
  return B;
}

Matrix lie_poisson_block(const Tensor3& f, const Vector& pi) {
  const int n = f.dim();
  Matrix C = Matrix::Zero(n, n);
#pragma omp parallel for if (n >= kParallelMinDim)
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      double s = 0.0;
      for (int m = 0; m < n; ++m) s += pi(m) * f(m, a, b);
      C(a, b) = s;
    }
  return C;
}

Tensor3 delta2(const Tensor3& f, const Matrix& T) {
  const int n = f.dim();
  Tensor3 out(n);
#pragma omp parallel for if (n >= kParallelMinDim)
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int g = 0; g < n; ++g) {
        double s = 0.0;
        for (int k = 0; k < n; ++k)
          s += -T(k, g) * f(k, a, b) + T(k, b) * f(k, a, g) - T(k, a) * f(k, b, g);
        out(a, b, g) = s;
      }
  return out;
}

Tensor3 delta1_vector(const Tensor3& f, const Matrix& theta) {
  const int n = f.dim();
  Tensor3 out(n);
#pragma omp parallel for if (n >= kParallelMinDim)
  for (int a = 0; a < n; ++a)
    for (int m = 0; m < n; ++m)
      for (int v = 0; v < n; ++v) {
        double s = 0.0;
        for (int k = 0; k < n; ++k)
          s += -theta(k, v) * f(k, m, a) + theta(k, m) * f(k, v, a) - theta(a, k) * f(k, m, v);
        out(a, m, v) = s;
      }
  return out;
}

}  // namespace liedeform::kernels
