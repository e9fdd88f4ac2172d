#include "liedeform/kernels.hpp"

#include <cmath>

// Serial reference kernels. Straight transcriptions of the defining sums,
// each term accumulated separately; no loop reordering or symmetry shortcuts.

namespace liedeform::reference {

double antisymmetry_residual(const Tensor3& f) {
  const int n = f.dim();
  double worst = 0.0;
  for (int m = 0; m < n; ++m)
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) worst = std::fmax(worst, std::fabs(f(m, a, b) + f(m, b, a)));
  return worst;
}

double jacobi_residual(const Tensor3& f) {
  const int n = f.dim();
  double worst = 0.0;
  for (int m = 0; m < n; ++m)
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int g = 0; g < n; ++g) {
          double s = 0.0;
          for (int k = 0; k < n; ++k) s += f(m, a, k) * f(k, b, g);
          for (int k = 0; k < n; ++k) s += f(m, b, k) * f(k, g, a);
          for (int k = 0; k < n; ++k) s += f(m, g, k) * f(k, a, b);
          worst = std::fmax(worst, std::fabs(s));
        }
  return worst;
}

Matrix killing_form(const Tensor3& f) {
  const int n = f.dim();
  Matrix B = Matrix::Zero(n, n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int m = 0; m < n; ++m)
        for (int k = 0; k < n; ++k) B(a, b) += f(m, a, k) * f(k, b, m);
  return B;
}

Matrix lie_poisson_block(const Tensor3& f, const Vector& pi) {
  const int n = f.dim();
  Matrix C = Matrix::Zero(n, n);
  for (int m = 0; m < n; ++m)
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) C(a, b) += pi(m) * f(m, a, b);
  return C;
}

Tensor3 delta2(const Tensor3& f, const Matrix& T) {
  const int n = f.dim();
  Tensor3 out(n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int g = 0; g < n; ++g) {
        double first = 0.0, second = 0.0, third = 0.0;
        for (int k = 0; k < n; ++k) {
          first -= T(k, g) * f(k, a, b);
          second += T(k, b) * f(k, a, g);
          third -= T(k, a) * f(k, b, g);
        }
        out(a, b, g) = first + second + third;
      }
  return out;
}

Tensor3 delta1_vector(const Tensor3& f, const Matrix& theta) {
  const int n = f.dim();
  Tensor3 out(n);
  for (int a = 0; a < n; ++a)
    for (int m = 0; m < n; ++m)
      for (int v = 0; v < n; ++v) {
        double first = 0.0, second = 0.0, third = 0.0;
        for (int k = 0; k < n; ++k) {
          first -= theta(k, v) * f(k, m, a);
          second += theta(k, m) * f(k, v, a);
          third -= theta(a, k) * f(k, m, v);
        }
        out(a, m, v) = first + second + third;
      }
  return out;
}

}  // namespace liedeform::reference
