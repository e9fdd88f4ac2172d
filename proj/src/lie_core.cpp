#include "liedeform/lie_core.hpp"

#include "liedeform/kernels.hpp"
#include "liedeform/linalg.hpp"

#include <cmath>
#include <utility>

namespace liedeform {

Tensor3 to_tensor(const NestedArray3& f) {
  const auto n = f.size();
  if (n == 0) throw ShapeMismatch("structure constants: empty array");
  for (std::size_t m = 0; m < n; ++m) {
    if (f[m].size() != n)
      throw ShapeMismatch("structure constants: f[" + std::to_string(m) + "] has " +
                          std::to_string(f[m].size()) + " rows, expected " + std::to_string(n));
    for (std::size_t a = 0; a < n; ++a)
      if (f[m][a].size() != n)
        throw ShapeMismatch("structure constants: f[" + std::to_string(m) + "][" +
                            std::to_string(a) + "] has " + std::to_string(f[m][a].size()) +
                            " entries, expected " + std::to_string(n));
  }
  Tensor3 t(static_cast<int>(n));
  for (std::size_t m = 0; m < n; ++m)
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) t(m, a, b) = f[m][a][b];
  return t;
}

ValidationReport validate_algebra(const Tensor3& f) {
  if (f.dim() <= 0) throw ShapeMismatch("structure constants: dimension must be positive");
  ValidationReport r;
  r.dim = f.dim();
  r.antisymmetry_residual = kernels::antisymmetry_residual(f);
  r.jacobi_residual = kernels::jacobi_residual(f);
  r.accepted = r.antisymmetry_residual <= tol::kAlgebraAxioms &&
               r.jacobi_residual <= tol::kAlgebraAxioms;
  return r;
}

ValidationReport validate_algebra(const NestedArray3& f) { return validate_algebra(to_tensor(f)); }

LieAlgebra::LieAlgebra(std::string name, Tensor3 f, double axiom_tol)
    : name_(std::move(name)), f_(std::move(f)), report_(validate_algebra(f_)) {
  report_.accepted =
      report_.antisymmetry_residual <= axiom_tol && report_.jacobi_residual <= axiom_tol;
  if (!report_.accepted)
    throw InvalidAlgebra("algebra '" + name_ + "' rejected: antisymmetry residual " +
                         std::to_string(report_.antisymmetry_residual) + ", Jacobi residual " +
                         std::to_string(report_.jacobi_residual));
  for (double x : f_.data()) {
    if (x != std::nearbyint(x)) integer_valued_ = false;
    scale_ = std::fmax(scale_, std::fabs(x));
  }
}

AlgebraElement LieAlgebra::bracket(const AlgebraElement& u, const AlgebraElement& v) const {
  return ad_matrix(*this, u) * v;
}

KillingForm killing_form(const LieAlgebra& A) {
  return KillingForm{kernels::killing_form(A.structure_constants())};
}

bool is_semisimple(const LieAlgebra& A, double tol) {
  const Matrix B = killing_form(A).B;
  const double scale = max_abs(B);
  if (scale == 0.0) return false;
  return std::fabs(B.determinant()) > tol * std::pow(scale, A.dim());
}

Matrix ad_matrix(const LieAlgebra& A, const AlgebraElement& u) {
  const int n = A.dim();
  if (u.size() != n) throw ShapeMismatch("ad_matrix: element length differs from algebra dimension");
  Matrix ad = Matrix::Zero(n, n);
  for (int k = 0; k < n; ++k) {
    if (u(k) == 0.0) continue;
    for (int m = 0; m < n; ++m)
      for (int v = 0; v < n; ++v) ad(m, v) += A.f(m, k, v) * u(k);
  }
  return ad;
}

Matrix Ad_exp(const LieAlgebra& A, const AlgebraElement& u, double t) {
  return linalg::expm(t * ad_matrix(A, u));
}

Matrix coadjoint_matrix(const LieAlgebra& A, const AlgebraElement& u, double t) {
  return Ad_exp(A, u, -t).transpose();
}

}  // namespace liedeform
