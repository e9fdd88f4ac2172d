#include "liedeform/symmetry.hpp"

#include "liedeform/linalg.hpp"

#include <vector>

namespace liedeform {

Matrix lie_derivative_cocycle(const LieAlgebra& A, const AlgebraElement& u, const Matrix& Theta) {
  const Matrix ad = ad_matrix(A, u);
  return ad.transpose() * Theta + Theta * ad;
}

Matrix lie_derivative_momentum_form(const LieAlgebra& A, const AlgebraElement& u,
                                    const Matrix& Upsilon) {
  const Matrix ad = ad_matrix(A, u);
  return -(ad * Upsilon + Upsilon * ad.transpose());
}

IsotropySubalgebra isotropy_subalgebra(const LieAlgebra& A, const Matrix& Theta,
                                       const Matrix& Upsilon, const std::optional<Matrix>& inertia) {
  const int n = A.dim();
  const int blocks = inertia ? 3 : 2;
  const int block_size = n * n;
  Matrix stacked = Matrix::Zero(blocks * block_size, n);
  for (int k = 0; k < n; ++k) {
    const AlgebraElement e = AlgebraElement::Unit(n, k);
    const Matrix dTheta = lie_derivative_cocycle(A, e, Theta);
    const Matrix dUpsilon = lie_derivative_momentum_form(A, e, Upsilon);
    stacked.col(k).segment(0, block_size) = dTheta.reshaped();
    stacked.col(k).segment(block_size, block_size) = dUpsilon.reshaped();
    if (inertia)
      stacked.col(k).segment(2 * block_size, block_size) =
          lie_derivative_momentum_form(A, e, *inertia).reshaped();
  }
  IsotropySubalgebra iso;
  iso.basis = linalg::null_space(stacked);
  iso.closure_residual = closure_residual(A, iso.basis);
  return iso;
}

double closure_residual(const LieAlgebra& A, const Matrix& basis) {
  const Eigen::Index d = basis.cols();
  if (d < 2) return 0.0;
  const Matrix projector = basis * basis.transpose();
  double worst = 0.0;
  for (Eigen::Index i = 0; i < d; ++i)
    for (Eigen::Index j = i + 1; j < d; ++j) {
      const Vector br = A.bracket(basis.col(i), basis.col(j));
      worst = std::max(worst, (br - projector * br).norm());
    }
  return worst;
}

double group_isotropy_check(const LieAlgebra& A, const AlgebraElement& u, double t,
                            const Matrix& Theta, const Matrix& Upsilon) {
  const Matrix Ad = Ad_exp(A, u, t);
  const Matrix AdInv = Ad_exp(A, u, -t);
  const double theta_res = max_abs(Matrix(Ad.transpose() * Theta * Ad - Theta));
  const double upsilon_res = max_abs(Matrix(AdInv * Upsilon * AdInv.transpose() - Upsilon));
  return std::max(theta_res, upsilon_res);
}

}  // namespace liedeform
