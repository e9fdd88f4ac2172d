#pragma once

#include "liedeform/common.hpp"
#include "liedeform/lie_core.hpp"

#include <optional>

namespace liedeform {

/// Connected isotropy of (Theta, Upsilon[, inertia]) under the right action.
struct IsotropySubalgebra {
  Matrix basis;  // N x dimension, orthonormal columns
  double closure_residual = 0.0;

  int dimension() const { return static_cast<int>(basis.cols()); }
};

/// (L_u Theta)_mn = Theta(ad_u e_m, e_n) + Theta(e_m, ad_u e_n) = (ad_u^T Theta + Theta ad_u)_mn.
Matrix lie_derivative_cocycle(const LieAlgebra& A, const AlgebraElement& u, const Matrix& Theta);

/// Contravariant Lie derivative -(ad_u Upsilon + Upsilon ad_u^T).
/// Applies unchanged to the symmetric inverse-inertia tensor.
Matrix lie_derivative_momentum_form(const LieAlgebra& A, const AlgebraElement& u,
                                    const Matrix& Upsilon);

/// Null space of u -> (L_u Theta, L_u Upsilon[, L_u I]) by SVD.
IsotropySubalgebra isotropy_subalgebra(const LieAlgebra& A, const Matrix& Theta,
                                       const Matrix& Upsilon,
                                       const std::optional<Matrix>& inertia = std::nullopt);

/// Largest component of [b_i, b_j] orthogonal to span(basis).
double closure_residual(const LieAlgebra& A, const Matrix& basis);

/// Group-level invariance residual for a = exp(t u):
///   max( |Ad(a)^T Theta Ad(a) - Theta|, |Ad(a^-1) Upsilon Ad(a^-1)^T - Upsilon| ).
double group_isotropy_check(const LieAlgebra& A, const AlgebraElement& u, double t,
                            const Matrix& Theta, const Matrix& Upsilon);

}  // namespace liedeform
