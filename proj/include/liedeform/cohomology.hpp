#pragma once

#include "liedeform/common.hpp"
#include "liedeform/lie_core.hpp"
#include "liedeform/tensor.hpp"

namespace liedeform {

/// Linear map theta: g -> g*, stored as theta(alpha, mu) = <theta(e_mu) | e_alpha>.
struct OneCochain {
  Matrix theta;
};

/// Antisymmetric scalar 2-cochain Theta_ab. The constructor enforces
/// antisymmetry; membership in Z^2 is checked where it matters.
class TwoCocycle {
 public:
  TwoCocycle() = default;
  /// Throws NotAntisymmetric when |Theta + Theta^T| > tol::kAntisymmetry.
  explicit TwoCocycle(Matrix Theta);

  static TwoCocycle zero(int n) { return TwoCocycle(Matrix::Zero(n, n)); }

  const Matrix& matrix() const { return Theta_; }
  int dim() const { return static_cast<int>(Theta_.rows()); }

 private:
  Matrix Theta_;
};

/// delta2 Theta evaluated on basis triples; totally antisymmetric.
struct ThreeCochainResidual {
  Tensor3 T;
  double max_abs() const { return T.max_abs(); }
};

struct PrimitiveSolution {
  CoalgebraElement xi;
  double residual = 0.0;  // max |Theta - delta1(xi)|
  int kernel_dim = 0;     // dim ker(xi -> delta1 xi); 0 for semisimple algebras
};

struct CohomologyDimensions {
  int z2 = 0;
  int b2 = 0;
  int h2 = 0;
  int h1 = 0;
};

/// Theta_ab = -sum_mu xi_mu f[mu][a][b]; always a cocycle.
TwoCocycle delta1_scalar(const LieAlgebra& A, const CoalgebraElement& xi);

/// Coboundary of a g*-valued 1-cochain under the coadjoint action:
///   <(d1 theta)(u, v) | w> = -<theta(v)|[u,w]> + <theta(u)|[v,w]> - <theta([u,v])|w>
/// Component out(a, m, n) is the pairing with u = e_m, v = e_n, w = e_a.
Tensor3 delta1_vector(const LieAlgebra& A, const OneCochain& theta);

/// The bilinear form (u, v) -> <theta(u) | v>, as a matrix indexed (u, v).
/// For antisymmetric theta, delta2(as_bilinear_form(theta))(m, n, a) equals
/// delta1_vector(theta)(a, m, n) entrywise.
Matrix as_bilinear_form(const OneCochain& theta);

/// (delta2 Theta)_abg = -Theta_kg f[k][a][b] + Theta_kb f[k][a][g] - Theta_ka f[k][b][g].
/// Throws NotAntisymmetric if Theta fails antisymmetry at tol::kAntisymmetry.
ThreeCochainResidual delta2(const LieAlgebra& A, const Matrix& Theta);
ThreeCochainResidual delta2(const LieAlgebra& A, const TwoCocycle& Theta);

/// max |delta2 Theta|
double cocycle_residual(const LieAlgebra& A, const TwoCocycle& Theta);

/// Admission threshold for "vanishing" coboundaries: 1e-12 absolute on
/// integer-valued algebras, otherwise 1e-9 relative to max|f| * max|Theta|.
double cocycle_tolerance(const LieAlgebra& A, const Matrix& Theta);

bool is_symplectic_cocycle(const LieAlgebra& A, const OneCochain& theta, double tol);
bool is_symplectic_cocycle(const LieAlgebra& A, const OneCochain& theta);

/// Minimal-norm xi with delta1(xi) = Theta.
/// Throws NotACocycle if Theta is not in Z^2, NotExact if the residual
/// exceeds 1e-9 * max|Theta|.
PrimitiveSolution solve_primitive(const LieAlgebra& A, const TwoCocycle& Theta);
PrimitiveSolution solve_primitive(const LieAlgebra& A, const TwoCocycle& Theta, double cocycle_tol);

/// Ranks of the coboundary maps on the antisymmetric (alpha < beta) flattening.
CohomologyDimensions cohomology_dimensions(const LieAlgebra& A);

/// Matrix of xi -> delta1(xi) restricted to pairs alpha < beta (rows) over mu (cols).
Matrix coboundary_matrix(const LieAlgebra& A);

/// Matrix of Theta -> delta2(Theta): rows are triples a < b < g, columns pairs a < b.
Matrix delta2_matrix(const LieAlgebra& A);

}  // namespace liedeform
