#pragma once

#include "liedeform/cohomology.hpp"
#include "liedeform/common.hpp"
#include "liedeform/lie_core.hpp"

#include <optional>

namespace liedeform {

/// Constant antisymmetric bivector Upsilon^{mu nu} on the momentum fibre.
class MomentumTwoForm {
 public:
  MomentumTwoForm() = default;
  /// Throws NotAntisymmetric when |Upsilon + Upsilon^T| > tol::kAntisymmetry.
  explicit MomentumTwoForm(Matrix Upsilon);

  static MomentumTwoForm zero(int n) { return MomentumTwoForm(Matrix::Zero(n, n)); }

  const Matrix& matrix() const { return Upsilon_; }
  bool is_zero() const { return Upsilon_.size() == 0 || max_abs(Upsilon_) == 0.0; }

 private:
  Matrix Upsilon_;
};

/// omega_L = omega_0 + Theta~_L + Upsilon~_L on T*G in body coordinates.
///
/// Construction checks that every array matches the algebra dimension and
/// that Theta is a 2-cocycle, which is exactly the closedness condition of
/// omega_L for constant Upsilon.
class DeformedStructure {
 public:
  /// Throws ShapeMismatch, or NotACocycle when the delta2 residual exceeds
  /// `cocycle_tol` (default: cocycle_tolerance()).
  DeformedStructure(LieAlgebra algebra, TwoCocycle Theta, MomentumTwoForm Upsilon,
                    std::optional<double> cocycle_tol = std::nullopt);

  /// Theta = Upsilon = 0.
  static DeformedStructure canonical(LieAlgebra algebra);

  const LieAlgebra& algebra() const { return algebra_; }
  const TwoCocycle& Theta() const { return Theta_; }
  const MomentumTwoForm& Upsilon() const { return Upsilon_; }
  int dim() const { return algebra_.dim(); }

 private:
  LieAlgebra algebra_;
  TwoCocycle Theta_;
  MomentumTwoForm Upsilon_;
};

/// Coefficient matrix of omega in the coframe (eps^1_L .. eps^N_L, dpi_1 .. dpi_N):
///   M = [[C(pi), I], [-I, Upsilon]],  C_ab(pi) = pi_mu f[mu][a][b] + Theta_ab
struct DeformedOmega {
  Matrix M;

  int dim() const { return static_cast<int>(M.rows() / 2); }
  auto frame_block() const { return M.topLeftCorner(dim(), dim()); }
  auto momentum_block() const { return M.bottomRightCorner(dim(), dim()); }
};

struct Degeneracy {
  int rank = 0;
  int nullity = 0;
  Matrix kernel;  // 2N x nullity, orthonormal columns
};

/// C(pi) = pi_mu f[mu][a][b] + Theta_ab.
Matrix frame_block(const DeformedStructure& S, const CoalgebraElement& pi);

DeformedOmega omega_matrix(const DeformedStructure& S, const CoalgebraElement& pi);

/// Rank and kernel of M by SVD thresholding at tol::kRankRelative * sigma_max.
Degeneracy degeneracy(const DeformedStructure& S, const CoalgebraElement& pi);

/// Reduced degeneracy test: (x, y) in ker M  <=>  y = -C x and (I + Upsilon C) x = 0.
int reduced_nullity(const DeformedStructure& S, const CoalgebraElement& pi);

/// Pi = M^{-1}. Throws DegenerateForm (with kernel) when M has a kernel.
Matrix poisson_tensor(const DeformedStructure& S, const CoalgebraElement& pi);

/// max |delta2 Theta|; zero iff omega_L is closed.
double closedness_residual(const DeformedStructure& S);

struct DarbouxShift {
  CoalgebraElement pi_shifted;  // pi - xi
  CoalgebraElement xi;
};

/// For exact Theta = delta1(xi) and Upsilon = 0: C_Theta(pi) = C_0(pi - xi).
/// Throws UpsilonPresent if Upsilon != 0; NotExact propagates from solve_primitive.
DarbouxShift darboux_shift(const DeformedStructure& S, const CoalgebraElement& pi);

}  // namespace liedeform
