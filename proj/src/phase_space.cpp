#include "liedeform/phase_space.hpp"

#include "liedeform/kernels.hpp"
#include "liedeform/linalg.hpp"

#include <utility>

namespace liedeform {

namespace {

void require_length(const DeformedStructure& S, const CoalgebraElement& pi, const char* what) {
  if (pi.size() != S.dim())
    throw ShapeMismatch(std::string(what) + ": pi has length " + std::to_string(pi.size()) +
                        ", expected " + std::to_string(S.dim()));
}

}  // namespace

MomentumTwoForm::MomentumTwoForm(Matrix Upsilon) : Upsilon_(std::move(Upsilon)) {
  if (Upsilon_.rows() != Upsilon_.cols()) throw ShapeMismatch("Upsilon must be square");
  const double r = antisymmetry_residual(Upsilon_);
  if (r > tol::kAntisymmetry)
    throw NotAntisymmetric("Upsilon is not antisymmetric (residual " + std::to_string(r) + ")");
}

DeformedStructure::DeformedStructure(LieAlgebra algebra, TwoCocycle Theta, MomentumTwoForm Upsilon,
                                     std::optional<double> cocycle_tol)
    : algebra_(std::move(algebra)), Theta_(std::move(Theta)), Upsilon_(std::move(Upsilon)) {
  const int n = algebra_.dim();
  if (Theta_.dim() != n) throw ShapeMismatch("Theta dimension differs from algebra dimension");
  if (Upsilon_.matrix().rows() != n)
    throw ShapeMismatch("Upsilon dimension differs from algebra dimension");
  const double r = cocycle_residual(algebra_, Theta_);
  if (r > cocycle_tol.value_or(cocycle_tolerance(algebra_, Theta_.matrix())))
    throw NotACocycle("Theta fails the 2-cocycle condition (residual " + std::to_string(r) + ")",
                      r);
}

DeformedStructure DeformedStructure::canonical(LieAlgebra algebra) {
  const int n = algebra.dim();
  return DeformedStructure(std::move(algebra), TwoCocycle::zero(n), MomentumTwoForm::zero(n));
}

Matrix frame_block(const DeformedStructure& S, const CoalgebraElement& pi) {
  require_length(S, pi, "frame_block");
  return kernels::lie_poisson_block(S.algebra().structure_constants(), pi) + S.Theta().matrix();
}

DeformedOmega omega_matrix(const DeformedStructure& S, const CoalgebraElement& pi) {
  const int n = S.dim();
  Matrix M(2 * n, 2 * n);
  M.topLeftCorner(n, n) = frame_block(S, pi);
  M.topRightCorner(n, n) = Matrix::Identity(n, n);
  M.bottomLeftCorner(n, n) = -Matrix::Identity(n, n);
  M.bottomRightCorner(n, n) = S.Upsilon().matrix();
  return DeformedOmega{std::move(M)};
}

Degeneracy degeneracy(const DeformedStructure& S, const CoalgebraElement& pi) {
  const Matrix M = omega_matrix(S, pi).M;
  Degeneracy d;
  d.kernel = linalg::null_space(M);
  d.nullity = static_cast<int>(d.kernel.cols());
  d.rank = static_cast<int>(M.cols()) - d.nullity;
  return d;
}

int reduced_nullity(const DeformedStructure& S, const CoalgebraElement& pi) {
  const int n = S.dim();
  const Matrix reduced = Matrix::Identity(n, n) + S.Upsilon().matrix() * frame_block(S, pi);
  return n - linalg::numerical_rank(reduced);
}

Matrix poisson_tensor(const DeformedStructure& S, const CoalgebraElement& pi) {
  Degeneracy d = degeneracy(S, pi);
  if (d.nullity > 0)
    throw DegenerateForm("omega is degenerate (nullity " + std::to_string(d.nullity) + ")",
                         std::move(d.kernel));
  const Matrix M = omega_matrix(S, pi).M;
  Matrix P = M.partialPivLu().inverse();
  // The inverse of an antisymmetric matrix is antisymmetric; remove roundoff asymmetry.
  return 0.5 * (P - P.transpose());
}

double closedness_residual(const DeformedStructure& S) {
  return cocycle_residual(S.algebra(), S.Theta());
}

DarbouxShift darboux_shift(const DeformedStructure& S, const CoalgebraElement& pi) {
  require_length(S, pi, "darboux_shift");
  if (!S.Upsilon().is_zero())
    throw UpsilonPresent("darboux_shift requires Upsilon = 0");
  PrimitiveSolution sol = solve_primitive(S.algebra(), S.Theta());
  return DarbouxShift{pi - sol.xi, std::move(sol.xi)};
}

}  // namespace liedeform
