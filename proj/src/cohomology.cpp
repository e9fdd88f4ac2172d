#include "liedeform/cohomology.hpp"

#include "liedeform/kernels.hpp"
#include "liedeform/linalg.hpp"

#include <cmath>
#include <utility>
#include <vector>

namespace liedeform {

namespace {

struct Pair {
  int a, b;
};
struct Triple {
  int a, b, g;
};

std::vector<Pair> ordered_pairs(int n) {
  std::vector<Pair> out;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) out.push_back({a, b});
  return out;
}

std::vector<Triple> ordered_triples(int n) {
  std::vector<Triple> out;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int g = b + 1; g < n; ++g) out.push_back({a, b, g});
  return out;
}

void require_square(const LieAlgebra& A, const Matrix& m, const char* what) {
  if (m.rows() != A.dim() || m.cols() != A.dim())
    throw ShapeMismatch(std::string(what) + ": expected " + std::to_string(A.dim()) + "x" +
                        std::to_string(A.dim()) + " matrix");
}

}  // namespace

TwoCocycle::TwoCocycle(Matrix Theta) : Theta_(std::move(Theta)) {
  if (Theta_.rows() != Theta_.cols()) throw ShapeMismatch("Theta must be square");
  const double r = antisymmetry_residual(Theta_);
  if (r > tol::kAntisymmetry)
    throw NotAntisymmetric("Theta is not antisymmetric (residual " + std::to_string(r) + ")");
}

TwoCocycle delta1_scalar(const LieAlgebra& A, const CoalgebraElement& xi) {
  if (xi.size() != A.dim()) throw ShapeMismatch("delta1_scalar: xi has wrong length");
  return TwoCocycle(-kernels::lie_poisson_block(A.structure_constants(), xi));
}

Tensor3 delta1_vector(const LieAlgebra& A, const OneCochain& theta) {
  require_square(A, theta.theta, "delta1_vector");
  return kernels::delta1_vector(A.structure_constants(), theta.theta);
}

Matrix as_bilinear_form(const OneCochain& theta) { return theta.theta.transpose(); }

ThreeCochainResidual delta2(const LieAlgebra& A, const Matrix& Theta) {
  require_square(A, Theta, "delta2");
  const double r = antisymmetry_residual(Theta);
  if (r > tol::kAntisymmetry)
    throw NotAntisymmetric("delta2: Theta is not antisymmetric (residual " + std::to_string(r) +
                           ")");
  return ThreeCochainResidual{kernels::delta2(A.structure_constants(), Theta)};
}

ThreeCochainResidual delta2(const LieAlgebra& A, const TwoCocycle& Theta) {
  return delta2(A, Theta.matrix());
}

double cocycle_residual(const LieAlgebra& A, const TwoCocycle& Theta) {
  return delta2(A, Theta).max_abs();
}

double cocycle_tolerance(const LieAlgebra& A, const Matrix& Theta) {
  if (A.integer_valued()) return tol::kCocycleAbsolute;
  return tol::kCocycleRelative * std::fmax(1.0, A.scale() * max_abs(Theta));
}

bool is_symplectic_cocycle(const LieAlgebra& A, const OneCochain& theta, double tol) {
  require_square(A, theta.theta, "is_symplectic_cocycle");
  if (antisymmetry_residual(theta.theta) > tol) return false;
  return delta1_vector(A, theta).max_abs() <= tol;
}

bool is_symplectic_cocycle(const LieAlgebra& A, const OneCochain& theta) {
  return is_symplectic_cocycle(A, theta, cocycle_tolerance(A, theta.theta));
}

Matrix coboundary_matrix(const LieAlgebra& A) {
  const auto pairs = ordered_pairs(A.dim());
  Matrix D = Matrix::Zero(static_cast<Eigen::Index>(pairs.size()), A.dim());
  for (std::size_t p = 0; p < pairs.size(); ++p)
    for (int mu = 0; mu < A.dim(); ++mu) D(p, mu) = -A.f(mu, pairs[p].a, pairs[p].b);
  return D;
}

Matrix delta2_matrix(const LieAlgebra& A) {
  const int n = A.dim();
  const auto pairs = ordered_pairs(n);
  const auto triples = ordered_triples(n);
  Matrix D = Matrix::Zero(static_cast<Eigen::Index>(triples.size()),
                          static_cast<Eigen::Index>(pairs.size()));
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    Matrix basis = Matrix::Zero(n, n);
    basis(pairs[p].a, pairs[p].b) = 1.0;
    basis(pairs[p].b, pairs[p].a) = -1.0;
    const Tensor3 image = kernels::delta2(A.structure_constants(), basis);
    for (std::size_t t = 0; t < triples.size(); ++t)
      D(t, p) = image(triples[t].a, triples[t].b, triples[t].g);
  }
  return D;
}

PrimitiveSolution solve_primitive(const LieAlgebra& A, const TwoCocycle& Theta) {
  return solve_primitive(A, Theta, cocycle_tolerance(A, Theta.matrix()));
}

PrimitiveSolution solve_primitive(const LieAlgebra& A, const TwoCocycle& Theta, double cocycle_tol) {
  require_square(A, Theta.matrix(), "solve_primitive");
  const double cocycle = cocycle_residual(A, Theta);
  if (cocycle > cocycle_tol)
    throw NotACocycle("solve_primitive: Theta is not a 2-cocycle (residual " +
                          std::to_string(cocycle) + ")",
                      cocycle);

  const auto pairs = ordered_pairs(A.dim());
  const Matrix D = coboundary_matrix(A);
  Vector rhs(static_cast<Eigen::Index>(pairs.size()));
  for (std::size_t p = 0; p < pairs.size(); ++p) rhs(p) = Theta.matrix()(pairs[p].a, pairs[p].b);

  PrimitiveSolution sol;
  sol.xi = pairs.empty() ? Vector::Zero(A.dim()) : linalg::min_norm_solve(D, rhs);
  sol.kernel_dim = A.dim() - linalg::numerical_rank(D);
  sol.residual = max_abs(Matrix(Theta.matrix() - delta1_scalar(A, sol.xi).matrix()));
  if (sol.residual > tol::kExactRelative * max_abs(Theta.matrix()))
    throw NotExact("solve_primitive: Theta is not a coboundary (residual " +
                       std::to_string(sol.residual) + ")",
                   sol.residual);
  return sol;
}

CohomologyDimensions cohomology_dimensions(const LieAlgebra& A) {
  const int n = A.dim();
  const int pair_count = n * (n - 1) / 2;
  CohomologyDimensions d;
  d.z2 = pair_count - linalg::numerical_rank(delta2_matrix(A));
  const Matrix D1 = coboundary_matrix(A);
  d.b2 = linalg::numerical_rank(D1);
  d.h2 = d.z2 - d.b2;
  // [g, g] is spanned by the bracket columns f[.][a][b], i.e. the rows of D1 up to sign.
  d.h1 = n - linalg::numerical_rank(Matrix(D1.transpose()));
  return d;
}

}  // namespace liedeform
