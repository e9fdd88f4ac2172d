#include <doctest.h>

#include "support.hpp"

#include "liedeform/cohomology.hpp"
#include "liedeform/registry.hpp"
#include "liedeform/symmetry.hpp"

using namespace liedeform;
using testing::max_diff;

namespace {

/// Component of the basis orthogonal to e_k, as a fraction of the column norm.
double off_axis(const Matrix& basis, int k) {
  double worst = 0.0;
  for (Eigen::Index c = 0; c < basis.cols(); ++c) {
    Vector v = basis.col(c);
    v(k) = 0.0;
    worst = std::max(worst, v.norm() / basis.col(c).norm());
  }
  return worst;
}

}  // namespace

TEST_CASE("zero data is invariant under the whole algebra") {
  for (const auto& A : registry::all()) {
    const int n = A.dim();
    const IsotropySubalgebra iso = isotropy_subalgebra(A, Matrix::Zero(n, n), Matrix::Zero(n, n));
    CHECK(iso.dimension() == n);
    CHECK(iso.closure_residual < 1e-12);
  }
}

TEST_CASE("so(3) with Theta from xi = e3 keeps only rotations about e3") {
  const LieAlgebra A = registry::so3();
  const Matrix Theta = delta1_scalar(A, Vector::Unit(3, 2)).matrix();
  const IsotropySubalgebra iso = isotropy_subalgebra(A, Theta, Matrix::Zero(3, 3));
  REQUIRE(iso.dimension() == 1);
  CHECK(off_axis(iso.basis, 2) < 1e-12);
  CHECK(iso.closure_residual < 1e-9);
  for (double t = -5.0; t <= 5.0; t += 0.5)
    CHECK(group_isotropy_check(A, Vector::Unit(3, 2), t, Theta, Matrix::Zero(3, 3)) < 1e-12);
  CHECK(group_isotropy_check(A, Vector::Unit(3, 0), 1.0, Theta, Matrix::Zero(3, 3)) > 0.1);
}

TEST_CASE("a generic inertia breaks the remaining symmetry") {
  const LieAlgebra A = registry::so3();
  const Matrix Theta = delta1_scalar(A, Vector::Unit(3, 2)).matrix();
  Matrix sym = Vector(Eigen::Vector3d(1.0, 1.0, 2.0)).asDiagonal();
  CHECK(isotropy_subalgebra(A, Theta, Matrix::Zero(3, 3), sym).dimension() == 1);
  Matrix generic = Vector(Eigen::Vector3d(1.0, 2.0, 3.0)).asDiagonal();
  CHECK(isotropy_subalgebra(A, Theta, Matrix::Zero(3, 3), generic).dimension() == 0);
}

TEST_CASE("Upsilon alone on so(3) is invariant under its own axis") {
  const LieAlgebra A = registry::so3();
  Matrix U = Matrix::Zero(3, 3);
  U(0, 1) = 0.7;
  U(1, 0) = -0.7;
  const IsotropySubalgebra iso = isotropy_subalgebra(A, Matrix::Zero(3, 3), U);
  REQUIRE(iso.dimension() == 1);
  CHECK(off_axis(iso.basis, 2) < 1e-12);
  CHECK(group_isotropy_check(A, Vector::Unit(3, 2), 2.3, Matrix::Zero(3, 3), U) < 1e-12);
}

TEST_CASE("Lie derivatives are the derivatives of the group action") {
  oracle::Rng rng(31);
  for (const auto& A : registry::all()) {
    CAPTURE(A.name());
    const int n = A.dim();
    const Vector u = testing::to_eigen(rng.vec(n));
    const Matrix T = testing::to_eigen(rng.antisymmetric(n));
    const double eps = 1e-5;
    auto pull = [&](double t) {
      const Matrix a = Ad_exp(A, u, t);
      return Matrix(a.transpose() * T * a);
    };
    auto push = [&](double t) {
      const Matrix a = Ad_exp(A, u, -t);
      return Matrix(a * T * a.transpose());
    };
    const Matrix dpull = (pull(eps) - pull(-eps)) / (2 * eps);
    const Matrix dpush = (push(eps) - push(-eps)) / (2 * eps);
    CHECK(max_diff(dpull, lie_derivative_cocycle(A, u, T)) < 1e-8);
    CHECK(max_diff(dpush, lie_derivative_momentum_form(A, u, T)) < 1e-8);
  }
}

TEST_CASE("isotropy of exact cocycles is the coadjoint stabiliser of xi") {
  oracle::Rng rng(8);
  const LieAlgebra A = registry::sl2();
  for (int s = 0; s < 10; ++s) {
    const Vector xi = testing::to_eigen(rng.vec(3));
    const IsotropySubalgebra iso =
        isotropy_subalgebra(A, delta1_scalar(A, xi).matrix(), Matrix::Zero(3, 3));
    CHECK(iso.dimension() == 1);
    CHECK(iso.closure_residual < 1e-9);
    // ad_b^T xi = 0 for stabilising b
    const Vector b = iso.basis.col(0);
    CHECK((ad_matrix(A, b).transpose() * xi).cwiseAbs().maxCoeff() < 1e-10);
  }
}

TEST_CASE("closure residual detects a non-subalgebra") {
  const LieAlgebra A = registry::so3();
  Matrix plane(3, 2);
  plane << 1, 0, 0, 1, 0, 0;
  CHECK(closure_residual(A, plane) == doctest::Approx(1.0));
  CHECK(closure_residual(A, Matrix(Vector::Unit(3, 1))) == 0.0);
}
