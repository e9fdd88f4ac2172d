#include "liedeform/linalg.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <cmath>

namespace liedeform::linalg {

namespace {

Eigen::JacobiSVD<Matrix> svd_of(const Matrix& m, unsigned options) {
  return Eigen::JacobiSVD<Matrix>(m, options);
}

int rank_from(const Vector& sigma, double rel) {
  if (sigma.size() == 0 || sigma(0) == 0.0) return 0;
  const double cut = rel * sigma(0);
  int r = 0;
  for (Eigen::Index i = 0; i < sigma.size(); ++i)
    if (sigma(i) > cut) ++r;
  return r;
}

}  // namespace

int numerical_rank(const Matrix& m, double rel) {
  if (m.size() == 0) return 0;
  return rank_from(svd_of(m, 0).singularValues(), rel);
}

Matrix null_space(const Matrix& m, double rel) {
  const Eigen::Index cols = m.cols();
  if (m.rows() == 0) return Matrix::Identity(cols, cols);
  auto svd = svd_of(m, Eigen::ComputeFullV);
  const int r = rank_from(svd.singularValues(), rel);
  return svd.matrixV().rightCols(cols - r);
}

Vector min_norm_solve(const Matrix& m, const Vector& rhs, double rel) {
  auto svd = svd_of(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const Vector& s = svd.singularValues();
  const int r = rank_from(s, rel);
  Vector coeffs = svd.matrixU().leftCols(r).transpose() * rhs;
  for (int i = 0; i < r; ++i) coeffs(i) /= s(i);
  return svd.matrixV().leftCols(r) * coeffs;
}

Matrix expm(const Matrix& a) { return a.exp(); }

}  // namespace liedeform::linalg
