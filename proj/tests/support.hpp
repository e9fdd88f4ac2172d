#pragma once

#include "oracles.hpp"

#include "liedeform/common.hpp"
#include "liedeform/lie_core.hpp"

#include <string>

namespace testing {

inline liedeform::Matrix to_eigen(const oracle::Mat& m) {
  liedeform::Matrix out(m.size(), m.empty() ? 0 : m[0].size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m[i].size(); ++j) out(i, j) = m[i][j];
  return out;
}

inline liedeform::Vector to_eigen(const oracle::Vec& v) {
  liedeform::Vector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out(i) = v[i];
  return out;
}

inline oracle::Mat to_mat(const liedeform::Matrix& m) {
  oracle::Mat out(m.rows(), oracle::Vec(m.cols()));
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) out[i][j] = m(i, j);
  return out;
}

inline oracle::Vec to_vec(const liedeform::Vector& v) { return oracle::Vec(v.data(), v.data() + v.size()); }

inline oracle::Cube to_cube(const liedeform::LieAlgebra& A) {
  const int n = A.dim();
  oracle::Cube f = oracle::zeros3(n);
  for (int m = 0; m < n; ++m)
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) f[m][a][b] = A.f(m, a, b);
  return f;
}

inline liedeform::Tensor3 to_tensor(const oracle::Cube& f) {
  const int n = static_cast<int>(f.size());
  liedeform::Tensor3 t(n);
  for (int m = 0; m < n; ++m)
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) t(m, a, b) = f[m][a][b];
  return t;
}

/// so(3) (+) R: e_4 central.
inline liedeform::LieAlgebra so3_plus_r() {
  liedeform::Tensor3 f(4);
  for (int m = 0; m < 3; ++m)
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b) f(m, a, b) = oracle::permutation_sign(m, a, b);
  return liedeform::LieAlgebra("so3+r", std::move(f));
}

inline double max_diff(const liedeform::Matrix& a, const liedeform::Matrix& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

inline std::string source_dir() { return LIEDEFORM_SOURCE_DIR; }

}  // namespace testing
