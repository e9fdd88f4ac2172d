#pragma once

#include "liedeform/common.hpp"

namespace liedeform::linalg {

/// Singular values below rel * sigma_max count as zero. A zero matrix has rank 0.
int numerical_rank(const Matrix& m, double rel = tol::kRankRelative);

/// Orthonormal basis (columns) of the right null space of m under the same
/// threshold as numerical_rank.
Matrix null_space(const Matrix& m, double rel = tol::kRankRelative);

/// Minimal-norm least-squares solution of m x = rhs.
Vector min_norm_solve(const Matrix& m, const Vector& rhs, double rel = tol::kRankRelative);

/// Matrix exponential (Pade approximant with scaling and squaring).
Matrix expm(const Matrix& a);

}  // namespace liedeform::linalg
