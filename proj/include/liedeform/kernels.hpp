#pragma once

// Contraction kernels over the structure-constant tensor f[mu][alpha][beta].
//
// Two implementations share one signature set:
//   kernels::   OpenMP-parallel over the outermost free index
//   reference:: plain serial loops, kept as the oracle for the parallel path
//
// Index convention: [e_alpha, e_beta] = e_mu f[mu][alpha][beta].

#include "liedeform/common.hpp"
#include "liedeform/tensor.hpp"

namespace liedeform {

namespace kernels {

/// max |f[m][a][b] + f[m][b][a]|
double antisymmetry_residual(const Tensor3& f);

/// max over (m, a, b, g) of |sum_k f[m][a][k] f[k][b][g] + cyclic(a, b, g)|
double jacobi_residual(const Tensor3& f);

/// B_ab = sum_{m,n} f[m][a][n] f[n][b][m]
Matrix killing_form(const Tensor3& f);

/// C0_ab = sum_m pi_m f[m][a][b]
Matrix lie_poisson_block(const Tensor3& f, const Vector& pi);

/// out[a][b][g] = -T_kg f[k][a][b] + T_kb f[k][a][g] - T_ka f[k][b][g]
Tensor3 delta2(const Tensor3& f, const Matrix& Theta);

/// out[a][m][n] = <(d1 theta)(e_m, e_n) | e_a>
///              = -theta_{k,n} f[k][m][a] + theta_{k,m} f[k][n][a] - theta_{a,k} f[k][m][n]
Tensor3 delta1_vector(const Tensor3& f, const Matrix& theta);

int thread_count();

}  // namespace kernels

namespace reference {

double antisymmetry_residual(const Tensor3& f);
double jacobi_residual(const Tensor3& f);
Matrix killing_form(const Tensor3& f);
Matrix lie_poisson_block(const Tensor3& f, const Vector& pi);
Tensor3 delta2(const Tensor3& f, const Matrix& Theta);
Tensor3 delta1_vector(const Tensor3& f, const Matrix& theta);

}  // namespace reference

}  // namespace liedeform
