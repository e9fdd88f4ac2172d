#pragma once

#include "liedeform/common.hpp"
#include "liedeform/tensor.hpp"

#include <string>
#include <vector>

namespace liedeform {

/// Nested array as read from a spec file; not necessarily cubic.
using NestedArray3 = std::vector<std::vector<std::vector<double>>>;

struct ValidationReport {
  int dim = 0;
  double antisymmetry_residual = 0.0;
  double jacobi_residual = 0.0;
  bool accepted = false;
};

/// Checks bracket antisymmetry and the Jacobi identity.
/// Throws ShapeMismatch unless the input is N x N x N with N >= 1.
ValidationReport validate_algebra(const NestedArray3& f);
ValidationReport validate_algebra(const Tensor3& f);

Tensor3 to_tensor(const NestedArray3& f);

/// Finite-dimensional real Lie algebra given by structure constants
/// f[mu][alpha][beta], meaning [e_alpha, e_beta] = e_mu f[mu][alpha][beta].
///
/// Construction validates; an instance always satisfies the bracket axioms.
class LieAlgebra {
 public:
  /// Throws InvalidAlgebra when either residual exceeds `axiom_tol`.
  LieAlgebra(std::string name, Tensor3 f, double axiom_tol = tol::kAlgebraAxioms);

  const std::string& name() const { return name_; }
  int dim() const { return f_.dim(); }
  double f(int mu, int alpha, int beta) const { return f_(mu, alpha, beta); }
  const Tensor3& structure_constants() const { return f_; }
  const ValidationReport& report() const { return report_; }

  /// True when every structure constant is an exact integer.
  bool integer_valued() const { return integer_valued_; }

  /// max |f|
  double scale() const { return scale_; }

  AlgebraElement bracket(const AlgebraElement& u, const AlgebraElement& v) const;

 private:
  std::string name_;
  Tensor3 f_;
  ValidationReport report_;
  bool integer_valued_ = true;
  double scale_ = 0.0;
};

/// Symmetric N x N matrix B_ab = tr(ad_a ad_b).
struct KillingForm {
  Matrix B;
};

KillingForm killing_form(const LieAlgebra& A);

/// Cartan's criterion: |det B| > tol * (max |B|)^N. A zero Killing form is never semisimple.
bool is_semisimple(const LieAlgebra& A, double tol = tol::kSemisimpleRelative);

/// (ad_u)^mu_nu = sum_k f[mu][k][nu] u^k, so ad_u v = [u, v].
Matrix ad_matrix(const LieAlgebra& A, const AlgebraElement& u);

/// Ad(exp(t u)) = exp(t ad_u).
Matrix Ad_exp(const LieAlgebra& A, const AlgebraElement& u, double t);

/// K(exp(t u)) = Ad(exp(-t u))^T, acting on body/space momenta.
Matrix coadjoint_matrix(const LieAlgebra& A, const AlgebraElement& u, double t);

}  // namespace liedeform
