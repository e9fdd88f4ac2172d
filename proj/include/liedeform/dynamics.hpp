#pragma once

#include "liedeform/common.hpp"
#include "liedeform/phase_space.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace liedeform {

/// Symmetric positive-definite I^{mu nu}, mapping body momentum to body velocity.
class InertiaTensor {
 public:
  /// Throws Error unless symmetric (1e-12) with all eigenvalues > 0.
  explicit InertiaTensor(Matrix I_inv);
  static InertiaTensor diagonal(const Vector& d);

  const Matrix& matrix() const { return I_inv_; }
  int dim() const { return static_cast<int>(I_inv_.rows()); }

 private:
  Matrix I_inv_;
};

/// H = 1/2 pi^T I pi
double hamiltonian(const InertiaTensor& I, const CoalgebraElement& pi);

struct VectorField {
  AlgebraElement eta;        // body velocity, frame component of zeta
  CoalgebraElement pi_dot;
};

/// Solves M zeta = -dH, dH = (0, I pi), through the reduced system
///   (I_N + C(pi) Upsilon) pi_dot = -C(pi) I pi,   eta = I pi + Upsilon pi_dot.
/// With Theta = Upsilon = 0 on so(3) this is Euler's pi_dot = pi x (I pi).
/// Throws DegenerateForm when omega is degenerate at pi.
VectorField hamiltonian_vector_field(const DeformedStructure& S, const InertiaTensor& I,
                                     const CoalgebraElement& pi);

/// Same field from a direct 2N x 2N solve of M zeta = -dH. Used to cross-check the reduced form.
VectorField hamiltonian_vector_field_full(const DeformedStructure& S, const InertiaTensor& I,
                                          const CoalgebraElement& pi);

/// Matrix representation rho(e_alpha) of the algebra, used to carry a group element along.
struct Representation {
  std::vector<Matrix> generators;
  /// Reproject g onto O(d) after every step (polar factor).
  bool orthogonal = false;
};

/// max |[rho_a, rho_b] - f[mu][a][b] rho_mu|. Throws ShapeMismatch on bad sizes.
double representation_residual(const LieAlgebra& A, const Representation& rep);

struct PhaseState {
  CoalgebraElement pi;
  std::optional<Matrix> g;
};

struct Observable {
  std::string name;
  std::function<double(const PhaseState&)> eval;
};

struct Channel {
  std::string name;
  std::vector<double> values;

  /// max |value(t) - value(0)|
  double drift() const;
};

struct Trajectory {
  std::vector<double> times;
  std::vector<PhaseState> states;
  std::vector<Channel> monitors;
  /// Set when omega became degenerate; the trajectory stops at the last good state.
  std::optional<double> degenerate_at;
  std::string diagnostic;

  const Channel* channel(const std::string& name) const;
};

struct IntegrationOptions {
  double T = 10.0;
  double dt = 1e-3;
  std::optional<Representation> representation;
  std::optional<Matrix> g0;
  std::vector<Observable> observables;
};

/// Classical RK4 on pi (and g, when a representation is supplied, with g_dot = g rho(eta)).
///
/// Monitor channels:
///   energy                 always
///   casimir                semisimple algebra and Upsilon = 0: Killing quadratic of pi - xi
///   orthogonality_defect   orthogonal representation supplied
///   <observable names>     as given
///
/// Throws StepRejected when a state becomes non-finite.
Trajectory integrate(const DeformedStructure& S, const InertiaTensor& I, const CoalgebraElement& pi0,
                     const IntegrationOptions& options);

/// pi_dot = pi x (I pi) by cross product; so(3) only. Oracle for `integrate`.
Trajectory euler_reference(const InertiaTensor& I, const CoalgebraElement& pi0, double T, double dt);

/// Observables <pi, b_i> for the columns of an isotropy basis, named iso_0, iso_1, ...
std::vector<Observable> isotropy_observables(const Matrix& basis);

}  // namespace liedeform
