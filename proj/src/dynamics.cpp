#include "liedeform/dynamics.hpp"

#include "liedeform/cohomology.hpp"
#include "liedeform/linalg.hpp"

#include <cmath>
#include <utility>

namespace liedeform {

InertiaTensor::InertiaTensor(Matrix I_inv) : I_inv_(std::move(I_inv)) {
  if (I_inv_.rows() != I_inv_.cols() || I_inv_.rows() == 0)
    throw ShapeMismatch("inertia tensor must be a non-empty square matrix");
  if (max_abs(Matrix(I_inv_ - I_inv_.transpose())) > 1e-12)
    throw Error("inertia tensor is not symmetric");
  Eigen::SelfAdjointEigenSolver<Matrix> eig(I_inv_, Eigen::EigenvaluesOnly);
  if (eig.eigenvalues().minCoeff() <= 0.0) throw Error("inertia tensor is not positive definite");
}

InertiaTensor InertiaTensor::diagonal(const Vector& d) { return InertiaTensor(d.asDiagonal()); }

double hamiltonian(const InertiaTensor& I, const CoalgebraElement& pi) {
  return 0.5 * pi.dot(I.matrix() * pi);
}

VectorField hamiltonian_vector_field(const DeformedStructure& S, const InertiaTensor& I,
                                     const CoalgebraElement& pi) {
  const int n = S.dim();
  if (I.dim() != n) throw ShapeMismatch("inertia dimension differs from algebra dimension");
  const Matrix C = frame_block(S, pi);
  const Vector velocity = I.matrix() * pi;
  VectorField vf;
  if (S.Upsilon().is_zero()) {
    vf.pi_dot = -(C * velocity);
    vf.eta = velocity;
    return vf;
  }
  const Matrix& U = S.Upsilon().matrix();
  const Matrix K = Matrix::Identity(n, n) + C * U;
  if (linalg::numerical_rank(K) < n) {
    Degeneracy d = degeneracy(S, pi);
    throw DegenerateForm("omega is degenerate at this momentum", std::move(d.kernel));
  }
  vf.pi_dot = K.partialPivLu().solve(-(C * velocity));
  vf.eta = velocity + U * vf.pi_dot;
  return vf;
}

VectorField hamiltonian_vector_field_full(const DeformedStructure& S, const InertiaTensor& I,
                                          const CoalgebraElement& pi) {
  const int n = S.dim();
  const Matrix M = omega_matrix(S, pi).M;
  Degeneracy d = degeneracy(S, pi);
  if (d.nullity > 0) throw DegenerateForm("omega is degenerate at this momentum", std::move(d.kernel));
  Vector minus_dH = Vector::Zero(2 * n);
  minus_dH.tail(n) = -(I.matrix() * pi);
  const Vector zeta = M.fullPivLu().solve(minus_dH);
  return VectorField{zeta.head(n), zeta.tail(n)};
}

double representation_residual(const LieAlgebra& A, const Representation& rep) {
  const int n = A.dim();
  if (static_cast<int>(rep.generators.size()) != n)
    throw ShapeMismatch("representation needs one generator per basis element");
  const auto d = rep.generators.front().rows();
  for (const auto& g : rep.generators)
    if (g.rows() != d || g.cols() != d) throw ShapeMismatch("representation generators must be square and equal-sized");
  double worst = 0.0;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      Matrix diff = rep.generators[a] * rep.generators[b] - rep.generators[b] * rep.generators[a];
      for (int m = 0; m < n; ++m) diff -= A.f(m, a, b) * rep.generators[m];
      worst = std::max(worst, max_abs(diff));
    }
  return worst;
}

double Channel::drift() const {
  double worst = 0.0;
  for (double v : values) worst = std::fmax(worst, std::fabs(v - values.front()));
  return worst;
}

const Channel* Trajectory::channel(const std::string& name) const {
  for (const auto& c : monitors)
    if (c.name == name) return &c;
  return nullptr;
}

std::vector<Observable> isotropy_observables(const Matrix& basis) {
  std::vector<Observable> out;
  for (Eigen::Index i = 0; i < basis.cols(); ++i) {
    Vector b = basis.col(i);
    out.push_back({"iso_" + std::to_string(i),
                   [b](const PhaseState& s) { return s.pi.dot(b); }});
  }
  return out;
}

namespace {

Matrix polar_factor(const Matrix& g) {
  Eigen::JacobiSVD<Matrix> svd(g, Eigen::ComputeFullU | Eigen::ComputeFullV);
  return svd.matrixU() * svd.matrixV().transpose();
}

double orthogonality_defect(const Matrix& g) {
  return max_abs(Matrix(g.transpose() * g - Matrix::Identity(g.rows(), g.cols())));
}

bool all_finite(const PhaseState& s) {
  return s.pi.allFinite() && (!s.g || s.g->allFinite());
}

struct Rates {
  Vector pi_dot;
  Matrix g_dot;
};

class Monitors {
 public:
  Monitors(std::vector<Observable> observables) {
    for (auto& o : observables) add(std::move(o));
  }

  void add(Observable o) {
    channels_.push_back({o.name, {}});
    evals_.push_back(std::move(o.eval));
  }

  void sample(const PhaseState& s) {
    for (std::size_t i = 0; i < evals_.size(); ++i) channels_[i].values.push_back(evals_[i](s));
  }

  std::vector<Channel> take() { return std::move(channels_); }

 private:
  std::vector<Channel> channels_;
  std::vector<std::function<double(const PhaseState&)>> evals_;
};

}  // namespace

Trajectory integrate(const DeformedStructure& S, const InertiaTensor& I, const CoalgebraElement& pi0,
                     const IntegrationOptions& options) {
  const int n = S.dim();
  if (pi0.size() != n) throw ShapeMismatch("pi0 has wrong length");
  if (I.dim() != n) throw ShapeMismatch("inertia dimension differs from algebra dimension");
  if (!(options.dt > 0.0) || !(options.T >= 0.0)) throw Error("integrate: need dt > 0 and T >= 0");

  const Representation* rep = options.representation ? &*options.representation : nullptr;
  if (rep) {
    const double r = representation_residual(S.algebra(), *rep);
    if (r > 1e-9) throw Error("representation does not satisfy the bracket relations (residual " +
                              std::to_string(r) + ")");
  }

  Monitors monitors({});
  monitors.add({"energy", [&I](const PhaseState& s) { return hamiltonian(I, s.pi); }});
  if (S.Upsilon().is_zero() && is_semisimple(S.algebra())) {
    const Vector xi = solve_primitive(S.algebra(), S.Theta()).xi;
    const Matrix B_inv = killing_form(S.algebra()).B.inverse();
    monitors.add({"casimir", [xi, B_inv](const PhaseState& s) {
                    const Vector sigma = s.pi - xi;
                    return sigma.dot(B_inv * sigma);
                  }});
  }
  if (rep && rep->orthogonal)
    monitors.add({"orthogonality_defect",
                  [](const PhaseState& s) { return s.g ? orthogonality_defect(*s.g) : 0.0; }});
  for (const auto& o : options.observables) monitors.add(o);

  auto rho = [rep](const Vector& eta) {
    Matrix m = Matrix::Zero(rep->generators.front().rows(), rep->generators.front().cols());
    for (Eigen::Index k = 0; k < eta.size(); ++k) m += eta(k) * rep->generators[k];
    return m;
  };
  auto rates = [&](const Vector& pi, const Matrix* g) {
    VectorField vf = hamiltonian_vector_field(S, I, pi);
    Rates r{std::move(vf.pi_dot), Matrix()};
    if (g) r.g_dot = *g * rho(vf.eta);
    return r;
  };

  PhaseState state{pi0, std::nullopt};
  if (rep) {
    const auto d = rep->generators.front().rows();
    state.g = options.g0 ? *options.g0 : Matrix(Matrix::Identity(d, d));
  }

  Trajectory traj;
  const auto steps = static_cast<long>(std::llround(options.T / options.dt));
  const double h = options.dt;
  traj.times.push_back(0.0);
  traj.states.push_back(state);
  monitors.sample(state);

  for (long k = 0; k < steps; ++k) {
    const double t = static_cast<double>(k) * h;
    try {
      const Matrix* g = state.g ? &*state.g : nullptr;
      const Rates k1 = rates(state.pi, g);
      Matrix g2, g3, g4;
      if (g) g2 = *g + h / 2 * k1.g_dot;
      const Rates k2 = rates(state.pi + h / 2 * k1.pi_dot, g ? &g2 : nullptr);
      if (g) g3 = *g + h / 2 * k2.g_dot;
      const Rates k3 = rates(state.pi + h / 2 * k2.pi_dot, g ? &g3 : nullptr);
      if (g) g4 = *g + h * k3.g_dot;
      const Rates k4 = rates(state.pi + h * k3.pi_dot, g ? &g4 : nullptr);

      PhaseState next;
      next.pi = state.pi + h / 6 * (k1.pi_dot + 2 * k2.pi_dot + 2 * k3.pi_dot + k4.pi_dot);
      if (g) {
        Matrix gn = *g + h / 6 * (k1.g_dot + 2 * k2.g_dot + 2 * k3.g_dot + k4.g_dot);
        next.g = rep->orthogonal ? polar_factor(gn) : gn;
      }
      if (!all_finite(next))
        throw StepRejected("non-finite state at t = " + std::to_string(t + h));
      state = std::move(next);
    } catch (const DegenerateForm& e) {
      traj.degenerate_at = t;
      traj.diagnostic = e.what();
      break;
    }
    traj.times.push_back(static_cast<double>(k + 1) * h);
    traj.states.push_back(state);
    monitors.sample(state);
  }
  traj.monitors = monitors.take();
  return traj;
}

Trajectory euler_reference(const InertiaTensor& I, const CoalgebraElement& pi0, double T, double dt) {
  if (pi0.size() != 3 || I.dim() != 3) throw ShapeMismatch("euler_reference is for so(3) only");
  const Eigen::Matrix3d inertia = I.matrix();
  auto field = [&inertia](const Eigen::Vector3d& p) -> Eigen::Vector3d {
    return p.cross(inertia * p);
  };
  Eigen::Vector3d p = pi0;
  Trajectory traj;
  Channel energy{"energy", {}};
  auto record = [&](double t) {
    traj.times.push_back(t);
    traj.states.push_back({Vector(p), std::nullopt});
    energy.values.push_back(0.5 * p.dot(inertia * p));
  };
  record(0.0);
  const auto steps = static_cast<long>(std::llround(T / dt));
  for (long k = 0; k < steps; ++k) {
    const Eigen::Vector3d k1 = field(p);
    const Eigen::Vector3d k2 = field(p + dt / 2 * k1);
    const Eigen::Vector3d k3 = field(p + dt / 2 * k2);
    const Eigen::Vector3d k4 = field(p + dt * k3);
    p = p + dt / 6 * (k1 + 2 * k2 + 2 * k3 + k4);
    record(static_cast<double>(k + 1) * dt);
  }
  traj.monitors.push_back(std::move(energy));
  return traj;
}

}  // namespace liedeform
