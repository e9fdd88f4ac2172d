#pragma once

#include <Eigen/Dense>

#include <stdexcept>
#include <string>
#include <vector>

namespace liedeform {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

// u^alpha in the basis {e_alpha}
using AlgebraElement = Eigen::VectorXd;
// pi_mu in the dual basis {eps^mu}
using CoalgebraElement = Eigen::VectorXd;

namespace tol {
inline constexpr double kAlgebraAxioms = 1e-12;
inline constexpr double kSemisimpleRelative = 1e-9;
inline constexpr double kCocycleAbsolute = 1e-12;
inline constexpr double kCocycleRelative = 1e-9;
inline constexpr double kExactRelative = 1e-9;
inline constexpr double kAntisymmetry = 1e-12;
inline constexpr double kRankRelative = 1e-10;
}  // namespace tol

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ShapeMismatch : public Error {
 public:
  using Error::Error;
};

class InvalidAlgebra : public Error {
 public:
  using Error::Error;
};

class NotAntisymmetric : public Error {
 public:
  using Error::Error;
};

class NotACocycle : public Error {
 public:
  NotACocycle(const std::string& what, double residual)
      : Error(what), residual_(residual) {}
  double residual() const { return residual_; }

 private:
  double residual_;
};

class NotExact : public Error {
 public:
  NotExact(const std::string& what, double residual)
      : Error(what), residual_(residual) {}
  double residual() const { return residual_; }

 private:
  double residual_;
};

/// Thrown when the two-form has a kernel where an inverse is required.
/// The kernel basis (columns, in the 2N frame) is carried along.
class DegenerateForm : public Error {
 public:
  DegenerateForm(const std::string& what, Matrix kernel)
      : Error(what), kernel_(std::move(kernel)) {}
  const Matrix& kernel() const { return kernel_; }

 private:
  Matrix kernel_;
};

class UpsilonPresent : public Error {
 public:
  using Error::Error;
};

class StepRejected : public Error {
 public:
  using Error::Error;
};

/// Input file or flag could not be parsed. `where` names file and location.
class ParseError : public Error {
 public:
  ParseError(const std::string& where, const std::string& what)
      : Error(where + ": " + what), where_(where) {}
  const std::string& where() const { return where_; }

 private:
  std::string where_;
};

inline double max_abs(const Matrix& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

inline double max_abs(const Vector& v) {
  return v.size() == 0 ? 0.0 : v.cwiseAbs().maxCoeff();
}

inline double antisymmetry_residual(const Matrix& m) {
  return max_abs(Matrix(m + m.transpose()));
}

}  // namespace liedeform
