#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

namespace liedeform {

/// Dense cubic rank-3 array, row-major: (i, j, k) -> data[(i*n + j)*n + k].
class Tensor3 {
 public:
  Tensor3() = default;
  explicit Tensor3(int n) : n_(n), data_(static_cast<std::size_t>(n) * n * n, 0.0) {}

  int dim() const { return n_; }

  double& operator()(int i, int j, int k) { return data_[index(i, j, k)]; }
  double operator()(int i, int j, int k) const { return data_[index(i, j, k)]; }

  std::span<const double> data() const { return data_; }
  std::span<double> data() { return data_; }

  double max_abs() const {
    double m = 0.0;
    for (double x : data_) m = std::fmax(m, std::fabs(x));
    return m;
  }

  friend bool operator==(const Tensor3&, const Tensor3&) = default;

 private:
  std::size_t index(int i, int j, int k) const {
    return (static_cast<std::size_t>(i) * n_ + j) * n_ + k;
  }

  int n_ = 0;
  std::vector<double> data_;
};

inline double max_abs_difference(const Tensor3& a, const Tensor3& b) {
  double m = 0.0;
  auto x = a.data();
  auto y = b.data();
  for (std::size_t i = 0; i < x.size(); ++i) m = std::fmax(m, std::fabs(x[i] - y[i]));
  return m;
}

}  // namespace liedeform
