#include "liedeform/registry.hpp"

#include <charconv>

namespace liedeform::registry {

namespace {

void set_bracket(Tensor3& f, int a, int b, int mu, double value) {
  f(mu, a, b) = value;
  f(mu, b, a) = -value;
}

double levi_civita(int i, int j, int k) {
  return static_cast<double>((i - j) * (j - k) * (k - i)) / 2.0;
}

}  // namespace

LieAlgebra abelian(int n) { return LieAlgebra("abelian" + std::to_string(n), Tensor3(n)); }

LieAlgebra so3() {
  Tensor3 f(3);
  for (int m = 0; m < 3; ++m)
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b) f(m, a, b) = levi_civita(m, a, b);
  return LieAlgebra("so3", std::move(f));
}

LieAlgebra sl2() {
  Tensor3 f(3);
  set_bracket(f, 0, 1, 1, 2.0);
  set_bracket(f, 0, 2, 2, -2.0);
  set_bracket(f, 1, 2, 0, 1.0);
  return LieAlgebra("sl2", std::move(f));
}

LieAlgebra heisenberg() {
  Tensor3 f(3);
  set_bracket(f, 0, 1, 2, 1.0);
  return LieAlgebra("heisenberg", std::move(f));
}

LieAlgebra se2() {
  Tensor3 f(3);
  set_bracket(f, 0, 1, 2, 1.0);
  set_bracket(f, 0, 2, 1, -1.0);
  return LieAlgebra("se2", std::move(f));
}

std::vector<LieAlgebra> all() { return {abelian(3), so3(), sl2(), heisenberg(), se2()}; }

std::optional<LieAlgebra> builtin(const std::string& name) {
  if (name == "so3") return so3();
  if (name == "sl2") return sl2();
  if (name == "heisenberg" || name == "h3") return heisenberg();
  if (name == "se2") return se2();
  std::string digits;
  if (name.starts_with("abelian:")) digits = name.substr(8);
  else if (name.starts_with("abelian")) digits = name.substr(7);
  else if (name.size() > 1 && name[0] == 'r') digits = name.substr(1);
  if (digits.empty()) return std::nullopt;
  int n = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
  if (ec != std::errc{} || ptr != digits.data() + digits.size() || n <= 0) return std::nullopt;
  return abelian(n);
}

std::vector<Matrix> so3_defining_rep() {
  std::vector<Matrix> rep(3, Matrix::Zero(3, 3));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) rep[i](j, k) = -levi_civita(i, j, k);
  return rep;
}

}  // namespace liedeform::registry
