#pragma once

#include "liedeform/lie_core.hpp"

#include <optional>
#include <string>
#include <vector>

namespace liedeform::registry {

LieAlgebra abelian(int n);
/// [e_i, e_j] = eps_ijk e_k
LieAlgebra so3();
/// basis (h, e, f): [h,e] = 2e, [h,f] = -2f, [e,f] = h
LieAlgebra sl2();
/// [e_1, e_2] = e_3
LieAlgebra heisenberg();
/// basis (J, P1, P2): [J,P1] = P2, [J,P2] = -P1
LieAlgebra se2();

/// The benchmark set: abelian R^3, so(3), sl(2,R), h3, se(2).
std::vector<LieAlgebra> all();

/// Accepts "so3", "sl2", "heisenberg" (or "h3"), "se2", "abelian:N" / "rN".
std::optional<LieAlgebra> builtin(const std::string& name);

/// Defining 3x3 representation of so(3): (L_i)_jk = -eps_ijk.
std::vector<Matrix> so3_defining_rep();

}  // namespace liedeform::registry
