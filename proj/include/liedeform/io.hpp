#pragma once

// Spec-file parsing and report serialization.
//
// Algebra spec:      { "name": string, "dim": N, "f": [[[real; N]; N]; N] }   f[mu][alpha][beta]
// Deformation spec:  { "Theta": NxN | null, "Upsilon": NxN | null, "xi": [N] | null }
// Inertia spec:      { "inertia": NxN }  or a bare NxN array
// Representation:    { "generators": [dxd; N], "orthogonal": bool }

#include "liedeform/common.hpp"
#include "liedeform/dynamics.hpp"
#include "liedeform/lie_core.hpp"
#include "liedeform/phase_space.hpp"

#include <json.hpp>

#include <optional>
#include <string>

namespace liedeform::io {

using Json = nlohmann::ordered_json;

/// Environment variable naming a directory searched for "<name>.json" algebra specs.
inline constexpr const char* kRegistryEnv = "LIEDEFORM_REGISTRY";

std::string read_file(const std::string& path);

/// Parses JSON text; ParseError carries `source` and the byte offset on syntax errors.
Json parse_json(const std::string& text, const std::string& source);

/// The raw content of an algebra spec, before axiom checks.
struct AlgebraSpec {
  std::string name;
  NestedArray3 f;
};

AlgebraSpec parse_algebra_spec(const Json& j, const std::string& source);

/// Validates and builds. Throws InvalidAlgebra / ShapeMismatch.
LieAlgebra build_algebra(const AlgebraSpec& spec, double axiom_tol = tol::kAlgebraAxioms);

/// Resolves `ref` as: an existing file; then "<ref>.json" or "<ref>" under
/// $LIEDEFORM_REGISTRY; then a built-in registry name. Returns the parsed file and
/// the bytes it was read from (empty for built-ins).
struct ResolvedAlgebra {
  AlgebraSpec spec;
  std::string source_text;
};
ResolvedAlgebra resolve_algebra(const std::string& ref);

Json algebra_to_json(const LieAlgebra& A);

struct DeformationSpec {
  std::optional<Matrix> Theta;
  std::optional<Matrix> Upsilon;
  std::optional<Vector> xi;
};

DeformationSpec parse_deformation_spec(const Json& j, int n, const std::string& source);

/// Theta from the deformation file (or delta1(xi) when only xi is given); Upsilon or zero.
/// When both Theta and xi are present they must agree. Throws NotACocycle on mismatch.
struct Deformation {
  TwoCocycle Theta;
  MomentumTwoForm Upsilon;
};
Deformation build_deformation(const LieAlgebra& A, const DeformationSpec& spec);

InertiaTensor parse_inertia_spec(const Json& j, int n, const std::string& source);

/// "diag:a,b,c", "identity", or a path to an inertia spec file.
InertiaTensor parse_inertia_arg(const std::string& arg, int n, std::string* source_text = nullptr);

Representation parse_representation_spec(const Json& j, int n, const std::string& source);

/// "so3-defining" or a path to a representation spec file.
Representation parse_representation_arg(const std::string& arg, const LieAlgebra& A,
                                        std::string* source_text = nullptr);

/// "a,b,c" inline, or a path to a JSON array file.
Vector parse_vector_arg(const std::string& arg, int n, const std::string& what,
                        std::string* source_text = nullptr);

Matrix json_to_matrix(const Json& j, int rows, int cols, const std::string& where);
Vector json_to_vector(const Json& j, int n, const std::string& where);
Json to_json(const Matrix& m);
Json to_json(const Vector& v);

/// Column-major listing of the columns of m, as [[col0], [col1], ...].
Json columns_to_json(const Matrix& m);

/// %.17g
std::string format_double(double x);

/// Lower-case hex SHA-256.
std::string sha256_hex(const std::string& bytes);

}  // namespace liedeform::io
