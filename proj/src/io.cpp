#include "liedeform/io.hpp"

#include "liedeform/cohomology.hpp"
#include "liedeform/registry.hpp"

#include <openssl/evp.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace liedeform::io {

namespace fs = std::filesystem;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path, "cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json parse_json(const std::string& text, const std::string& source) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(source + " (byte " + std::to_string(e.byte) + ")", e.what());
  }
}

Matrix json_to_matrix(const Json& j, int rows, int cols, const std::string& where) {
  if (!j.is_array() || static_cast<int>(j.size()) != rows)
    throw ShapeMismatch(where + ": expected " + std::to_string(rows) + " rows");
  Matrix m(rows, cols);
  for (int r = 0; r < rows; ++r) {
    const Json& row = j[r];
    if (!row.is_array() || static_cast<int>(row.size()) != cols)
      throw ShapeMismatch(where + "[" + std::to_string(r) + "]: expected " + std::to_string(cols) +
                          " entries");
    for (int c = 0; c < cols; ++c) {
      if (!row[c].is_number())
        throw ParseError(where + "[" + std::to_string(r) + "][" + std::to_string(c) + "]",
                         "expected a number");
      m(r, c) = row[c].get<double>();
    }
  }
  return m;
}

Vector json_to_vector(const Json& j, int n, const std::string& where) {
  if (!j.is_array() || static_cast<int>(j.size()) != n)
    throw ShapeMismatch(where + ": expected an array of length " + std::to_string(n));
  Vector v(n);
  for (int i = 0; i < n; ++i) {
    if (!j[i].is_number())
      throw ParseError(where + "[" + std::to_string(i) + "]", "expected a number");
    v(i) = j[i].get<double>();
  }
  return v;
}

Json to_json(const Matrix& m) {
  Json out = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    out.push_back(std::move(row));
  }
  return out;
}

Json to_json(const Vector& v) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v(i));
  return out;
}

Json columns_to_json(const Matrix& m) {
  Json out = Json::array();
  for (Eigen::Index c = 0; c < m.cols(); ++c) out.push_back(to_json(Vector(m.col(c))));
  return out;
}

AlgebraSpec parse_algebra_spec(const Json& j, const std::string& source) {
  if (!j.is_object()) throw ParseError(source, "algebra spec must be a JSON object");
  if (!j.contains("f")) throw ParseError(source, "missing field \"f\"");
  AlgebraSpec spec;
  spec.name = j.value("name", std::string("unnamed"));
  const Json& f = j["f"];
  if (!f.is_array()) throw ParseError(source + ": f", "expected a nested array");
  for (std::size_t m = 0; m < f.size(); ++m) {
    if (!f[m].is_array()) throw ParseError(source + ": f[" + std::to_string(m) + "]", "expected an array");
    auto& plane = spec.f.emplace_back();
    for (std::size_t a = 0; a < f[m].size(); ++a) {
      const Json& row = f[m][a];
      const std::string where = source + ": f[" + std::to_string(m) + "][" + std::to_string(a) + "]";
      if (!row.is_array()) throw ParseError(where, "expected an array");
      auto& out = plane.emplace_back();
      for (std::size_t b = 0; b < row.size(); ++b) {
        if (!row[b].is_number()) throw ParseError(where + "[" + std::to_string(b) + "]", "expected a number");
        out.push_back(row[b].get<double>());
      }
    }
  }
  if (j.contains("dim")) {
    if (!j["dim"].is_number_integer()) throw ParseError(source + ": dim", "expected an integer");
    const auto dim = j["dim"].get<long>();
    if (dim != static_cast<long>(spec.f.size()))
      throw ShapeMismatch(source + ": dim = " + std::to_string(dim) + " but f has " +
                          std::to_string(spec.f.size()) + " planes");
  }
  return spec;
}

LieAlgebra build_algebra(const AlgebraSpec& spec, double axiom_tol) {
  return LieAlgebra(spec.name, to_tensor(spec.f), axiom_tol);
}

Json algebra_to_json(const LieAlgebra& A) {
  const int n = A.dim();
  Json f = Json::array();
  for (int m = 0; m < n; ++m) {
    Json plane = Json::array();
    for (int a = 0; a < n; ++a) {
      Json row = Json::array();
      for (int b = 0; b < n; ++b) row.push_back(A.f(m, a, b));
      plane.push_back(std::move(row));
    }
    f.push_back(std::move(plane));
  }
  Json out;
  out["name"] = A.name();
  out["dim"] = n;
  out["f"] = std::move(f);
  return out;
}

ResolvedAlgebra resolve_algebra(const std::string& ref) {
  auto from_file = [](const std::string& path) {
    std::string text = read_file(path);
    AlgebraSpec spec = parse_algebra_spec(parse_json(text, path), path);
    return ResolvedAlgebra{std::move(spec), std::move(text)};
  };
  if (fs::is_regular_file(ref)) return from_file(ref);
  if (const char* dir = std::getenv(kRegistryEnv); dir && *dir) {
    for (const fs::path& candidate : {fs::path(dir) / (ref + ".json"), fs::path(dir) / ref})
      if (fs::is_regular_file(candidate)) return from_file(candidate.string());
  }
  if (auto A = registry::builtin(ref)) {
    AlgebraSpec spec;
    spec.name = A->name();
    const int n = A->dim();
    spec.f.assign(n, std::vector<std::vector<double>>(n, std::vector<double>(n)));
    for (int m = 0; m < n; ++m)
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) spec.f[m][a][b] = A->f(m, a, b);
    return ResolvedAlgebra{std::move(spec), "builtin:" + ref};
  }
  throw ParseError(ref, "not a file, registry entry, or built-in algebra name");
}

DeformationSpec parse_deformation_spec(const Json& j, int n, const std::string& source) {
  if (!j.is_object()) throw ParseError(source, "deformation spec must be a JSON object");
  DeformationSpec spec;
  if (j.contains("Theta") && !j["Theta"].is_null())
    spec.Theta = json_to_matrix(j["Theta"], n, n, source + ": Theta");
  if (j.contains("Upsilon") && !j["Upsilon"].is_null())
    spec.Upsilon = json_to_matrix(j["Upsilon"], n, n, source + ": Upsilon");
  if (j.contains("xi") && !j["xi"].is_null()) spec.xi = json_to_vector(j["xi"], n, source + ": xi");
  return spec;
}

Deformation build_deformation(const LieAlgebra& A, const DeformationSpec& spec) {
  const int n = A.dim();
  TwoCocycle Theta = TwoCocycle::zero(n);
  if (spec.Theta) {
    Theta = TwoCocycle(*spec.Theta);
    if (spec.xi) {
      const Matrix diff = Theta.matrix() - delta1_scalar(A, *spec.xi).matrix();
      const double r = max_abs(diff);
      if (r > cocycle_tolerance(A, Theta.matrix()))
        throw NotACocycle("Theta and xi disagree: max |Theta - delta1(xi)| = " + std::to_string(r), r);
    }
  } else if (spec.xi) {
    Theta = delta1_scalar(A, *spec.xi);
  }
  MomentumTwoForm Upsilon = spec.Upsilon ? MomentumTwoForm(*spec.Upsilon) : MomentumTwoForm::zero(n);
  return Deformation{std::move(Theta), std::move(Upsilon)};
}

InertiaTensor parse_inertia_spec(const Json& j, int n, const std::string& source) {
  const Json& m = j.is_object() ? j.at("inertia") : j;
  return InertiaTensor(json_to_matrix(m, n, n, source + ": inertia"));
}

namespace {

std::vector<double> split_numbers(const std::string& text, const std::string& what) {
  std::vector<double> out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    char* end = nullptr;
    const double v = std::strtod(item.c_str(), &end);
    if (end == item.c_str() || *end != '\0')
      throw ParseError(what, "cannot parse number '" + item + "'");
    out.push_back(v);
  }
  return out;
}

}  // namespace

InertiaTensor parse_inertia_arg(const std::string& arg, int n, std::string* source_text) {
  if (arg == "identity") {
    if (source_text) *source_text = arg;
    return InertiaTensor(Matrix::Identity(n, n));
  }
  if (arg.starts_with("diag:")) {
    if (source_text) *source_text = arg;
    const auto d = split_numbers(arg.substr(5), "--inertia");
    if (static_cast<int>(d.size()) != n)
      throw ShapeMismatch("--inertia: expected " + std::to_string(n) + " diagonal entries");
    return InertiaTensor::diagonal(Eigen::Map<const Vector>(d.data(), n));
  }
  std::string text = read_file(arg);
  if (source_text) *source_text = text;
  return parse_inertia_spec(parse_json(text, arg), n, arg);
}

Representation parse_representation_spec(const Json& j, int n, const std::string& source) {
  if (!j.is_object() || !j.contains("generators"))
    throw ParseError(source, "representation spec needs \"generators\"");
  const Json& gens = j["generators"];
  if (!gens.is_array() || static_cast<int>(gens.size()) != n)
    throw ShapeMismatch(source + ": expected " + std::to_string(n) + " generators");
  if (n == 0 || !gens[0].is_array() || gens[0].empty())
    throw ParseError(source + ": generators[0]", "expected a square matrix");
  const int d = static_cast<int>(gens[0].size());
  Representation rep;
  for (int k = 0; k < n; ++k)
    rep.generators.push_back(
        json_to_matrix(gens[k], d, d, source + ": generators[" + std::to_string(k) + "]"));
  rep.orthogonal = j.value("orthogonal", false);
  return rep;
}

Representation parse_representation_arg(const std::string& arg, const LieAlgebra& A,
                                        std::string* source_text) {
  if (arg == "so3-defining") {
    if (A.dim() != 3) throw ShapeMismatch("so3-defining representation needs a 3-dimensional algebra");
    if (source_text) *source_text = arg;
    return Representation{registry::so3_defining_rep(), true};
  }
  std::string text = read_file(arg);
  if (source_text) *source_text = text;
  return parse_representation_spec(parse_json(text, arg), A.dim(), arg);
}

Vector parse_vector_arg(const std::string& arg, int n, const std::string& what,
                        std::string* source_text) {
  if (fs::is_regular_file(arg)) {
    std::string text = read_file(arg);
    if (source_text) *source_text = text;
    return json_to_vector(parse_json(text, arg), n, arg);
  }
  if (source_text) *source_text = arg;
  const auto values = split_numbers(arg, what);
  if (static_cast<int>(values.size()) != n)
    throw ShapeMismatch(what + ": expected " + std::to_string(n) + " components, got " +
                        std::to_string(values.size()));
  return Eigen::Map<const Vector>(values.data(), n);
}

std::string format_double(double x) {
  char buf[40];
  if (x == 0.0) x = 0.0;  // no negative zero in output
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string sha256_hex(const std::string& bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr);
  static constexpr char hex[] = "0123456789abcdef";
  std::string out;
  out.reserve(2 * len);
  for (unsigned int i = 0; i < len; ++i) {
    out.push_back(hex[digest[i] >> 4]);
    out.push_back(hex[digest[i] & 0xf]);
  }
  return out;
}

}  // namespace liedeform::io
