#include "liedeform/app.hpp"

#include "liedeform/cohomology.hpp"
#include "liedeform/dynamics.hpp"
#include "liedeform/io.hpp"
#include "liedeform/phase_space.hpp"
#include "liedeform/sweep.hpp"
#include "liedeform/symmetry.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#ifndef LIEDEFORM_VERSION
#define LIEDEFORM_VERSION "dev"
#endif

namespace liedeform::app {

using io::Json;

std::string version() { return LIEDEFORM_VERSION; }

namespace {

/// Accumulates every input that influences the output, for the report hash.
class InputLog {
 public:
  void add(const std::string& label, const std::string& text) {
    bytes_ += label;
    bytes_.push_back('\0');
    bytes_ += text;
    bytes_.push_back('\0');
  }
  std::string hash() const { return io::sha256_hex(bytes_); }

 private:
  std::string bytes_;
};

Json header(const RunConfig& c, const InputLog& log) {
  Json j;
  j["tool"] = "liedeform";
  j["version"] = version();
  j["subcommand"] = c.subcommand;
  InputLog full = log;
  if (c.tol) full.add("tol", io::format_double(*c.tol));
  j["input_hash"] = full.hash();
  return j;
}

void emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw ParseError(path, "cannot open output file");
  file << text;
}

void emit_json(const RunConfig& c, const Json& j, std::ostream& out) {
  emit(c.out, j.dump(2) + "\n", out);
}

LieAlgebra load_algebra(const RunConfig& c, InputLog& log) {
  io::ResolvedAlgebra r = io::resolve_algebra(c.algebra);
  log.add("algebra", r.source_text);
  return io::build_algebra(r.spec, c.tol.value_or(tol::kAlgebraAxioms));
}

std::optional<io::DeformationSpec> load_deformation(const RunConfig& c, int n, InputLog& log) {
  if (!c.deformation) return std::nullopt;
  const std::string text = io::read_file(*c.deformation);
  log.add("deformation", text);
  return io::parse_deformation_spec(io::parse_json(text, *c.deformation), n, *c.deformation);
}

DeformedStructure make_structure(const RunConfig& c, const LieAlgebra& A,
                                 const std::optional<io::DeformationSpec>& spec) {
  io::Deformation d = io::build_deformation(A, spec.value_or(io::DeformationSpec{}));
  return DeformedStructure(A, std::move(d.Theta), std::move(d.Upsilon), c.tol);
}

int cmd_validate(const RunConfig& c, std::ostream& out) {
  InputLog log;
  io::ResolvedAlgebra r = io::resolve_algebra(c.algebra);
  log.add("algebra", r.source_text);
  const Tensor3 f = to_tensor(r.spec.f);
  ValidationReport report = validate_algebra(f);
  const double limit = c.tol.value_or(tol::kAlgebraAxioms);
  report.accepted = report.antisymmetry_residual <= limit && report.jacobi_residual <= limit;

  Json j = header(c, log);
  j["name"] = r.spec.name;
  j["dim"] = report.dim;
  j["antisymmetry_residual"] = report.antisymmetry_residual;
  j["jacobi_residual"] = report.jacobi_residual;
  j["accepted"] = report.accepted;
  if (report.accepted) {
    const LieAlgebra A(r.spec.name, f, limit);
    j["semisimple"] = is_semisimple(A);
    j["killing_form"] = io::to_json(killing_form(A).B);
  }
  emit_json(c, j, out);
  return report.accepted ? kOk : kValidationFailed;
}

int cmd_cohomology(const RunConfig& c, std::ostream& out) {
  InputLog log;
  const LieAlgebra A = load_algebra(c, log);
  const auto spec = load_deformation(c, A.dim(), log);
  const io::Deformation d = io::build_deformation(A, spec.value_or(io::DeformationSpec{}));
  const CohomologyDimensions dims = cohomology_dimensions(A);

  Json j = header(c, log);
  j["algebra"] = A.name();
  j["semisimple"] = is_semisimple(A);
  const double residual = cocycle_residual(A, d.Theta);
  const double limit = c.tol.value_or(cocycle_tolerance(A, d.Theta.matrix()));
  j["cocycle_residual"] = residual;
  j["cocycle"] = residual <= limit;
  int status = kOk;
  if (residual > limit) {
    j["exact"] = false;
    j["xi"] = nullptr;
    status = kValidationFailed;
  } else {
    try {
      const PrimitiveSolution sol = solve_primitive(A, d.Theta, limit);
      j["exact"] = true;
      j["xi"] = io::to_json(sol.xi);
      j["primitive_residual"] = sol.residual;
      j["kernel_dim"] = sol.kernel_dim;
    } catch (const NotExact& e) {
      j["exact"] = false;
      j["xi"] = nullptr;
      j["primitive_residual"] = e.residual();
    }
  }
  j["dims"] = {{"Z2", dims.z2}, {"B2", dims.b2}, {"H2", dims.h2}, {"H1", dims.h1}};
  emit_json(c, j, out);
  return status;
}

int cmd_omega(const RunConfig& c, std::ostream& out) {
  InputLog log;
  const LieAlgebra A = load_algebra(c, log);
  const auto spec = load_deformation(c, A.dim(), log);
  const DeformedStructure S = make_structure(c, A, spec);
  std::string pi_text;
  const Vector pi = c.pi ? io::parse_vector_arg(*c.pi, A.dim(), "--pi", &pi_text)
                         : Vector(Vector::Zero(A.dim()));
  log.add("pi", pi_text);

  const Degeneracy d = degeneracy(S, pi);
  Json j = header(c, log);
  j["rank"] = d.rank;
  j["nullity"] = d.nullity;
  j["kernel"] = io::columns_to_json(d.kernel);
  j["poisson"] = d.nullity == 0 ? io::to_json(poisson_tensor(S, pi)) : Json(nullptr);
  j["darboux_xi"] = nullptr;
  if (S.Upsilon().is_zero()) {
    try {
      j["darboux_xi"] = io::to_json(darboux_shift(S, pi).xi);
    } catch (const NotExact&) {
    }
  }
  j["closedness_residual"] = closedness_residual(S);
  emit_json(c, j, out);
  return kOk;
}

int cmd_isotropy(const RunConfig& c, std::ostream& out) {
  InputLog log;
  const LieAlgebra A = load_algebra(c, log);
  const auto spec = load_deformation(c, A.dim(), log);
  const DeformedStructure S = make_structure(c, A, spec);
  std::optional<Matrix> inertia;
  if (c.inertia) {
    std::string text;
    inertia = io::parse_inertia_arg(*c.inertia, A.dim(), &text).matrix();
    log.add("inertia", text);
  }
  const IsotropySubalgebra iso =
      isotropy_subalgebra(A, S.Theta().matrix(), S.Upsilon().matrix(), inertia);
  Json j = header(c, log);
  j["dimension"] = iso.dimension();
  j["basis"] = io::columns_to_json(iso.basis);
  j["closure_residual"] = iso.closure_residual;
  emit_json(c, j, out);
  return kOk;
}

int cmd_simulate(const RunConfig& c, std::ostream& out, std::ostream& err) {
  InputLog log;
  const LieAlgebra A = load_algebra(c, log);
  const int n = A.dim();
  const auto spec = load_deformation(c, n, log);
  const DeformedStructure S = make_structure(c, A, spec);

  std::string text;
  const InertiaTensor I = io::parse_inertia_arg(c.inertia.value_or("identity"), n, &text);
  log.add("inertia", text);
  if (!c.pi0) throw ParseError("--pi0", "initial momentum is required");
  const Vector pi0 = io::parse_vector_arg(*c.pi0, n, "--pi0", &text);
  log.add("pi0", text);
  log.add("T", io::format_double(c.T));
  log.add("dt", io::format_double(c.dt));

  IntegrationOptions opts;
  opts.T = c.T;
  opts.dt = c.dt;
  if (c.representation) {
    opts.representation = io::parse_representation_arg(*c.representation, A, &text);
    log.add("representation", text);
  }
  const IsotropySubalgebra iso =
      isotropy_subalgebra(A, S.Theta().matrix(), S.Upsilon().matrix(), I.matrix());
  opts.observables = isotropy_observables(iso.basis);

  const Trajectory traj = integrate(S, I, pi0, opts);

  std::ostringstream csv;
  csv << 't';
  for (int k = 0; k < n; ++k) csv << ",pi_" << k;
  for (const auto& ch : traj.monitors) csv << ',' << ch.name;
  csv << '\n';
  for (std::size_t s = 0; s < traj.states.size(); ++s) {
    csv << io::format_double(traj.times[s]);
    for (int k = 0; k < n; ++k) csv << ',' << io::format_double(traj.states[s].pi(k));
    for (const auto& ch : traj.monitors) csv << ',' << io::format_double(ch.values[s]);
    csv << '\n';
  }
  emit(c.csv, csv.str(), out);

  Json j = header(c, log);
  j["steps"] = traj.states.size() - 1;
  j["energy_drift"] = traj.channel("energy")->drift();
  const Channel* casimir = traj.channel("casimir");
  j["casimir_drift"] = casimir ? Json(casimir->drift()) : Json(nullptr);
  j["degenerate_at"] = traj.degenerate_at ? Json(*traj.degenerate_at) : Json(nullptr);
  if (traj.degenerate_at) j["diagnostic"] = traj.diagnostic;
  Json drifts = Json::object();
  for (const auto& ch : traj.monitors) drifts[ch.name] = ch.drift();
  j["monitor_drift"] = std::move(drifts);
  j["isotropy_dimension"] = iso.dimension();
  j["csv"] = c.csv;
  // With the CSV on stdout the summary moves to the diagnostic stream.
  emit_json(c, j, c.csv == "-" && c.out == "-" ? err : out);
  return traj.degenerate_at ? kDegenerate : kOk;
}

int cmd_sweep(const RunConfig& c, std::ostream& out) {
  InputLog log;
  const LieAlgebra A = load_algebra(c, log);
  const int n = A.dim();
  const auto spec = load_deformation(c, n, log);
  const io::Deformation d = io::build_deformation(A, spec.value_or(io::DeformationSpec{}));
  SweepBase base{d.Theta.matrix(), d.Upsilon.matrix(), Vector::Zero(n)};
  if (c.pi) {
    std::string text;
    base.pi = io::parse_vector_arg(*c.pi, n, "--pi", &text);
    log.add("pi", text);
  }

  std::vector<SweepAxis> axes;
  for (const auto& a : c.axes) axes.push_back(parse_axis(a, n));
  std::vector<std::pair<int, int>> entries;
  for (const auto& e : c.entries) {
    int i = -1, j = -1;
    char comma = 0;
    std::istringstream ss(e);
    if (!(ss >> i >> comma >> j) || comma != ',' || i < 0 || j < 0 || i >= 2 * n || j >= 2 * n)
      throw ParseError("--entry " + e, "expected i,j with 0 <= i, j < 2N");
    entries.emplace_back(i, j);
  }
  if (entries.empty()) entries = default_entries(n);
  for (const auto& a : c.axes) log.add("axis", a);
  for (const auto& [i, j] : entries) log.add("entry", std::to_string(i) + "," + std::to_string(j));

  const Json h = header(c, log);
  std::string text = "# tool=" + h["tool"].get<std::string>() + " version=" + h["version"].get<std::string>() +
                     " input_hash=" + h["input_hash"].get<std::string>() + "\n";
  text += sweep_csv(run_sweep(A, base, axes, entries), axes, entries);
  emit(c.out, text, out);
  return kOk;
}

}  // namespace

int run(const RunConfig& c, std::ostream& out, std::ostream& err) {
  try {
    if (c.subcommand == "validate") return cmd_validate(c, out);
    if (c.subcommand == "cohomology") return cmd_cohomology(c, out);
    if (c.subcommand == "omega") return cmd_omega(c, out);
    if (c.subcommand == "isotropy") return cmd_isotropy(c, out);
    if (c.subcommand == "simulate") return cmd_simulate(c, out, err);
    if (c.subcommand == "sweep") return cmd_sweep(c, out);
    err << "error: unknown subcommand '" << c.subcommand << "'\n";
    return kUsage;
  } catch (const ParseError& e) {
    err << "input error: " << e.what() << '\n';
    return kInputError;
  } catch (const nlohmann::json::exception& e) {
    err << "input error: " << e.what() << '\n';
    return kInputError;
  } catch (const DegenerateForm& e) {
    err << "degenerate: " << e.what() << '\n';
    return kDegenerate;
  } catch (const Error& e) {
    err << "validation failed: " << e.what() << '\n';
    return kValidationFailed;
  }
}

int cli_main(int argc, char** argv) {
  CLI::App cli{"Deformed symplectic structures on T*G: cocycles, degeneracy, isotropy, Euler dynamics"};
  cli.set_version_flag("--version", version());
  cli.require_subcommand(1);

  RunConfig c;
  double tol_value = 0.0;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--algebra", c.algebra, "Algebra spec file, registry entry, or built-in name")
        ->required();
    sub->add_option("-o,--out", c.out, "Report path ('-' for stdout)");
    sub->add_option("--tol", tol_value, "Override algebra/cocycle admission tolerance");
  };
  auto deformation = [&](CLI::App* sub) {
    sub->add_option("--deformation", c.deformation, "Deformation spec file (Theta, Upsilon, xi)");
  };

  auto* validate = cli.add_subcommand("validate", "Check bracket antisymmetry and Jacobi identity");
  common(validate);

  auto* cohomology = cli.add_subcommand("cohomology", "Cocycle test, primitive, cohomology dimensions");
  common(cohomology);
  deformation(cohomology);

  auto* omega = cli.add_subcommand("omega", "Two-form matrix, degeneracy, Poisson tensor");
  common(omega);
  deformation(omega);
  omega->add_option("--pi", c.pi, "Body momentum: a,b,c or JSON file");

  auto* isotropy = cli.add_subcommand("isotropy", "Isotropy subalgebra of Theta, Upsilon (and inertia)");
  common(isotropy);
  deformation(isotropy);
  isotropy->add_option("--inertia", c.inertia, "diag:a,b,c | identity | inertia spec file");

  auto* simulate = cli.add_subcommand("simulate", "Integrate Euler-type dynamics");
  common(simulate);
  deformation(simulate);
  simulate->add_option("--inertia", c.inertia, "diag:a,b,c | identity | inertia spec file");
  simulate->add_option("--pi0", c.pi0, "Initial body momentum")->required();
  simulate->add_option("--T", c.T, "Final time");
  simulate->add_option("--dt", c.dt, "Step size");
  simulate->add_option("--rep", c.representation, "so3-defining | representation spec file");
  simulate->add_option("--csv", c.csv, "Trajectory CSV path ('-' for stdout)");

  auto* sweep = cli.add_subcommand("sweep", "Degeneracy / Poisson entries over a parameter grid");
  common(sweep);
  deformation(sweep);
  sweep->add_option("--pi", c.pi, "Body momentum at which omega is evaluated");
  sweep->add_option("--axis", c.axes, "Grid axis, e.g. Theta[0][1]=0:2:0.25 (repeatable)");
  sweep->add_option("--entry", c.entries, "Poisson entry i,j to report (repeatable)");

  try {
    cli.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = cli.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  for (auto* sub : cli.get_subcommands()) c.subcommand = sub->get_name();
  if (cli.get_subcommands().front()->count("--tol") > 0) c.tol = tol_value;
  return run(c, std::cout, std::cerr);
}

}  // namespace liedeform::app
