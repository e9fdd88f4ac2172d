#include <doctest.h>

#include "support.hpp"

#include "liedeform/app.hpp"
#include "liedeform/cohomology.hpp"
#include "liedeform/io.hpp"
#include "liedeform/registry.hpp"
#include "liedeform/sweep.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

using namespace liedeform;
using app::RunConfig;
using io::Json;

namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(const RunConfig& c) {
  std::ostringstream out, err;
  const int code = app::run(c, out, err);
  return {code, out.str(), err.str()};
}

RunConfig config(const std::string& sub, const std::string& algebra) {
  RunConfig c;
  c.subcommand = sub;
  c.algebra = algebra;
  return c;
}

std::string spec(const std::string& name) { return testing::source_dir() + "/specs/" + name; }
std::string registry_file(const std::string& name) {
  return testing::source_dir() + "/registry/" + name + ".json";
}

/// Scratch directory removed on scope exit.
struct TempDir {
  fs::path path;
  TempDir() : path(fs::temp_directory_path() / ("liedeform_test_" + std::to_string(::getpid()))) {
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string write(const std::string& name, const std::string& text) const {
    const fs::path p = path / name;
    std::ofstream(p) << text;
    return p.string();
  }
};

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream ss(text);
  for (std::string l; std::getline(ss, l);) out.push_back(l);
  return out;
}

}  // namespace

TEST_CASE("sha256 of a known vector") {
  CHECK(io::sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
  CHECK(io::format_double(0.1) == "0.10000000000000001");
}

TEST_CASE("registry files round-trip through the parser") {
  for (const auto& A : registry::all()) {
    if (A.name() == "abelian3") continue;
    const io::ResolvedAlgebra r = io::resolve_algebra(registry_file(A.name()));
    const LieAlgebra B = io::build_algebra(r.spec);
    CHECK(B.structure_constants() == A.structure_constants());
  }
  const LieAlgebra so3 = registry::so3();
  const Json j = io::algebra_to_json(so3);
  const LieAlgebra back = io::build_algebra(io::parse_algebra_spec(j, "memory"));
  CHECK(back.structure_constants() == so3.structure_constants());
}

TEST_CASE("algebra resolution order") {
  TempDir dir;
  Json j = io::algebra_to_json(registry::heisenberg());
  j["name"] = "custom";
  dir.write("so3.json", j.dump());
  ::setenv(io::kRegistryEnv, dir.path.c_str(), 1);
  CHECK(io::resolve_algebra("so3").spec.name == "custom");
  ::unsetenv(io::kRegistryEnv);
  CHECK(io::resolve_algebra("so3").spec.name == "so3");
  CHECK(io::resolve_algebra("abelian:4").spec.f.size() == 4);
  CHECK_THROWS_AS(io::resolve_algebra("no-such-algebra"), ParseError);
}

TEST_CASE("spec parse errors carry locations") {
  CHECK_THROWS_AS(io::parse_json("{\"f\": [", "x.json"), ParseError);
  CHECK_THROWS_AS(io::parse_algebra_spec(Json::parse(R"({"name": "x"})"), "x"), ParseError);
  CHECK_THROWS_AS(io::parse_algebra_spec(Json::parse(R"({"dim": 2, "f": [[[0]]]})"), "x"), ShapeMismatch);
  CHECK_THROWS_AS(io::parse_algebra_spec(Json::parse(R"({"f": [[["a"]]]})"), "x"), ParseError);
  try {
    io::parse_json("[1, 2,", "broken.json");
  } catch (const ParseError& e) {
    CHECK(e.where().find("broken.json") != std::string::npos);
  }
}

TEST_CASE("deformation spec: xi only, Theta only, and consistency") {
  const LieAlgebra A = registry::so3();
  const auto s = io::parse_deformation_spec(io::parse_json(io::read_file(spec("so3_xi_e3.json")), "f"), 3, "f");
  const io::Deformation d = io::build_deformation(A, s);
  CHECK(d.Theta.matrix()(0, 1) == -1.0);
  CHECK(d.Upsilon.is_zero());

  io::DeformationSpec both;
  both.xi = Vector::Unit(3, 2);
  both.Theta = delta1_scalar(A, Vector::Unit(3, 2)).matrix();
  CHECK_NOTHROW(io::build_deformation(A, both));
  both.Theta = delta1_scalar(A, Vector::Unit(3, 0)).matrix();
  CHECK_THROWS_AS(io::build_deformation(A, both), NotACocycle);

  CHECK_THROWS_AS(io::parse_deformation_spec(Json::parse(R"({"Theta": [[0, 1], [-1, 0]]})"), 3, "f"),
                  ShapeMismatch);
}

TEST_CASE("inertia, vector and representation arguments") {
  const InertiaTensor I = io::parse_inertia_arg("diag:1,2,3", 3);
  CHECK(I.matrix()(1, 1) == 2.0);
  CHECK(io::parse_inertia_arg("identity", 2).matrix() == Matrix::Identity(2, 2));
  CHECK_THROWS_AS(io::parse_inertia_arg("diag:1,2", 3), ShapeMismatch);
  CHECK(io::parse_inertia_arg(spec("inertia_diag.json"), 3).dim() == 3);
  CHECK(io::parse_vector_arg("1,-2.5,3e-1", 3, "--pi")(1) == -2.5);
  CHECK_THROWS_AS(io::parse_vector_arg("1,2", 3, "--pi"), ShapeMismatch);
  CHECK_THROWS_AS(io::parse_vector_arg("1,x,2", 3, "--pi"), ParseError);
  const Representation rep = io::parse_representation_arg(spec("so3_defining_rep.json"), registry::so3());
  CHECK(rep.orthogonal);
  CHECK(representation_residual(registry::so3(), rep) == 0.0);
  CHECK_THROWS_AS(io::parse_representation_arg("so3-defining", registry::abelian(2)), ShapeMismatch);
}

TEST_CASE("validate subcommand") {
  const Result r = run(config("validate", "so3"));
  CHECK(r.code == app::kOk);
  const Json j = Json::parse(r.out);
  CHECK(j["tool"] == "liedeform");
  CHECK(j["version"] == app::version());
  CHECK(j["input_hash"].get<std::string>().size() == 64);
  CHECK(j["accepted"] == true);
  CHECK(j["semisimple"] == true);
  CHECK(j["killing_form"][0][0] == -2.0);

  TempDir dir;
  oracle::Cube f = oracle::so3();
  f[0][0][1] = 0.1;
  f[0][1][0] = -0.1;
  const std::string bad = dir.write("bad.json", Json{{"name", "bad"}, {"f", f}}.dump());
  const Result b = run(config("validate", bad));
  CHECK(b.code == app::kValidationFailed);
  const Json jb = Json::parse(b.out);
  CHECK(jb["accepted"] == false);
  CHECK(jb["jacobi_residual"].get<double>() == doctest::Approx(0.1));
  CHECK_FALSE(jb.contains("killing_form"));

  RunConfig loose = config("validate", bad);
  loose.tol = 0.5;
  const Result l = run(loose);
  CHECK(l.code == app::kOk);
  CHECK(Json::parse(l.out)["input_hash"] != jb["input_hash"]);

  const std::string broken = dir.write("broken.json", "{\"f\": [[[0]]");
  CHECK(run(config("validate", broken)).code == app::kInputError);
  CHECK(run(config("validate", "nothing-here")).code == app::kInputError);
}

TEST_CASE("input hash is deterministic and input-sensitive") {
  const Json a = Json::parse(run(config("validate", "so3")).out);
  const Json b = Json::parse(run(config("validate", "so3")).out);
  const Json c = Json::parse(run(config("validate", "sl2")).out);
  CHECK(a["input_hash"] == b["input_hash"]);
  CHECK(a["input_hash"] != c["input_hash"]);
}

TEST_CASE("cohomology subcommand") {
  const Json h = Json::parse(run(config("cohomology", "heisenberg")).out);
  CHECK(h["dims"]["Z2"] == 3);
  CHECK(h["dims"]["B2"] == 1);
  CHECK(h["dims"]["H2"] == 2);
  CHECK(h["dims"]["H1"] == 2);

  RunConfig c = config("cohomology", "heisenberg");
  c.deformation = spec("heisenberg_theta13.json");
  const Result r = run(c);
  CHECK(r.code == app::kOk);
  const Json j = Json::parse(r.out);
  CHECK(j["cocycle"] == true);
  CHECK(j["exact"] == false);
  CHECK(j["xi"].is_null());

  RunConfig s = config("cohomology", "so3");
  s.deformation = spec("so3_xi_0.3.json");
  const Json js = Json::parse(run(s).out);
  CHECK(js["exact"] == true);
  CHECK(js["dims"]["H2"] == 0);

  TempDir dir;
  const std::string algebra = dir.write("so3r.json", io::algebra_to_json(testing::so3_plus_r()).dump());
  const std::string def = dir.write(
      "def.json", R"({"Theta": [[0,0,0,0],[0,0,0,0],[0,0,0,1],[0,0,-1,0]]})");
  RunConfig bad = config("cohomology", algebra);
  bad.deformation = def;
  const Result rb = run(bad);
  CHECK(rb.code == app::kValidationFailed);
  CHECK(Json::parse(rb.out)["cocycle"] == false);
}

TEST_CASE("omega subcommand") {
  RunConfig c = config("omega", registry_file("abelian2"));
  c.deformation = spec("abelian2_fg_half.json");
  const Result r = run(c);
  CHECK(r.code == app::kOk);
  const Json j = Json::parse(r.out);
  CHECK(j["nullity"] == 0);
  CHECK(j["rank"] == 4);
  CHECK(std::fabs(std::fabs(j["poisson"][0][1].get<double>()) - 2.0 / 3.0) < 1e-12);

  c.deformation = spec("abelian2_fg_one.json");
  const Json d = Json::parse(run(c).out);
  CHECK(d["nullity"] == 2);
  CHECK(d["poisson"].is_null());
  CHECK(d["kernel"].size() == 2);

  RunConfig s = config("omega", "so3");
  s.deformation = spec("so3_xi_e3.json");
  s.pi = "0.1,0.2,0.3";
  const Json js = Json::parse(run(s).out);
  CHECK(js["darboux_xi"][2].get<double>() == doctest::Approx(1.0));
  CHECK(js["closedness_residual"] == 0.0);
}

TEST_CASE("isotropy subcommand") {
  RunConfig c = config("isotropy", "so3");
  c.deformation = spec("so3_xi_e3.json");
  const Json j = Json::parse(run(c).out);
  CHECK(j["dimension"] == 1);
  CHECK(std::fabs(std::fabs(j["basis"][0][2].get<double>()) - 1.0) < 1e-12);
  c.inertia = "diag:1,2,3";
  CHECK(Json::parse(run(c).out)["dimension"] == 0);
}

TEST_CASE("simulate subcommand writes the trajectory and a summary") {
  TempDir dir;
  RunConfig c = config("simulate", "so3");
  c.inertia = "diag:1,0.5,0.3333333333333333";
  c.pi0 = "0.3,1,-0.4";
  c.T = 0.5;
  c.dt = 0.01;
  c.csv = (dir.path / "traj.csv").string();
  c.representation = "so3-defining";
  const Result r = run(c);
  REQUIRE(r.code == app::kOk);
  const Json j = Json::parse(r.out);
  CHECK(j["steps"] == 50);
  CHECK(j["energy_drift"].get<double>() < 1e-10);
  CHECK(j["casimir_drift"].is_number());
  CHECK(j["degenerate_at"].is_null());
  CHECK(j["monitor_drift"].contains("orthogonality_defect"));
  const auto rows = lines(io::read_file(c.csv));
  REQUIRE(rows.size() == 52);
  CHECK(rows[0] == "t,pi_0,pi_1,pi_2,energy,casimir,orthogonality_defect");
  CHECK(rows[1].starts_with("0,0.29999999999999999,1,-0.40000000000000002,"));

  RunConfig stdout_csv = c;
  stdout_csv.csv = "-";
  stdout_csv.representation.reset();
  const Result s = run(stdout_csv);
  CHECK(lines(s.out).size() == 52);
  CHECK(Json::parse(s.err)["steps"] == 50);
}

TEST_CASE("simulate exits with the degenerate code") {
  RunConfig c = config("simulate", "abelian:2");
  c.deformation = spec("abelian2_fg_one.json");
  c.pi0 = "1,0";
  c.T = 1.0;
  c.dt = 0.1;
  c.csv = "-";
  const Result r = run(c);
  CHECK(r.code == app::kDegenerate);
  const Json j = Json::parse(r.err);
  CHECK(j["degenerate_at"] == 0.0);
  CHECK(lines(r.out).size() == 2);
}

TEST_CASE("axis parsing") {
  const app::SweepAxis a = app::parse_axis("Theta[0][1]=0:2:0.25", 2);
  CHECK(a.values.size() == 9);
  CHECK(a.values.back() == 2.0);
  CHECK(a.label == "Theta_0_1");
  CHECK(app::parse_axis("pi[2]=1,2,3", 3).values == std::vector<double>{1, 2, 3});
  CHECK(app::parse_axis("xi[0]=1:0:0.5", 3).values.empty());
  CHECK_THROWS_AS(app::parse_axis("Theta[0]=1", 3), ParseError);
  CHECK_THROWS_AS(app::parse_axis("pi[0][1]=1", 3), ParseError);
  CHECK_THROWS_AS(app::parse_axis("Theta[1][1]=1", 3), ParseError);
  CHECK_THROWS_AS(app::parse_axis("Theta[0][5]=1", 3), ShapeMismatch);
  CHECK_THROWS_AS(app::parse_axis("Omega[0]=1", 3), ParseError);
  CHECK_THROWS_AS(app::parse_axis("pi[0]=0:1:0", 3), ParseError);
}

TEST_CASE("sweep finds the FG = 1 curve and matches the serial path") {
  const LieAlgebra A = registry::abelian(2);
  const std::vector<app::SweepAxis> axes{app::parse_axis("Theta[0][1]=0:2:0.25", 2),
                                         app::parse_axis("Upsilon[0][1]=0:2:0.25", 2)};
  const app::SweepBase base{Matrix::Zero(2, 2), Matrix::Zero(2, 2), Vector::Zero(2)};
  const auto entries = app::default_entries(2);
  const auto rows = app::run_sweep(A, base, axes, entries);
  const auto serial = app::run_sweep_serial(A, base, axes, entries);
  REQUIRE(rows.size() == 81);
  REQUIRE(serial.size() == 81);
  int degenerate = 0;
  for (std::size_t k = 0; k < rows.size(); ++k) {
    CHECK(rows[k].coords == serial[k].coords);
    CHECK(rows[k].status == serial[k].status);
    CHECK(rows[k].entries == serial[k].entries);
    const double F = rows[k].coords[0], G = rows[k].coords[1];
    if (rows[k].nullity > 0) {
      ++degenerate;
      CHECK(F * G == 1.0);
      CHECK(rows[k].nullity == 2);
    }
  }
  CHECK(degenerate == 3);
  // point (0.5, 0.5): index 2 * 9 + 2
  CHECK(std::fabs(std::fabs(rows[20].entries[0]) - 2.0 / 3.0) < 1e-12);
}

TEST_CASE("sweep subcommand emits a header and CSV") {
  RunConfig c = config("sweep", "abelian:2");
  c.axes = {"Theta[0][1]=0,1", "Upsilon[0][1]=1"};
  c.entries = {"0,1", "2,3"};
  const Result r = run(c);
  REQUIRE(r.code == app::kOk);
  const auto rows = lines(r.out);
  REQUIRE(rows.size() == 4);
  CHECK(rows[0].starts_with("# tool=liedeform version=" + app::version() + " input_hash="));
  CHECK(rows[1] == "index,Theta_0_1,Upsilon_0_1,status,rank,nullity,P_0_1,P_2_3");
  CHECK(rows[2].starts_with("0,0,1,ok,4,0,"));
  CHECK(rows[3] == "1,1,1,degenerate,2,2,,");
  c.entries = {"0,9"};
  CHECK(run(c).code == app::kInputError);
}

TEST_CASE("unknown subcommand is a usage error") {
  CHECK(run(config("frobnicate", "so3")).code == app::kUsage);
}
