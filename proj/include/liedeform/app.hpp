#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace liedeform::app {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kValidationFailed = 2,
  kDegenerate = 3,
  kInputError = 4,
};

struct RunConfig {
  std::string subcommand;  // validate | cohomology | omega | isotropy | simulate | sweep
  std::string algebra;
  std::optional<std::string> deformation;
  std::optional<std::string> inertia;
  std::optional<std::string> pi;
  std::optional<std::string> pi0;
  std::optional<std::string> representation;
  double T = 10.0;
  double dt = 1e-3;
  std::vector<std::string> axes;
  std::vector<std::string> entries;  // "i,j"
  std::optional<double> tol;
  std::string out = "-";              // report / sweep CSV; "-" is stdout
  std::string csv = "trajectory.csv"; // simulate only
};

/// Executes one subcommand. Reports go to config.out (or `out` for "-"),
/// diagnostics to `err`. Returns an ExitCode.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv with CLI11 and dispatches to run().
int cli_main(int argc, char** argv);

std::string version();

}  // namespace liedeform::app
