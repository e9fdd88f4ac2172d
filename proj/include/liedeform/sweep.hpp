#pragma once

#include "liedeform/common.hpp"
#include "liedeform/lie_core.hpp"

#include <string>
#include <vector>

namespace liedeform::app {

/// One grid axis. Theta/Upsilon axes set entry (i, j) and its antisymmetric
/// partner; xi axes add delta1(xi) to Theta; pi axes set the momentum component.
struct SweepAxis {
  enum class Target { Theta, Upsilon, Xi, Pi };
  Target target = Target::Theta;
  int i = 0;
  int j = 0;
  std::string label;
  std::vector<double> values;
};

/// "Theta[0][1]=0:2:0.25", "Upsilon[0][1]=0,0.5,1", "xi[2]=...", "pi[0]=...".
/// Ranges are inclusive; start > stop or an empty value list gives an empty axis.
SweepAxis parse_axis(const std::string& text, int n);

struct SweepBase {
  Matrix Theta;
  Matrix Upsilon;
  Vector pi;
};

struct SweepRow {
  std::vector<double> coords;
  std::string status;  // ok | degenerate | invalid
  int rank = -1;
  int nullity = -1;
  std::vector<double> entries;  // Poisson entries; empty unless status == ok
};

/// Grid points in row-major order (last axis fastest). The parallel path
/// evaluates points with OpenMP and writes each row at its grid index.
std::vector<SweepRow> run_sweep(const LieAlgebra& A, const SweepBase& base,
                                const std::vector<SweepAxis>& axes,
                                const std::vector<std::pair<int, int>>& entries);

/// Serial reference for run_sweep.
std::vector<SweepRow> run_sweep_serial(const LieAlgebra& A, const SweepBase& base,
                                       const std::vector<SweepAxis>& axes,
                                       const std::vector<std::pair<int, int>>& entries);

/// All (i, j), i < j, over the 2N frame.
std::vector<std::pair<int, int>> default_entries(int n);

std::string sweep_csv(const std::vector<SweepRow>& rows, const std::vector<SweepAxis>& axes,
                      const std::vector<std::pair<int, int>>& entries);

}  // namespace liedeform::app
