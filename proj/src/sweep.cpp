#include "liedeform/sweep.hpp"

#include "liedeform/cohomology.hpp"
#include "liedeform/io.hpp"
#include "liedeform/phase_space.hpp"

#include <cmath>
#include <regex>
#include <sstream>

namespace liedeform::app {

namespace {

std::vector<double> parse_values(const std::string& spec, const std::string& where) {
  std::vector<double> out;
  if (spec.empty()) return out;
  auto number = [&where](const std::string& s) {
    char* end = nullptr;
    const double v = std::strtod(s.c_str(), &end);
    if (s.empty() || *end != '\0') throw ParseError(where, "cannot parse number '" + s + "'");
    return v;
  };
  if (spec.find(':') != std::string::npos) {
    std::stringstream ss(spec);
    std::string a, b, c;
    if (!std::getline(ss, a, ':') || !std::getline(ss, b, ':') || !std::getline(ss, c))
      throw ParseError(where, "range must be start:stop:step");
    const double start = number(a), stop = number(b), step = number(c);
    if (!(step > 0.0)) throw ParseError(where, "range step must be positive");
    if (stop < start) return out;
    const auto count = static_cast<long>(std::floor((stop - start) / step + 1e-9)) + 1;
    for (long k = 0; k < count; ++k) out.push_back(start + static_cast<double>(k) * step);
    return out;
  }
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(number(item));
  return out;
}

std::size_t grid_size(const std::vector<SweepAxis>& axes) {
  std::size_t size = 1;
  for (const auto& a : axes) size *= a.values.size();
  return size;
}

SweepRow evaluate_point(const LieAlgebra& A, const SweepBase& base,
                        const std::vector<SweepAxis>& axes,
                        const std::vector<std::pair<int, int>>& entries, std::size_t index) {
  const int n = A.dim();
  SweepRow row;
  row.coords.resize(axes.size());
  std::size_t rest = index;
  for (std::size_t k = axes.size(); k-- > 0;) {
    const auto m = axes[k].values.size();
    row.coords[k] = axes[k].values[rest % m];
    rest /= m;
  }

  Matrix Theta = base.Theta;
  Matrix Upsilon = base.Upsilon;
  Vector pi = base.pi;
  Vector xi = Vector::Zero(n);
  bool has_xi = false;
  for (std::size_t k = 0; k < axes.size(); ++k) {
    const auto& ax = axes[k];
    const double v = row.coords[k];
    switch (ax.target) {
      case SweepAxis::Target::Theta:
        Theta(ax.i, ax.j) = v;
        Theta(ax.j, ax.i) = -v;
        break;
      case SweepAxis::Target::Upsilon:
        Upsilon(ax.i, ax.j) = v;
        Upsilon(ax.j, ax.i) = -v;
        break;
      case SweepAxis::Target::Xi:
        xi(ax.i) = v;
        has_xi = true;
        break;
      case SweepAxis::Target::Pi:
        pi(ax.i) = v;
        break;
    }
  }
  if (has_xi) Theta += delta1_scalar(A, xi).matrix();

  try {
    const DeformedStructure S(A, TwoCocycle(Theta), MomentumTwoForm(Upsilon));
    const Degeneracy d = degeneracy(S, pi);
    row.rank = d.rank;
    row.nullity = d.nullity;
    if (d.nullity > 0) {
      row.status = "degenerate";
      return row;
    }
    const Matrix P = poisson_tensor(S, pi);
    for (const auto& [i, j] : entries) row.entries.push_back(P(i, j));
    row.status = "ok";
  } catch (const Error&) {
    row.status = "invalid";
  }
  return row;
}

}  // namespace

SweepAxis parse_axis(const std::string& text, int n) {
  static const std::regex pattern(R"(^\s*(Theta|Upsilon|xi|pi)\[(\d+)\](?:\[(\d+)\])?\s*=(.*)$)");
  std::smatch m;
  if (!std::regex_match(text, m, pattern))
    throw ParseError("--axis " + text, "expected Theta[i][j]=..., Upsilon[i][j]=..., xi[i]=... or pi[i]=...");
  SweepAxis ax;
  const std::string target = m[1];
  ax.i = std::stoi(m[2]);
  const bool two_index = target == "Theta" || target == "Upsilon";
  if (two_index != m[3].matched)
    throw ParseError("--axis " + text, target + (two_index ? " needs two indices" : " takes one index"));
  if (two_index) ax.j = std::stoi(m[3]);
  if (ax.i >= n || ax.j >= n) throw ShapeMismatch("--axis " + text + ": index out of range");
  if (two_index && ax.i == ax.j)
    throw ParseError("--axis " + text, "diagonal entries of an antisymmetric form are zero");
  ax.target = target == "Theta" ? SweepAxis::Target::Theta
              : target == "Upsilon" ? SweepAxis::Target::Upsilon
              : target == "xi"      ? SweepAxis::Target::Xi
                                    : SweepAxis::Target::Pi;
  ax.label = two_index ? target + "_" + std::to_string(ax.i) + "_" + std::to_string(ax.j)
                       : target + "_" + std::to_string(ax.i);
  ax.values = parse_values(m[4], "--axis " + text);
  return ax;
}

std::vector<SweepRow> run_sweep(const LieAlgebra& A, const SweepBase& base,
                                const std::vector<SweepAxis>& axes,
                                const std::vector<std::pair<int, int>>& entries) {
  const auto size = static_cast<long>(grid_size(axes));
  std::vector<SweepRow> rows(size);
#pragma omp parallel for schedule(dynamic)
  for (long k = 0; k < size; ++k) rows[k] = evaluate_point(A, base, axes, entries, k);
  return rows;
}

std::vector<SweepRow> run_sweep_serial(const LieAlgebra& A, const SweepBase& base,
                                       const std::vector<SweepAxis>& axes,
                                       const std::vector<std::pair<int, int>>& entries) {
  std::vector<SweepRow> rows;
  const auto size = grid_size(axes);
  for (std::size_t k = 0; k < size; ++k) rows.push_back(evaluate_point(A, base, axes, entries, k));
  return rows;
}

std::vector<std::pair<int, int>> default_entries(int n) {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < 2 * n; ++i)
    for (int j = i + 1; j < 2 * n; ++j) out.emplace_back(i, j);
  return out;
}

std::string sweep_csv(const std::vector<SweepRow>& rows, const std::vector<SweepAxis>& axes,
                      const std::vector<std::pair<int, int>>& entries) {
  std::ostringstream out;
  out << "index";
  for (const auto& a : axes) out << ',' << a.label;
  out << ",status,rank,nullity";
  for (const auto& [i, j] : entries) out << ",P_" << i << '_' << j;
  out << '\n';
  for (std::size_t k = 0; k < rows.size(); ++k) {
    const auto& r = rows[k];
    out << k;
    for (double c : r.coords) out << ',' << io::format_double(c);
    out << ',' << r.status << ',';
    if (r.rank >= 0) out << r.rank;
    out << ',';
    if (r.nullity >= 0) out << r.nullity;
    for (std::size_t e = 0; e < entries.size(); ++e) {
      out << ',';
      if (e < r.entries.size()) out << io::format_double(r.entries[e]);
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace liedeform::app
