#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "dgsc/correction.hpp"
#include "dgsc/metrics.hpp"
#include "dgsc/problem.hpp"
#include "dgsc/timestep.hpp"

namespace dgsc {

/// Periodic problem u0 = exp(sin x), T = 3 pi / 4.
ProblemSpec periodic_benchmark();
/// Inflow problem u0 = sin x, u(0, t) = -sin t, T = pi.
ProblemSpec inflow_benchmark();
/// Both benchmarks, ids "ex1" and "ex2".
std::vector<ProblemSpec> builtin_problems();
ProblemSpec problem_by_id(const std::string& id);

enum class MeshKind { Uniform, Split };
MeshKind parse_mesh_kind(const std::string& text);
std::string to_string(MeshKind kind);
MeshPtr build_mesh(MeshKind kind, std::size_t n_cells);

/// How the time step is chosen for each mesh of a sweep.
///   auto          default_step_policy(k, h_min, T)
///   steps:C:P     C * N^P fixed steps
///   cfl:C:E       dt = C * h_min^E
struct StepRule {
  enum class Kind { Auto, Steps, Cfl };
  Kind kind = Kind::Auto;
  double coefficient = 0.0;
  double exponent = 0.0;

  StepPolicy policy_for(int k, std::size_t n_cells, double h_min, double t_end) const;
};
StepRule parse_step_rule(const std::string& text);
std::string to_string(const StepRule& rule);

/// Tableau id: "rk4", "ssprk33", or the path of a tableau file.
ButcherTableau resolve_tableau(const std::string& id);

struct ExperimentConfig {
  std::string problem = "ex1";
  int k = 3;
  MeshKind mesh = MeshKind::Split;
  std::vector<std::size_t> n_list;
  InitMethod method = InitMethod::CorrectedInterpolant;
  std::string tableau = "rk4";
  StepRule steps;
  std::string output_path;  // CSV target; empty disables
  std::string dump_dir;     // per-N dgfield dumps; empty disables

  /// Throws std::invalid_argument on an empty or non-doubling N list or a
  /// degree outside [1, kMaxDegree].
  void validate() const;
};

/// Mesh builder and N list matching the published runs of each benchmark.
ExperimentConfig default_config(const std::string& problem, int k);

/// N, 2N, ..., up to n_max.
std::vector<std::size_t> doubling_list(std::size_t n_min, std::size_t n_max);

/// Initializes, integrates to T and returns the final DG field on N cells.
ModalField solve(const ExperimentConfig& config, const ProblemSpec& problem, std::size_t n_cells);

/// Runs every N of the config (concurrently; results are ordered by N),
/// writes the CSV when output_path is set and returns the report. If a
/// later N fails, the rows finished before it are still written.
ErrorReport run_experiment(const ExperimentConfig& config);

/// `N,e1,...,e6,r1,...,r6`, 17 significant digits, empty cells for
/// missing rates.
void write_csv(std::ostream& out, const ErrorReport& report);
ErrorReport read_csv(std::istream& in);

/// Aligned table; values below the noise floor carry a trailing '*'.
void write_table(std::ostream& out, const ErrorReport& report, const std::string& title);

}  // namespace dgsc
