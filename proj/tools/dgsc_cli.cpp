#include <cstddef>
#include <exception>
#include <filesystem>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "acceptance.hpp"
#include "dgsc/harness.hpp"

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitAcceptance = 2;

struct RunOptions {
  std::string problem = "ex1";
  int k = 3;
  int method = 4;
  std::size_t n_min = 0;
  std::size_t n_max = 0;
  std::string mesh;
  std::string tableau = "rk4";
  std::string steps;  // empty: per-problem default
  std::string out;
  std::string dump_dir;
};

dgsc::ExperimentConfig to_config(const RunOptions& o) {
  dgsc::ExperimentConfig c = dgsc::default_config(o.problem, o.k);
  c.method = dgsc::init_method_from_int(o.method);
  if (!o.mesh.empty()) c.mesh = dgsc::parse_mesh_kind(o.mesh);
  const std::size_t n_min = o.n_min > 0 ? o.n_min : c.n_list.front();
  const std::size_t n_max = o.n_max > 0 ? o.n_max : c.n_list.back();
  c.n_list = dgsc::doubling_list(n_min, n_max);
  c.tableau = o.tableau;
  if (!o.steps.empty()) c.steps = dgsc::parse_step_rule(o.steps);
  c.output_path = o.out;
  c.dump_dir = o.dump_dir;
  return c;
}

std::string title_for(const dgsc::ExperimentConfig& c) {
  return c.problem + "  k=" + std::to_string(c.k) + "  method=" +
         std::to_string(static_cast<int>(c.method)) + "  mesh=" + dgsc::to_string(c.mesh) +
         "  tableau=" + c.tableau + "  steps=" + dgsc::to_string(c.steps);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Upwind DG for 1D linear advection: superconvergence experiments"};
  app.require_subcommand(1);

  RunOptions run_opts;
  auto* run = app.add_subcommand("run", "Single convergence experiment");
  app.set_config("--config", "", "INI configuration file; options go under [run] or [sweep]");
  run->add_option("--problem", run_opts.problem, "ex1 (periodic) or ex2 (inflow)")
      ->check(CLI::IsMember({"ex1", "ex2"}));
  run->add_option("--k", run_opts.k, "Polynomial degree")->check(CLI::Range(1, 8));
  run->add_option("--method", run_opts.method, "Initialization method 1-4")->check(CLI::Range(1, 4));
  run->add_option("--nmin", run_opts.n_min, "Coarsest mesh");
  run->add_option("--nmax", run_opts.n_max, "Finest mesh");
  run->add_option("--mesh", run_opts.mesh, "uniform or split")->check(CLI::IsMember({"uniform", "split"}));
  run->add_option("--tableau", run_opts.tableau, "rk4, ssprk33 or a tableau file");
  run->add_option("--steps", run_opts.steps, "auto, steps:C:P or cfl:C:E");
  run->add_option("--out", run_opts.out, "CSV output path");
  run->add_option("--dump-dir", run_opts.dump_dir, "Directory for final-field dumps");

  RunOptions sweep_opts;
  std::string out_dir = ".";
  auto* sweep = app.add_subcommand("sweep", "All methods on both benchmarks for one degree");
  sweep->add_option("--k", sweep_opts.k, "Polynomial degree")->check(CLI::Range(1, 8));
  sweep->add_option("--nmax", sweep_opts.n_max, "Finest mesh");
  sweep->add_option("--tableau", sweep_opts.tableau, "rk4, ssprk33 or a tableau file");
  sweep->add_option("--steps", sweep_opts.steps, "auto, steps:C:P or cfl:C:E");
  sweep->add_option("--out-dir", out_dir, "Directory for CSV files");

  auto* check = app.add_subcommand("check", "Acceptance suite; exit code 2 on failure");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*run) {
      const dgsc::ExperimentConfig config = to_config(run_opts);
      const dgsc::ErrorReport report = dgsc::run_experiment(config);
      dgsc::write_table(std::cout, report, title_for(config));
      return 0;
    }
    if (*sweep) {
      std::filesystem::create_directories(out_dir);
      for (const std::string problem : {"ex1", "ex2"}) {
        for (int method = 1; method <= 4; ++method) {
          RunOptions o = sweep_opts;
          o.problem = problem;
          o.method = method;
          o.out = (std::filesystem::path(out_dir) /
                   (problem + "_k" + std::to_string(o.k) + "_m" + std::to_string(method) + ".csv"))
                      .string();
          const dgsc::ExperimentConfig config = to_config(o);
          const dgsc::ErrorReport report = dgsc::run_experiment(config);
          dgsc::write_table(std::cout, report, title_for(config));
          std::cout << '\n';
        }
      }
      return 0;
    }
    if (*check) {
      const auto results = dgsc::run_acceptance(std::cout);
      std::size_t failed = 0;
      for (const auto& r : results) failed += r.passed ? 0 : 1;
      std::cout << results.size() - failed << "/" << results.size() << " criteria passed\n";
      return failed == 0 ? 0 : kExitAcceptance;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
