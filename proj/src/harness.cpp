#include "dgsc/harness.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <future>
#include <iomanip>
#include <istream>
#include <numbers>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace dgsc {

ProblemSpec periodic_benchmark() {
  ProblemSpec p;
  p.name = "ex1";
  p.u0 = SmoothFunction::from_expression([](auto x) {
    using std::exp, std::sin;
    return exp(sin(x));
  });
  p.bc = BoundaryCondition::periodic();
  p.t_end = 0.75 * std::numbers::pi;
  return p;
}

ProblemSpec inflow_benchmark() {
  ProblemSpec p;
  p.name = "ex2";
  p.u0 = SmoothFunction::from_expression([](auto x) {
    using std::sin;
    return sin(x);
  });
  p.bc = BoundaryCondition::dirichlet([](double t) { return -std::sin(t); });
  p.t_end = std::numbers::pi;
  return p;
}

std::vector<ProblemSpec> builtin_problems() { return {periodic_benchmark(), inflow_benchmark()}; }

ProblemSpec problem_by_id(const std::string& id) {
  if (id == "ex1") return periodic_benchmark();
  if (id == "ex2") return inflow_benchmark();
  throw std::invalid_argument("unknown problem '" + id + "' (expected ex1 or ex2)");
}

MeshKind parse_mesh_kind(const std::string& text) {
  if (text == "uniform") return MeshKind::Uniform;
  if (text == "split") return MeshKind::Split;
  throw std::invalid_argument("unknown mesh kind '" + text + "'");
}

std::string to_string(MeshKind kind) { return kind == MeshKind::Uniform ? "uniform" : "split"; }

MeshPtr build_mesh(MeshKind kind, std::size_t n_cells) {
  return share(kind == MeshKind::Uniform ? uniform_mesh(n_cells) : split_mesh(n_cells));
}

StepPolicy StepRule::policy_for(int k, std::size_t n_cells, double h_min, double t_end) const {
  switch (kind) {
    case Kind::Auto: return default_step_policy(k, h_min, t_end);
    case Kind::Steps: {
      const double n = std::ceil(coefficient * std::pow(static_cast<double>(n_cells), exponent));
      return {FixedCount{static_cast<std::size_t>(std::max(n, 1.0))}, t_end};
    }
    case Kind::Cfl: return {CflLike{coefficient, exponent}, t_end};
  }
  throw std::logic_error("unhandled step rule");
}

StepRule parse_step_rule(const std::string& text) {
  if (text == "auto") return {};
  std::istringstream in(text);
  std::string kind;
  std::string a;
  std::string b;
  if (std::getline(in, kind, ':') && std::getline(in, a, ':') && std::getline(in, b)) {
    try {
      StepRule rule;
      rule.coefficient = std::stod(a);
      rule.exponent = std::stod(b);
      if (kind == "steps") {
        rule.kind = StepRule::Kind::Steps;
        return rule;
      }
      if (kind == "cfl") {
        rule.kind = StepRule::Kind::Cfl;
        return rule;
      }
    } catch (const std::logic_error&) {
      // fall through to the error below
    }
  }
  throw std::invalid_argument("bad step rule '" + text + "' (auto, steps:C:P or cfl:C:E)");
}

std::string to_string(const StepRule& rule) {
  std::ostringstream out;
  switch (rule.kind) {
    case StepRule::Kind::Auto: return "auto";
    case StepRule::Kind::Steps: out << "steps:" << rule.coefficient << ':' << rule.exponent; break;
    case StepRule::Kind::Cfl: out << "cfl:" << rule.coefficient << ':' << rule.exponent; break;
  }
  return out.str();
}

ButcherTableau resolve_tableau(const std::string& id) {
  if (id == "rk4" || id == "ssprk33") return builtin_tableau(id);
  std::ifstream in(id);
  if (!in) throw std::invalid_argument("unknown tableau '" + id + "' (not a builtin or readable file)");
  return parse_tableau(in, id);
}

void ExperimentConfig::validate() const {
  if (k < 1 || k > kMaxDegree) throw std::invalid_argument("degree k out of range");
  if (n_list.empty()) throw std::invalid_argument("empty N list");
  for (std::size_t i = 1; i < n_list.size(); ++i) {
    if (n_list[i] != 2 * n_list[i - 1]) throw std::invalid_argument("N list must double");
  }
  if (mesh == MeshKind::Split && n_list.front() % 2 != 0) {
    throw std::invalid_argument("split meshes need even N");
  }
}

std::vector<std::size_t> doubling_list(std::size_t n_min, std::size_t n_max) {
  if (n_min == 0 || n_max < n_min) throw std::invalid_argument("bad N range");
  std::vector<std::size_t> n;
  for (std::size_t v = n_min; v <= n_max; v *= 2) n.push_back(v);
  return n;
}

ExperimentConfig default_config(const std::string& problem, int k) {
  ExperimentConfig c;
  c.problem = problem;
  c.k = k;
  if (problem == "ex1") {
    c.mesh = MeshKind::Split;
    c.n_list = doubling_list(4, 256);
  } else if (problem == "ex2") {
    c.mesh = MeshKind::Uniform;
    c.n_list = doubling_list(2, 64);
    // RK4 loses order near the time-dependent inflow boundary, so the
    // published step counts (dt ~ h^2 or h^3) are used here.
    c.steps = k <= 3 ? StepRule{StepRule::Kind::Steps, 10.0, 2.0} : StepRule{StepRule::Kind::Steps, 5.0, 3.0};
  } else {
    throw std::invalid_argument("unknown problem '" + problem + "'");
  }
  return c;
}

ModalField solve(const ExperimentConfig& config, const ProblemSpec& problem, std::size_t n_cells) {
  const MeshPtr mesh = build_mesh(config.mesh, n_cells);
  const ModalField u0 = initialize(config.method, problem, mesh, config.k);
  const ButcherTableau tableau = resolve_tableau(config.tableau);
  const StepPolicy policy = config.steps.policy_for(config.k, n_cells, mesh->h_min(), problem.t_end);
  const BoundaryCondition bc = problem.bc;
  auto rhs = [&bc](const ModalField& u, double t) { return dg_rhs(u, bc, t); };
  return integrate(u0, rhs, policy, tableau).state;
}

ErrorReport run_experiment(const ExperimentConfig& config) {
  config.validate();
  const ProblemSpec problem = problem_by_id(config.problem);
  const SmoothFunction exact = problem.exact(problem.t_end);

  std::vector<std::future<ErrorSet>> jobs;
  jobs.reserve(config.n_list.size());
  for (std::size_t n : config.n_list) {
    jobs.push_back(std::async(std::launch::async, [&config, &problem, &exact, n] {
      const ModalField uh = solve(config, problem, n);
      if (!config.dump_dir.empty()) {
        std::filesystem::create_directories(config.dump_dir);
        std::ofstream dump(std::filesystem::path(config.dump_dir) /
                           (problem.name + "_k" + std::to_string(config.k) + "_N" +
                            std::to_string(n) + ".dgfield"));
        write_field(dump, uh);
      }
      return all_errors(uh, exact);
    }));
  }

  std::vector<std::size_t> done_n;
  std::vector<ErrorSet> done_errors;
  std::exception_ptr failure;
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    try {
      ErrorSet e = jobs[i].get();
      if (!failure) {
        done_n.push_back(config.n_list[i]);
        done_errors.push_back(e);
      }
    } catch (...) {
      if (!failure) failure = std::current_exception();
    }
  }

  ErrorReport report = rates(std::move(done_n), std::move(done_errors));
  if (!config.output_path.empty()) {
    std::ofstream out(config.output_path);
    if (!out) throw std::runtime_error("cannot open " + config.output_path);
    write_csv(out, report);
  }
  if (failure) std::rethrow_exception(failure);
  return report;
}

void write_csv(std::ostream& out, const ErrorReport& report) {
  out << "N,e1,e2,e3,e4,e5,e6,r1,r2,r3,r4,r5,r6\n";
  const auto precision = out.precision(17);
  for (std::size_t i = 0; i < report.n.size(); ++i) {
    out << report.n[i];
    for (double e : report.errors[i]) out << ',' << e;
    for (const auto& r : report.rates[i]) {
      out << ',';
      if (r) out << *r;
    }
    out << '\n';
  }
  out.precision(precision);
}

ErrorReport read_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != "N,e1,e2,e3,e4,e5,e6,r1,r2,r3,r4,r5,r6") {
    throw std::runtime_error("error CSV: unexpected header");
  }
  ErrorReport report;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string> cells;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    if (cells.size() == 1 + 2 * kNumMetrics - 1) cells.emplace_back();  // trailing empty rate
    if (cells.size() != 1 + 2 * kNumMetrics) throw std::runtime_error("error CSV: bad row '" + line + "'");
    report.n.push_back(static_cast<std::size_t>(std::stoull(cells[0])));
    ErrorSet e{};
    std::array<std::optional<double>, kNumMetrics> r{};
    for (std::size_t m = 0; m < kNumMetrics; ++m) {
      e[m] = std::stod(cells[1 + m]);
      const std::string& rc = cells[1 + kNumMetrics + m];
      if (!rc.empty()) r[m] = std::stod(rc);
    }
    report.errors.push_back(e);
    report.rates.push_back(r);
  }
  return report;
}

void write_table(std::ostream& out, const ErrorReport& report, const std::string& title) {
  out << title << '\n';
  char buf[64];
  out << std::setw(6) << "N";
  for (std::size_t m = 0; m < kNumMetrics; ++m) {
    out << std::setw(11) << ("e" + std::to_string(m + 1)) << std::setw(7) << "rate";
  }
  out << '\n';
  for (std::size_t i = 0; i < report.n.size(); ++i) {
    out << std::setw(6) << report.n[i];
    for (std::size_t m = 0; m < kNumMetrics; ++m) {
      std::snprintf(buf, sizeof buf, "%.2e%s", report.errors[i][m], report.unreliable(i, m) ? "*" : " ");
      out << std::setw(11) << buf;
      if (report.rates[i][m]) {
        std::snprintf(buf, sizeof buf, "%.2f", *report.rates[i][m]);
      } else {
        std::snprintf(buf, sizeof buf, "--");
      }
      out << std::setw(7) << buf;
    }
    out << '\n';
  }
}

}  // namespace dgsc
