#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>

#include "dgsc/harness.hpp"

namespace dgsc {
namespace {

constexpr double kPi = std::numbers::pi;

TEST(Problems, Benchmarks) {
  const ProblemSpec ex1 = problem_by_id("ex1");
  EXPECT_EQ(ex1.name, "ex1");
  EXPECT_EQ(ex1.bc.kind, BoundaryKind::Periodic);
  EXPECT_NEAR(ex1.t_end, 0.75 * kPi, 1e-15);
  EXPECT_NEAR(ex1.exact(1.0, 0.25), std::exp(std::sin(0.75)), 1e-15);
  EXPECT_NEAR(ex1.exact_dx(1.0, 0.0), std::cos(1.0) * std::exp(std::sin(1.0)), 1e-14);

  const ProblemSpec ex2 = problem_by_id("ex2");
  EXPECT_EQ(ex2.bc.kind, BoundaryKind::DirichletInflow);
  EXPECT_NEAR(ex2.t_end, kPi, 1e-15);
  for (double t : {0.0, 0.4, 2.0}) EXPECT_NEAR(ex2.bc.g(t), ex2.exact(0.0, t), 1e-15);

  EXPECT_EQ(builtin_problems().size(), 2u);
  EXPECT_THROW(problem_by_id("ex3"), std::invalid_argument);
}

TEST(Meshes, KindParsing) {
  EXPECT_EQ(parse_mesh_kind("uniform"), MeshKind::Uniform);
  EXPECT_EQ(parse_mesh_kind("split"), MeshKind::Split);
  EXPECT_EQ(to_string(MeshKind::Split), "split");
  EXPECT_THROW(parse_mesh_kind("graded"), std::invalid_argument);
  EXPECT_EQ(build_mesh(MeshKind::Split, 8)->num_cells(), 8u);
}

TEST(StepRules, Parsing) {
  EXPECT_EQ(parse_step_rule("auto").kind, StepRule::Kind::Auto);
  const StepRule steps = parse_step_rule("steps:10:2");
  EXPECT_EQ(steps.kind, StepRule::Kind::Steps);
  EXPECT_EQ(steps.coefficient, 10.0);
  EXPECT_EQ(steps.exponent, 2.0);
  EXPECT_EQ(to_string(steps), "steps:10:2");
  const StepRule cfl = parse_step_rule("cfl:0.5:2");
  EXPECT_EQ(cfl.kind, StepRule::Kind::Cfl);
  EXPECT_EQ(to_string(cfl), "cfl:0.5:2");
  for (const char* bad : {"", "steps", "steps:10", "cfl:a:2", "rk:1:2"}) {
    EXPECT_THROW(parse_step_rule(bad), std::invalid_argument) << bad;
  }
}

TEST(StepRules, Policies) {
  const StepPolicy fixed = parse_step_rule("steps:5:3").policy_for(4, 8, 0.1, 1.0);
  EXPECT_EQ(std::get<FixedCount>(fixed.mode).steps, 2560u);
  const StepPolicy cfl = parse_step_rule("cfl:0.5:2").policy_for(4, 8, 0.1, 1.0);
  EXPECT_DOUBLE_EQ(plan_steps(cfl, 0.1).dt, 0.005);
}

TEST(Config, DefaultsAndValidation) {
  const ExperimentConfig ex1 = default_config("ex1", 3);
  EXPECT_EQ(ex1.mesh, MeshKind::Split);
  EXPECT_EQ(ex1.n_list.front(), 4u);
  EXPECT_EQ(ex1.n_list.back(), 256u);
  EXPECT_NO_THROW(ex1.validate());
  const ExperimentConfig ex2 = default_config("ex2", 4);
  EXPECT_EQ(ex2.steps.kind, StepRule::Kind::Steps);
  EXPECT_EQ(ex2.steps.exponent, 3.0);
  EXPECT_THROW(default_config("ex9", 2), std::invalid_argument);

  ExperimentConfig bad = ex1;
  bad.k = 0;
  EXPECT_THROW(bad.validate(), std::invalid_argument);
  bad = ex1;
  bad.n_list = {4, 12};
  EXPECT_THROW(bad.validate(), std::invalid_argument);
  bad = ex1;
  bad.n_list = {3, 6};
  EXPECT_THROW(bad.validate(), std::invalid_argument);
  bad = ex1;
  bad.n_list.clear();
  EXPECT_THROW(bad.validate(), std::invalid_argument);

  EXPECT_EQ(doubling_list(2, 17), (std::vector<std::size_t>{2, 4, 8, 16}));
  EXPECT_THROW(doubling_list(0, 4), std::invalid_argument);
}

TEST(Tableaux, ResolveBuiltinOrFile) {
  EXPECT_EQ(resolve_tableau("rk4").order, 4);
  const auto path = std::filesystem::temp_directory_path() / "dgsc_test_heun.tab";
  {
    std::ofstream out(path);
    out << "2 2\n0 0\n1 0\n0.5 0.5\n0 1\n";
  }
  EXPECT_EQ(resolve_tableau(path.string()).stages(), 2u);
  std::filesystem::remove(path);
  EXPECT_THROW(resolve_tableau("no_such_tableau"), std::invalid_argument);
}

ExperimentConfig small_config() {
  ExperimentConfig c = default_config("ex2", 2);
  c.n_list = doubling_list(4, 16);
  return c;
}

TEST(Experiment, CsvRoundTripAndDeterminism) {
  const ErrorReport a = run_experiment(small_config());
  const ErrorReport b = run_experiment(small_config());
  std::ostringstream first;
  std::ostringstream second;
  write_csv(first, a);
  write_csv(second, b);
  EXPECT_EQ(first.str(), second.str());

  std::istringstream in(first.str());
  const ErrorReport back = read_csv(in);
  ASSERT_EQ(back.n, a.n);
  for (std::size_t i = 0; i < a.n.size(); ++i) {
    for (std::size_t m = 0; m < kNumMetrics; ++m) {
      EXPECT_EQ(back.errors[i][m], a.errors[i][m]);
      EXPECT_EQ(back.rates[i][m].has_value(), a.rates[i][m].has_value());
      if (a.rates[i][m]) EXPECT_EQ(*back.rates[i][m], *a.rates[i][m]);
    }
  }
  EXPECT_EQ(first.str().substr(0, first.str().find('\n')), "N,e1,e2,e3,e4,e5,e6,r1,r2,r3,r4,r5,r6");
}

TEST(Experiment, ErrorsDecreaseUnderRefinement) {
  const ErrorReport r = run_experiment(small_config());
  for (std::size_t i = 1; i < r.n.size(); ++i) {
    for (std::size_t m = 0; m < kNumMetrics; ++m) EXPECT_LT(r.errors[i][m], r.errors[i - 1][m]);
  }
}

TEST(Experiment, CsvRejectsBadHeader) {
  std::istringstream in("N,e1\n4,1\n");
  EXPECT_THROW(read_csv(in), std::runtime_error);
}

TEST(Experiment, TableMarksNoiseFloor) {
  ErrorSet a{};
  a.fill(1e-3);
  ErrorSet b = a;
  b[2] = 1e-15;
  std::ostringstream out;
  write_table(out, rates({4, 8}, {a, b}), "title");
  EXPECT_NE(out.str().find("1.00e-15*"), std::string::npos);
  EXPECT_NE(out.str().find("title"), std::string::npos);
}

}  // namespace
}  // namespace dgsc
