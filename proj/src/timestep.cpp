#include "dgsc/timestep.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <stdexcept>

namespace dgsc {

void ButcherTableau::validate() const {
  const std::size_t s = stages();
  if (s == 0) throw std::invalid_argument("tableau has no stages");
  if (a.size() != s || c.size() != s) throw std::invalid_argument("tableau dimensions disagree");
  double bsum = 0.0;
  for (double v : b) bsum += v;
  if (std::abs(bsum - 1.0) > 1e-14) throw std::invalid_argument("tableau weights do not sum to 1");
  for (std::size_t i = 0; i < s; ++i) {
    if (a[i].size() != s) throw std::invalid_argument("tableau row has wrong length");
    double rowsum = 0.0;
    for (std::size_t j = 0; j < s; ++j) {
      if (j >= i && a[i][j] != 0.0) throw std::invalid_argument("tableau is not explicit");
      rowsum += a[i][j];
    }
    if (std::abs(rowsum - c[i]) > 1e-14) throw std::invalid_argument("tableau abscissae inconsistent");
  }
}

ButcherTableau rk4_tableau() {
  return {"rk4",
          4,
          {{0.0, 0.0, 0.0, 0.0}, {0.5, 0.0, 0.0, 0.0}, {0.0, 0.5, 0.0, 0.0}, {0.0, 0.0, 1.0, 0.0}},
          {1.0 / 6.0, 1.0 / 3.0, 1.0 / 3.0, 1.0 / 6.0},
          {0.0, 0.5, 0.5, 1.0}};
}

ButcherTableau ssprk33_tableau() {
  return {"ssprk33",
          3,
          {{0.0, 0.0, 0.0}, {1.0, 0.0, 0.0}, {0.25, 0.25, 0.0}},
          {1.0 / 6.0, 1.0 / 6.0, 2.0 / 3.0},
          {0.0, 1.0, 0.5}};
}

ButcherTableau builtin_tableau(const std::string& id) {
  if (id == "rk4") return rk4_tableau();
  if (id == "ssprk33") return ssprk33_tableau();
  throw std::invalid_argument("unknown tableau '" + id + "'");
}

ButcherTableau parse_tableau(std::istream& in, std::string name) {
  std::size_t s = 0;
  ButcherTableau t;
  t.name = std::move(name);
  if (!(in >> s >> t.order) || s == 0) throw std::invalid_argument("tableau: bad `stages order` line");
  auto read = [&in](double& v) {
    if (!(in >> v)) throw std::invalid_argument("tableau: truncated coefficient list");
  };
  t.a.assign(s, std::vector<double>(s, 0.0));
  for (auto& row : t.a) {
    for (double& v : row) read(v);
  }
  t.b.resize(s);
  for (double& v : t.b) read(v);
  t.c.resize(s);
  for (double& v : t.c) read(v);
  t.validate();
  return t;
}

StepPlan plan_steps(const StepPolicy& policy, double h_min) {
  if (policy.t_end < 0.0) throw std::invalid_argument("negative final time");
  if (policy.t_end == 0.0) return {0, 0.0};
  if (const auto* fixed = std::get_if<FixedCount>(&policy.mode)) {
    if (fixed->steps == 0) throw std::invalid_argument("step count must be positive");
    return {fixed->steps, policy.t_end / static_cast<double>(fixed->steps)};
  }
  const auto& cfl = std::get<CflLike>(policy.mode);
  const double dt = cfl.coefficient * std::pow(h_min, cfl.exponent);
  if (!(dt > 0.0) || !std::isfinite(dt)) throw std::invalid_argument("time step must be positive");
  // Guard against ceil rounding up a count that already divides t_end.
  auto steps = static_cast<std::size_t>(std::ceil(policy.t_end / dt * (1.0 - 1e-12)));
  return {std::max<std::size_t>(steps, 1), dt};
}

StepPolicy default_step_policy(int k, double h_min, double t_end) {
  const double linear = 0.05 * h_min;
  const double exponent = std::ceil((2.0 * k + 1.0) / 4.0);
  const double power = 0.5 * std::pow(h_min, exponent);
  if (linear <= power) return {CflLike{0.05, 1.0}, t_end};
  return {CflLike{0.5, exponent}, t_end};
}

ModalField rk_step(const ModalField& state, const RightHandSide& rhs, double t, double dt,
                   const ButcherTableau& tableau) {
  const std::size_t s = tableau.stages();
  std::vector<ModalField> k;
  k.reserve(s);
  for (std::size_t i = 0; i < s; ++i) {
    ModalField stage = state;
    for (std::size_t j = 0; j < i; ++j) {
      if (tableau.a[i][j] != 0.0) stage.axpy(dt * tableau.a[i][j], k[j]);
    }
    k.push_back(rhs(stage, t + tableau.c[i] * dt));
  }
  ModalField next = state;
  for (std::size_t i = 0; i < s; ++i) {
    if (tableau.b[i] != 0.0) next.axpy(dt * tableau.b[i], k[i]);
  }
  return next;
}

IntegrationResult integrate(const ModalField& state0, const RightHandSide& rhs,
                            const StepPolicy& policy, const ButcherTableau& tableau,
                            const StepObserver& observer) {
  tableau.validate();
  const StepPlan plan = plan_steps(policy, state0.mesh().h_min());
  IntegrationResult result{state0, 0, 0.0};
  if (observer) observer(result.state, 0.0, 0);
  if (plan.steps == 0) return result;
  const bool fixed = std::holds_alternative<FixedCount>(policy.mode);
  double t = 0.0;
  for (std::size_t n = 1; n <= plan.steps; ++n) {
    const double t_next = n == plan.steps ? policy.t_end
                          : fixed ? policy.t_end * static_cast<double>(n) / static_cast<double>(plan.steps)
                                  : plan.dt * static_cast<double>(n);
    const double dt = t_next - t;
    if (!(dt > 0.0)) throw std::invalid_argument("non-positive time step");
    result.state = rk_step(result.state, rhs, t, dt, tableau);
    t = t_next;
    if (observer) observer(result.state, t, n);
  }
  result.steps = plan.steps;
  result.t_final = t;
  return result;
}

}  // namespace dgsc
