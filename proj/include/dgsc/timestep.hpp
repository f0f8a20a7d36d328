#pragma once

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include "dgsc/field.hpp"

namespace dgsc {

/// Explicit Runge-Kutta scheme in Butcher form.
struct ButcherTableau {
  std::string name;
  int order = 0;
  std::vector<std::vector<double>> a;  // stages x stages, strictly lower triangular
  std::vector<double> b;
  std::vector<double> c;

  std::size_t stages() const { return b.size(); }

  /// Throws std::invalid_argument unless the tableau is explicit and
  /// consistent (sum b = 1, c_i = sum_j a_ij, both to 1e-14).
  void validate() const;
};

/// Classical four-stage fourth-order scheme.
ButcherTableau rk4_tableau();
/// Three-stage third-order strong-stability-preserving scheme.
ButcherTableau ssprk33_tableau();
/// Looks up "rk4" or "ssprk33".
ButcherTableau builtin_tableau(const std::string& id);

/// Text format: `stages order`, then `stages` rows of a, then b, then c.
/// All entries are whitespace separated.
ButcherTableau parse_tableau(std::istream& in, std::string name = "custom");

struct FixedCount {
  std::size_t steps = 0;
};

/// dt = coefficient * h_min^exponent.
struct CflLike {
  double coefficient = 0.0;
  double exponent = 1.0;
};

struct StepPolicy {
  std::variant<FixedCount, CflLike> mode;
  double t_end = 0.0;
};

/// Step count and nominal step size. With CflLike the count is rounded up
/// and the final step is shortened to land on t_end.
struct StepPlan {
  std::size_t steps = 0;
  double dt = 0.0;
};

StepPlan plan_steps(const StepPolicy& policy, double h_min);

/// dt = min(0.05 h_min, 0.5 h_min^ceil((2k+1)/4)), which keeps the RK4
/// error below the h^{2k+1} spatial scale.
StepPolicy default_step_policy(int k, double h_min, double t_end);

using RightHandSide = std::function<ModalField(const ModalField&, double)>;
using StepObserver = std::function<void(const ModalField&, double, std::size_t)>;

/// One explicit RK step; stage i evaluates the right-hand side at t + c_i dt.
ModalField rk_step(const ModalField& state, const RightHandSide& rhs, double t, double dt,
                   const ButcherTableau& tableau);

struct IntegrationResult {
  ModalField state;
  std::size_t steps = 0;
  double t_final = 0.0;
};

/// Fixed-step integration from t = 0 to policy.t_end. The observer, if
/// given, sees the state after every step (and the initial state with
/// step index 0).
IntegrationResult integrate(const ModalField& state0, const RightHandSide& rhs,
                            const StepPolicy& policy, const ButcherTableau& tableau,
                            const StepObserver& observer = {});

}  // namespace dgsc
