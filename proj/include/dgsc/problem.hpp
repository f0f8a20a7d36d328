#pragma once

#include <string>

#include "dgsc/dg_operator.hpp"
#include "dgsc/smooth_function.hpp"

namespace dgsc {

/// Linear advection u_t + u_x = 0 with initial datum u0, exact solution
/// u(x, t) = u0(x - t) and a boundary condition on [0, 2 pi].
struct ProblemSpec {
  std::string name;
  SmoothFunction u0;
  BoundaryCondition bc;
  double t_end = 0.0;

  /// u(., t) as a smooth function of x.
  SmoothFunction exact(double t) const { return u0.shifted(t); }
  double exact(double x, double t) const { return u0(x - t); }
  double exact_dx(double x, double t) const { return u0.jet(x - t, 1)[1]; }
};

}  // namespace dgsc
