#pragma once

#include <functional>
#include <limits>
#include <memory>
#include <vector>

#include "dgsc/jet.hpp"

namespace dgsc {

/// A smooth scalar function of one variable with exact derivative jets.
///
/// Built from a generic expression that is callable both with double and
/// with Jet, e.g. `[](auto x) { using std::exp, std::sin; return exp(sin(x)); }`.
/// Functions built from a plain double callable have no jets.
class SmoothFunction {
 public:
  using ValueFn = std::function<double(double)>;
  using JetFn = std::function<std::vector<double>(double, int)>;

  SmoothFunction() = default;

  template <class Expr>
  static SmoothFunction from_expression(Expr expr) {
    SmoothFunction f;
    f.value_ = [expr](double x) { return static_cast<double>(expr(x)); };
    f.jet_ = [expr](double x, int order) {
      std::vector<double> d = Jet(expr(Jet::variable(x, order))).derivatives();
      d.resize(static_cast<std::size_t>(order) + 1, 0.0);
      return d;
    };
    f.max_order_ = std::numeric_limits<int>::max();
    return f;
  }

  /// Pointwise-only function; requesting derivatives throws.
  static SmoothFunction from_values(ValueFn fn);

  double operator()(double x) const { return value_(x); }

  /// Derivatives u^(0)..u^(order) at x. Throws std::invalid_argument when
  /// order exceeds max_jet_order().
  std::vector<double> jet(double x, int order) const;

  int max_jet_order() const { return max_order_; }

  /// n-th derivative as a function in its own right.
  SmoothFunction derivative(int n = 1) const;

  /// x -> f(x - a).
  SmoothFunction shifted(double a) const;

  /// x -> factor * f(x).
  SmoothFunction scaled(double factor) const;

 private:
  ValueFn value_;
  JetFn jet_;
  int max_order_ = 0;
};

}  // namespace dgsc
