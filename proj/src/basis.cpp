#include "dgsc/basis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

namespace dgsc {

namespace {

constexpr int kNewtonMaxIterations = 100;
constexpr double kNewtonTolerance = 1e-14;

void require_degree(int m) {
  if (m < 0) throw std::invalid_argument("Legendre degree must be non-negative");
}

// Newton refinement of a root of f starting at x0. Stops once the residual
// drops below kNewtonTolerance or the update stalls at rounding level.
template <class F>
double newton_root(F&& f_and_df, double x0) {
  double x = x0;
  for (int it = 0; it < kNewtonMaxIterations; ++it) {
    const auto [f, df] = f_and_df(x);
    if (std::abs(f) <= kNewtonTolerance) return x;
    const double dx = f / df;
    x -= dx;
    if (std::abs(dx) <= 4.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(x))) {
      return x;
    }
  }
  throw std::runtime_error("Newton refinement did not converge from seed " + std::to_string(x0));
}

}  // namespace

double legendre_eval(int m, double s) {
  require_degree(m);
  if (m == 0) return 1.0;
  double prev = 1.0;
  double cur = s;
  for (int n = 1; n < m; ++n) {
    const double next = ((2.0 * n + 1.0) * s * cur - n * prev) / (n + 1.0);
    prev = cur;
    cur = next;
  }
  return cur;
}

double legendre_deriv(int m, double s) {
  require_degree(m);
  if (m == 0) return 0.0;
  // L_{n+1}' = L_{n-1}' + (2n+1) L_n
  double dprev = 0.0;  // L_0'
  double dcur = 1.0;   // L_1'
  double lprev = 1.0;
  double lcur = s;
  for (int n = 1; n < m; ++n) {
    const double dnext = dprev + (2.0 * n + 1.0) * lcur;
    const double lnext = ((2.0 * n + 1.0) * s * lcur - n * lprev) / (n + 1.0);
    dprev = dcur;
    dcur = dnext;
    lprev = lcur;
    lcur = lnext;
  }
  return dcur;
}

void legendre_values(double s, std::span<double> values) {
  if (values.empty()) return;
  values[0] = 1.0;
  if (values.size() == 1) return;
  values[1] = s;
  for (std::size_t n = 1; n + 1 < values.size(); ++n) {
    const double nn = static_cast<double>(n);
    values[n + 1] = ((2.0 * nn + 1.0) * s * values[n] - nn * values[n - 1]) / (nn + 1.0);
  }
}

void legendre_values_and_derivs(double s, std::span<double> values, std::span<double> derivs) {
  legendre_values(s, values);
  if (derivs.empty()) return;
  derivs[0] = 0.0;
  if (derivs.size() == 1) return;
  derivs[1] = 1.0;
  for (std::size_t n = 1; n + 1 < derivs.size(); ++n) {
    derivs[n + 1] = derivs[n - 1] + (2.0 * static_cast<double>(n) + 1.0) * values[n];
  }
}

QuadratureRule gauss_rule(int n) {
  if (n < 1) throw std::invalid_argument("gauss_rule needs at least one point");
  QuadratureRule rule;
  rule.order = 2 * n - 1;
  rule.nodes.resize(static_cast<std::size_t>(n));
  rule.weights.resize(static_cast<std::size_t>(n));
  const int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) {
    // Tricomi seed for the i-th largest root.
    const double seed = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double x = newton_root(
        [n](double s) { return std::pair{legendre_eval(n, s), legendre_deriv(n, s)}; }, seed);
    if (n % 2 == 1 && i == half - 1) x = 0.0;
    const double d = legendre_deriv(n, x);
    const double w = 2.0 / ((1.0 - x * x) * d * d);
    rule.nodes[static_cast<std::size_t>(n - 1 - i)] = x;
    rule.nodes[static_cast<std::size_t>(i)] = -x;
    rule.weights[static_cast<std::size_t>(n - 1 - i)] = w;
    rule.weights[static_cast<std::size_t>(i)] = w;
  }
  return rule;
}

RadauPointSet radau_points(int k) {
  if (k < 1 || k > kMaxDegree) {
    throw std::invalid_argument("radau_points: degree must lie in [1, " +
                                std::to_string(kMaxDegree) + "]");
  }
  RadauPointSet set;
  set.k = k;

  auto left_poly = [k](double s) {
    return std::pair{legendre_eval(k + 1, s) + legendre_eval(k, s),
                     legendre_deriv(k + 1, s) + legendre_deriv(k, s)};
  };

  // Seeds are the Chebyshev analogues -cos(2 pi i / (2k+1)) of the left
  // Radau points, which interlace with the Legendre ones.
  set.left_all.push_back(-1.0);
  for (int i = 1; i <= k; ++i) {
    const double seed = -std::cos(std::numbers::pi * (2.0 * i) / (2.0 * k + 1.0));
    const double root = newton_root(left_poly, seed);
    if (!(root > -1.0 && root < 1.0)) {
      throw std::runtime_error("radau_points: root escaped the reference interval");
    }
    set.left_all.push_back(root);
  }
  std::sort(set.left_all.begin(), set.left_all.end());
  for (std::size_t i = 1; i < set.left_all.size(); ++i) {
    if (set.left_all[i] - set.left_all[i - 1] < 1e-8) {
      throw std::runtime_error("radau_points: Newton converged to a repeated root");
    }
  }

  // L_m(-s) = (-1)^m L_m(s) maps the left family onto the right one.
  for (auto it = set.left_all.rbegin(); it != set.left_all.rend(); ++it) {
    set.right_all.push_back(-*it);
  }

  for (double s : set.left_all) {
    if (std::abs(left_poly(s).first) > 1e-12) {
      throw std::runtime_error("radau_points: left residual check failed");
    }
  }
  for (double s : set.right_all) {
    if (std::abs(legendre_eval(k + 1, s) - legendre_eval(k, s)) > 1e-12) {
      throw std::runtime_error("radau_points: right residual check failed");
    }
  }

  set.left_interior.assign(set.left_all.begin() + 1, set.left_all.end());
  set.right_interior.assign(set.right_all.begin(), set.right_all.end() - 1);
  return set;
}

}  // namespace dgsc
