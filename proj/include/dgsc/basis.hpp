#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace dgsc {

/// Largest polynomial degree the library is built and tested for.
inline constexpr int kMaxDegree = 8;

/// Legendre polynomial L_m(s) by the three-term recurrence.
double legendre_eval(int m, double s);

/// L_m'(s) by the derivative recurrence L_{n+1}' = L_{n-1}' + (2n+1) L_n.
double legendre_deriv(int m, double s);

/// Fills values[m] = L_m(s) for m = 0..values.size()-1.
void legendre_values(double s, std::span<double> values);

/// Fills values[m] = L_m(s) and derivs[m] = L_m'(s).
void legendre_values_and_derivs(double s, std::span<double> values,
                                std::span<double> derivs);

/// Evaluates sum_m c[m] L_m(s). Templated so that it also works on
/// derivative jets.
template <class T>
T legendre_series(std::span<const double> c, const T& s) {
  if (c.empty()) return T(0.0);
  T prev(1.0);
  T sum = prev * c[0];
  if (c.size() == 1) return sum;
  T cur = s;
  sum = sum + cur * c[1];
  for (std::size_t n = 1; n + 1 < c.size(); ++n) {
    const double nn = static_cast<double>(n);
    T next = (cur * s * (2.0 * nn + 1.0) - prev * nn) * (1.0 / (nn + 1.0));
    prev = cur;
    cur = next;
    sum = sum + cur * c[n + 1];
  }
  return sum;
}

struct QuadratureRule {
  std::vector<double> nodes;    // ascending, in (-1, 1)
  std::vector<double> weights;  // positive, summing to 2
  int order = 0;                // exact for polynomials of degree <= order
};

/// n-point Gauss-Legendre rule on [-1, 1].
QuadratureRule gauss_rule(int n);

/// Left and right Radau point families of degree k on [-1, 1].
///
/// left_all holds the k+1 roots of L_{k+1} + L_k (it contains -1),
/// right_all the k+1 roots of L_{k+1} - L_k (it contains +1). The interior
/// sets drop the endpoint. All sets are sorted ascending.
struct RadauPointSet {
  int k = 0;
  std::vector<double> left_all;
  std::vector<double> right_all;
  std::vector<double> left_interior;
  std::vector<double> right_interior;
};

/// Throws std::invalid_argument for k outside [1, kMaxDegree] and
/// std::runtime_error if Newton refinement fails to converge.
RadauPointSet radau_points(int k);

}  // namespace dgsc
