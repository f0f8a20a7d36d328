#include <gtest/gtest.h>

#include <cmath>

#include "dgsc/jet.hpp"
#include "dgsc/smooth_function.hpp"
#include "oracles.hpp"

namespace dgsc {
namespace {

SmoothFunction exp_sin() {
  return SmoothFunction::from_expression([](auto x) { return exp(sin(x)); });
}

TEST(Jet, ArithmeticOnPolynomials) {
  const Jet x = Jet::variable(2.0, 4);
  const Jet p = x * x * x - 2.0 * x + 1.0;
  const auto d = p.derivatives();
  ASSERT_EQ(d.size(), 5u);
  EXPECT_DOUBLE_EQ(d[0], 5.0);
  EXPECT_DOUBLE_EQ(d[1], 10.0);
  EXPECT_DOUBLE_EQ(d[2], 12.0);
  EXPECT_DOUBLE_EQ(d[3], 6.0);
  EXPECT_DOUBLE_EQ(d[4], 0.0);
}

TEST(Jet, QuotientAndTranscendentals) {
  const Jet x = Jet::variable(0.3, 3);
  const auto q = (1.0 / (1.0 + x)).derivatives();
  EXPECT_NEAR(q[0], 1.0 / 1.3, 1e-15);
  EXPECT_NEAR(q[1], -1.0 / (1.3 * 1.3), 1e-15);
  EXPECT_NEAR(q[2], 2.0 / std::pow(1.3, 3), 1e-14);
  EXPECT_NEAR(q[3], -6.0 / std::pow(1.3, 4), 1e-13);
  const auto s = sin(x).derivatives();
  const auto c = cos(x).derivatives();
  EXPECT_NEAR(s[1], std::cos(0.3), 1e-15);
  EXPECT_NEAR(s[3], -std::cos(0.3), 1e-15);
  EXPECT_NEAR(c[2], -std::cos(0.3), 1e-15);
  const auto e = exp(x).derivatives();
  for (double v : e) EXPECT_NEAR(v, std::exp(0.3), 1e-14);
}

TEST(SmoothFunction, JetMatchesFiniteDifferences) {
  const SmoothFunction f = exp_sin();
  for (double x : {0.0, 0.7, 2.1, 4.4}) {
    const auto jet = f.jet(x, 6);
    ASSERT_EQ(jet.size(), 7u);
    EXPECT_DOUBLE_EQ(jet[0], std::exp(std::sin(x)));
    for (int n = 1; n <= 6; ++n) {
      const SmoothFunction lower = f.derivative(n - 1);
      const double fd = oracle::central_difference(lower, x, 1e-4);
      EXPECT_NEAR(jet[n], fd, 1e-6 * std::max(1.0, std::abs(fd))) << "x=" << x << " n=" << n;
    }
  }
}

TEST(SmoothFunction, ClosedFormDerivatives) {
  const SmoothFunction f = exp_sin();
  const double x = 1.1;
  const double e = std::exp(std::sin(x));
  const auto jet = f.jet(x, 2);
  EXPECT_NEAR(jet[1], std::cos(x) * e, 1e-14);
  EXPECT_NEAR(jet[2], (std::cos(x) * std::cos(x) - std::sin(x)) * e, 1e-14);
}

TEST(SmoothFunction, ConstantExpressionHasFullJet) {
  const SmoothFunction c = SmoothFunction::from_expression([](auto) { return 3.0; });
  const auto jet = c.jet(0.5, 3);
  ASSERT_EQ(jet.size(), 4u);
  EXPECT_EQ(jet[0], 3.0);
  EXPECT_EQ(jet[3], 0.0);
}

TEST(SmoothFunction, ShiftAndScale) {
  const SmoothFunction f = SmoothFunction::from_expression([](auto x) { return sin(x); });
  const SmoothFunction g = f.shifted(0.4);
  EXPECT_NEAR(g(1.0), std::sin(0.6), 1e-15);
  EXPECT_NEAR(g.jet(1.0, 1)[1], std::cos(0.6), 1e-15);
  const SmoothFunction h = f.scaled(-2.0);
  EXPECT_NEAR(h(0.3), -2.0 * std::sin(0.3), 1e-15);
  EXPECT_NEAR(h.jet(0.3, 2)[2], 2.0 * std::sin(0.3), 1e-15);
  EXPECT_NEAR(f.derivative(2)(0.3), -std::sin(0.3), 1e-15);
}

TEST(SmoothFunction, ValueOnlyFunctionsRefuseJets) {
  const SmoothFunction f = SmoothFunction::from_values([](double x) { return x * x; });
  EXPECT_DOUBLE_EQ(f(3.0), 9.0);
  EXPECT_EQ(f.max_jet_order(), 0);
  EXPECT_DOUBLE_EQ(f.jet(3.0, 0)[0], 9.0);
  EXPECT_THROW(f.jet(3.0, 1), std::invalid_argument);
}

}  // namespace
}  // namespace dgsc
