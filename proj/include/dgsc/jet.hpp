#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <utility>
#include <vector>

namespace dgsc {

/// Truncated Taylor series in one variable: coeff(i) = f^(i)(x0) / i!.
///
/// Binary operations on jets of different lengths treat the missing
/// coefficients as zero, so plain constants are length-one jets.
class Jet {
 public:
  Jet() : c_(1, 0.0) {}
  Jet(double constant) : c_(1, constant) {}  // NOLINT(google-explicit-constructor)

  /// The identity function expanded about x0, truncated at `order`.
  static Jet variable(double x0, int order) {
    Jet j;
    j.c_.assign(static_cast<std::size_t>(order) + 1, 0.0);
    j.c_[0] = x0;
    if (order >= 1) j.c_[1] = 1.0;
    return j;
  }

  std::size_t size() const { return c_.size(); }
  double coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0.0; }
  double value() const { return c_[0]; }

  /// f^(i)(x0) for i = 0..size()-1.
  std::vector<double> derivatives() const {
    std::vector<double> d(c_.size());
    double factorial = 1.0;
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (i > 0) factorial *= static_cast<double>(i);
      d[i] = c_[i] * factorial;
    }
    return d;
  }

  Jet operator-() const {
    Jet r = *this;
    for (double& v : r.c_) v = -v;
    return r;
  }

  friend Jet operator+(const Jet& a, const Jet& b) {
    Jet r;
    r.c_.resize(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = a.coeff(i) + b.coeff(i);
    return r;
  }
  friend Jet operator-(const Jet& a, const Jet& b) { return a + (-b); }

  friend Jet operator*(const Jet& a, const Jet& b) {
    if (b.size() == 1) return a.scaled(b.c_[0]);
    if (a.size() == 1) return b.scaled(a.c_[0]);
    Jet r;
    r.c_.assign(std::max(a.size(), b.size()), 0.0);
    for (std::size_t n = 0; n < r.c_.size(); ++n) {
      double s = 0.0;
      for (std::size_t i = 0; i <= n; ++i) s += a.coeff(i) * b.coeff(n - i);
      r.c_[n] = s;
    }
    return r;
  }

  friend Jet operator/(const Jet& a, const Jet& b) {
    if (b.size() == 1) return a.scaled(1.0 / b.c_[0]);
    Jet q;
    q.c_.assign(std::max(a.size(), b.size()), 0.0);
    for (std::size_t n = 0; n < q.c_.size(); ++n) {
      double s = a.coeff(n);
      for (std::size_t i = 1; i <= n; ++i) s -= b.coeff(i) * q.c_[n - i];
      q.c_[n] = s / b.c_[0];
    }
    return q;
  }

  friend Jet exp(const Jet& a) {
    Jet e;
    e.c_.assign(a.size(), 0.0);
    e.c_[0] = std::exp(a.c_[0]);
    for (std::size_t n = 1; n < a.size(); ++n) {
      double s = 0.0;
      for (std::size_t i = 1; i <= n; ++i) s += static_cast<double>(i) * a.c_[i] * e.c_[n - i];
      e.c_[n] = s / static_cast<double>(n);
    }
    return e;
  }

  friend Jet sin(const Jet& a) { return sin_cos(a).first; }
  friend Jet cos(const Jet& a) { return sin_cos(a).second; }

  friend std::pair<Jet, Jet> sin_cos(const Jet& a) {
    Jet s;
    Jet c;
    s.c_.assign(a.size(), 0.0);
    c.c_.assign(a.size(), 0.0);
    s.c_[0] = std::sin(a.c_[0]);
    c.c_[0] = std::cos(a.c_[0]);
    for (std::size_t n = 1; n < a.size(); ++n) {
      double ss = 0.0;
      double cc = 0.0;
      for (std::size_t i = 1; i <= n; ++i) {
        const double w = static_cast<double>(i) * a.c_[i];
        ss += w * c.c_[n - i];
        cc += w * s.c_[n - i];
      }
      s.c_[n] = ss / static_cast<double>(n);
      c.c_[n] = -cc / static_cast<double>(n);
    }
    return {s, c};
  }

 private:
  Jet scaled(double f) const {
    Jet r = *this;
    for (double& v : r.c_) v *= f;
    return r;
  }

  std::vector<double> c_;
};

}  // namespace dgsc
