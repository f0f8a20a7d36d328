#include "dgsc/smooth_function.hpp"

#include <stdexcept>
#include <string>

namespace dgsc {

SmoothFunction SmoothFunction::from_values(ValueFn fn) {
  SmoothFunction f;
  f.value_ = fn;
  f.jet_ = [fn](double x, int) { return std::vector<double>{fn(x)}; };
  f.max_order_ = 0;
  return f;
}

std::vector<double> SmoothFunction::jet(double x, int order) const {
  if (order < 0 || order > max_order_) {
    throw std::invalid_argument("derivative jet of order " + std::to_string(order) +
                                " requested, function supports " + std::to_string(max_order_));
  }
  return jet_(x, order);
}

SmoothFunction SmoothFunction::derivative(int n) const {
  if (n < 0 || n > max_order_) {
    throw std::invalid_argument("derivative order " + std::to_string(n) + " not available");
  }
  if (n == 0) return *this;
  SmoothFunction d;
  d.jet_ = [base = jet_, n](double x, int order) {
    std::vector<double> full = base(x, order + n);
    return std::vector<double>(full.begin() + n, full.end());
  };
  d.value_ = [base = jet_, n](double x) { return base(x, n)[static_cast<std::size_t>(n)]; };
  d.max_order_ = max_order_ == std::numeric_limits<int>::max() ? max_order_ : max_order_ - n;
  return d;
}

SmoothFunction SmoothFunction::shifted(double a) const {
  SmoothFunction s;
  s.value_ = [base = value_, a](double x) { return base(x - a); };
  s.jet_ = [base = jet_, a](double x, int order) { return base(x - a, order); };
  s.max_order_ = max_order_;
  return s;
}

SmoothFunction SmoothFunction::scaled(double factor) const {
  SmoothFunction s;
  s.value_ = [base = value_, factor](double x) { return factor * base(x); };
  s.jet_ = [base = jet_, factor](double x, int order) {
    std::vector<double> d = base(x, order);
    for (double& v : d) v *= factor;
    return d;
  };
  s.max_order_ = max_order_;
  return s;
}

}  // namespace dgsc
