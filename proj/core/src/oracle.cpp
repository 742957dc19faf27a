#include "sparks/oracle.hpp"

#include <boost/math/quadrature/gauss.hpp>

#include <cmath>
#include <numbers>

namespace sparks::oracle {

double FloatFourier::value(double t) const {
  double v = static_cast<double>(winding) * t + constant;
  for (const auto& [k, ab] : harmonics) {
    const double x = 2.0 * std::numbers::pi * k * t;
    v += ab.first * std::sin(x) + ab.second * std::cos(x);
  }
  return v;
}

double FloatFourier::derivative(double t) const {
  double v = static_cast<double>(winding);
  for (const auto& [k, ab] : harmonics) {
    const double w = 2.0 * std::numbers::pi * k;
    v += w * (ab.first * std::cos(w * t) - ab.second * std::sin(w * t));
  }
  return v;
}

int FloatFourier::max_k() const { return harmonics.empty() ? 0 : harmonics.rbegin()->first; }

FloatFourier to_float_fourier(const CircleSpark0& s) {
  FloatFourier f;
  f.winding = s.winding().get_si();
  f.constant = to_float(s.constant());
  for (const auto& [k, h] : s.harmonics()) f.harmonics[k] = {to_float(h.sin), to_float(h.cos)};
  return f;
}

double product_quadrature(const FloatFourier& f, const FloatFourier& g) {
  using Rule = boost::math::quadrature::gauss<double, 20>;
  const int panels = 2 * (f.max_k() + g.max_k()) + 2;
  const double width = 1.0 / panels;
  double integral = 0.0;
  for (int i = 0; i < panels; ++i) {
    const double lo = i * width;
    integral += Rule::integrate([&](double t) { return f.value(t) * g.derivative(t); }, lo, lo + width);
  }
  const double v = integral - static_cast<double>(f.winding) * g.value(1.0);
  return v - std::floor(v);
}

}  // namespace sparks::oracle
