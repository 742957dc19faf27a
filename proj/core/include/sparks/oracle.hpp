#pragma once

#include <map>
#include <utility>

#include "sparks/spark.hpp"

namespace sparks::oracle {

/// Fourier data in plain doubles: f(t) = N t + C + sum_k (A_k sin + B_k cos).
struct FloatFourier {
  long winding = 0;
  double constant = 0.0;
  std::map<int, std::pair<double, double>> harmonics;  // k -> (A_k, B_k)

  [[nodiscard]] double value(double t) const;
  [[nodiscard]] double derivative(double t) const;
  [[nodiscard]] int max_k() const;
};

FloatFourier to_float_fourier(const CircleSpark0& s);

/// Composite Gauss-Legendre value of  int_0^1 f g' dt - N g(1),  reduced into
/// [0, 1). Panels scale with the highest harmonic so the rule integrates the
/// trigonometric integrand to rounding error.
double product_quadrature(const FloatFourier& f, const FloatFourier& g);

}  // namespace sparks::oracle
