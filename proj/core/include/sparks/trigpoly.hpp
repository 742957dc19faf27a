#pragma once

#include <compare>
#include <cstdint>
#include <map>

#include "sparks/scalars.hpp"

namespace sparks {

struct Harmonic {
  ExactScalar sin;
  ExactScalar cos;

  friend bool operator==(const Harmonic&, const Harmonic&) = default;
};

/// C + sum_k (A_k sin(2 pi k t) + B_k cos(2 pi k t)), finitely many k >= 1.
struct TrigSeries {
  ExactScalar constant;
  std::map<int, Harmonic> harmonics;

  [[nodiscard]] bool is_zero() const;
  friend bool operator==(const TrigSeries&, const TrigSeries&) = default;
};

/// Finite sum of t^j * cos(2 pi k t) and t^j * sin(2 pi k t) with ExactScalar
/// coefficients. The basis is linearly independent, so the sparse term map is
/// a unique representation; zero coefficients are never stored.
class PolyTrig {
 public:
  enum class Wave : std::uint8_t { Cos, Sin };

  /// t^power * wave(2 pi freq t); Cos with freq 0 is the monomial t^power.
  struct Basis {
    int power = 0;
    int freq = 0;
    Wave wave = Wave::Cos;

    friend auto operator<=>(const Basis&, const Basis&) = default;
  };

  PolyTrig() = default;

  static PolyTrig constant(const ExactScalar& c);
  /// c * t^power
  static PolyTrig monomial(int power, const ExactScalar& c = ExactScalar(1));
  /// c * sin(2 pi k t)
  static PolyTrig sin(int k, const ExactScalar& c = ExactScalar(1));
  /// c * cos(2 pi k t)
  static PolyTrig cos(int k, const ExactScalar& c = ExactScalar(1));
  static PolyTrig term(const Basis& basis, const ExactScalar& c);
  /// t^power * series
  static PolyTrig from_series(int power, const TrigSeries& series);

  [[nodiscard]] const std::map<Basis, ExactScalar>& terms() const { return terms_; }
  [[nodiscard]] ExactScalar coefficient(const Basis& basis) const;
  /// Grouped by t-power.
  [[nodiscard]] std::map<int, TrigSeries> series() const;

  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] bool is_constant() const;
  /// Constant term; zero when absent.
  [[nodiscard]] ExactScalar constant_term() const;
  /// Highest t-power present, -1 for zero.
  [[nodiscard]] int max_power() const;
  [[nodiscard]] int max_frequency() const;

  PolyTrig& operator+=(const PolyTrig& other);
  PolyTrig& operator-=(const PolyTrig& other);
  PolyTrig& operator*=(const ExactScalar& scale);

  friend PolyTrig operator+(PolyTrig a, const PolyTrig& b) { return a += b; }
  friend PolyTrig operator-(PolyTrig a, const PolyTrig& b) { return a -= b; }
  friend PolyTrig operator*(PolyTrig a, const ExactScalar& s) { return a *= s; }
  friend PolyTrig operator*(const ExactScalar& s, PolyTrig a) { return a *= s; }
  friend PolyTrig operator*(const PolyTrig& a, const PolyTrig& b);
  PolyTrig operator-() const;

  friend bool operator==(const PolyTrig&, const PolyTrig&) = default;

  void add_term(const Basis& basis, const ExactScalar& c);

 private:
  std::map<Basis, ExactScalar> terms_;
};

/// Exact product; trig products are resolved into harmonics k + k' and |k - k'|.
PolyTrig pt_mul(const PolyTrig& f, const PolyTrig& g);

PolyTrig pt_derivative(const PolyTrig& f);

/// Primitive with zero constant term; pt_derivative(pt_antiderivative(f)) == f.
PolyTrig pt_antiderivative(const PolyTrig& f);

/// t -> f(t + m).
PolyTrig pt_shift(const PolyTrig& f, long m);

/// Exact value at an integer point, where sin(2 pi k t) = 0 and cos(2 pi k t) = 1.
ExactScalar pt_eval_integer(const PolyTrig& f, long t);

double pt_eval_float(const PolyTrig& f, double t);

std::string to_string(const PolyTrig& f);

/// Lift N t + periodic of a circle-valued function: body(t + 1) - body(t) = N.
struct WindingFunction {
  Integer winding;
  PolyTrig body;
};

/// Validates the winding property; throws std::invalid_argument otherwise.
WindingFunction make_winding_function(PolyTrig body);

}  // namespace sparks
