#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace sparks {

using Integer = mpz_class;
using Rational = mpq_class;

/// Division by zero and other undefined field operations.
class ArithmeticError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

Rational make_rational(long num, long den = 1);

/// Parses "p/q" or "p". Throws std::invalid_argument on malformed text or q == 0.
Rational parse_rational(std::string_view text);

/// "p/q", with "/q" omitted when q == 1.
std::string to_string(const Rational& value);

Integer floor_of(const Rational& value);
bool is_integer(const Rational& value);

/// Polynomial in a formal transcendental symbol pi with rational coefficients.
/// Coefficient i multiplies pi^i. The coefficient vector never has a zero
/// trailing entry, so the zero polynomial is the empty vector.
class PiPoly {
 public:
  PiPoly() = default;
  PiPoly(const Rational& constant);  // NOLINT(google-explicit-constructor)
  explicit PiPoly(std::vector<Rational> coeffs);

  static PiPoly monomial(int power, const Rational& coeff = Rational(1));

  [[nodiscard]] int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  [[nodiscard]] bool is_zero() const { return coeffs_.empty(); }
  [[nodiscard]] bool is_constant() const { return coeffs_.size() <= 1; }
  [[nodiscard]] bool is_monomial() const;
  /// Lowest power with a nonzero coefficient; -1 for the zero polynomial.
  [[nodiscard]] int valuation() const;

  [[nodiscard]] const Rational& coeff(int power) const;
  [[nodiscard]] const Rational& leading() const;
  [[nodiscard]] std::span<const Rational> coefficients() const { return coeffs_; }

  /// Multiplies by pi^k (k >= 0).
  [[nodiscard]] PiPoly times_pi_power(int k) const;
  /// Divides by pi^k; requires valuation() >= k.
  [[nodiscard]] PiPoly divided_by_pi_power(int k) const;
  [[nodiscard]] PiPoly monic() const;

  PiPoly& operator+=(const PiPoly& other);
  PiPoly& operator-=(const PiPoly& other);
  PiPoly& operator*=(const PiPoly& other);
  PiPoly& operator*=(const Rational& scale);

  friend PiPoly operator+(PiPoly a, const PiPoly& b) { return a += b; }
  friend PiPoly operator-(PiPoly a, const PiPoly& b) { return a -= b; }
  friend PiPoly operator*(PiPoly a, const PiPoly& b) { return a *= b; }
  friend PiPoly operator*(PiPoly a, const Rational& s) { return a *= s; }
  PiPoly operator-() const;

  friend bool operator==(const PiPoly& a, const PiPoly& b) { return a.coeffs_ == b.coeffs_; }

  /// Euclidean division over Q[pi]. Throws ArithmeticError when den is zero.
  static std::pair<PiPoly, PiPoly> divmod(const PiPoly& num, const PiPoly& den);

 private:
  void trim();

  std::vector<Rational> coeffs_;
};

/// Monic gcd over Q[pi]; gcd(0, 0) is 0.
PiPoly gcd(PiPoly a, PiPoly b);

/// An element of the field Q(pi), held as a reduced fraction num/den with a
/// monic denominator. Since pi is transcendental, two values are equal as real
/// numbers exactly when their canonical forms coincide.
class ExactScalar {
 public:
  ExactScalar() : den_(Rational(1)) {}
  ExactScalar(long value);             // NOLINT(google-explicit-constructor)
  ExactScalar(int value) : ExactScalar(static_cast<long>(value)) {}  // NOLINT
  ExactScalar(const Rational& value);  // NOLINT(google-explicit-constructor)
  ExactScalar(const Integer& value);   // NOLINT(google-explicit-constructor)
  ExactScalar(PiPoly num, PiPoly den);

  static ExactScalar pi();
  static ExactScalar pi_power(int power, const Rational& coeff = Rational(1));

  [[nodiscard]] const PiPoly& numerator() const { return num_; }
  [[nodiscard]] const PiPoly& denominator() const { return den_; }

  [[nodiscard]] bool is_zero() const { return num_.is_zero(); }
  /// True when the value has no pi-dependence.
  [[nodiscard]] bool is_rational() const { return num_.is_constant() && den_.is_constant(); }
  [[nodiscard]] bool is_integer() const;
  /// Throws std::logic_error unless is_rational().
  [[nodiscard]] Rational rational_value() const;

  /// Constant coefficient of the polynomial part of num/den. Adding an
  /// integer n to the value adds n to this and nothing else.
  [[nodiscard]] Rational pi_free_part() const;

  /// -1, 0 or +1, decided exactly for rationals and by refining an interval
  /// enclosure of pi otherwise.
  [[nodiscard]] int sign() const;
  [[nodiscard]] Integer floor() const;

  [[nodiscard]] ExactScalar inverse() const;

  ExactScalar& operator+=(const ExactScalar& other);
  ExactScalar& operator-=(const ExactScalar& other);
  ExactScalar& operator*=(const ExactScalar& other);
  ExactScalar& operator/=(const ExactScalar& other);

  friend ExactScalar operator+(ExactScalar a, const ExactScalar& b) { return a += b; }
  friend ExactScalar operator-(ExactScalar a, const ExactScalar& b) { return a -= b; }
  friend ExactScalar operator*(ExactScalar a, const ExactScalar& b) { return a *= b; }
  friend ExactScalar operator/(ExactScalar a, const ExactScalar& b) { return a /= b; }
  ExactScalar operator-() const;

  friend bool operator==(const ExactScalar& a, const ExactScalar& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

 private:
  void canonicalize();

  PiPoly num_;
  PiPoly den_;
};

/// Value as a double, with pi evaluated to `precision` decimal digits and the
/// fraction evaluated at a working precision above that.
double to_float(const ExactScalar& value, int precision = 17);

std::string to_string(const PiPoly& value);
std::string to_string(const ExactScalar& value);
std::ostream& operator<<(std::ostream& os, const ExactScalar& value);

/// A class in R/Z with an exact representative. The representative's
/// pi-free part lies in [0, 1).
class CircleNumber {
 public:
  CircleNumber() = default;
  explicit CircleNumber(const ExactScalar& value);

  [[nodiscard]] const ExactScalar& representative() const { return value_; }
  [[nodiscard]] bool is_zero() const { return value_.is_zero(); }
  /// Representative value reduced into [0, 1) in floating point.
  [[nodiscard]] double to_float(int precision = 17) const;
  /// "<representative> mod 1".
  [[nodiscard]] std::string to_string() const;

  CircleNumber operator-() const { return CircleNumber(-value_); }
  friend CircleNumber operator+(const CircleNumber& a, const CircleNumber& b) {
    return CircleNumber(a.value_ + b.value_);
  }
  friend CircleNumber operator-(const CircleNumber& a, const CircleNumber& b) {
    return CircleNumber(a.value_ - b.value_);
  }
  friend bool operator==(const CircleNumber& a, const CircleNumber& b);

 private:
  ExactScalar value_;
};

CircleNumber circle_reduce(const ExactScalar& value);
bool circle_eq(const CircleNumber& a, const CircleNumber& b);

/// Distance between two reals viewed as points of R/Z, in [0, 1/2].
double circle_distance(double a, double b);

}  // namespace sparks
