#include "sparks/scalars.hpp"

#include <gtest/gtest.h>
#include <mpfr.h>

#include <cmath>

#include "sparks/generators.hpp"

namespace sparks {
namespace {

const ExactScalar kPi = ExactScalar::pi();

ExactScalar q(long n, long d = 1) { return ExactScalar(make_rational(n, d)); }

// Independent evaluation of a + b*pi directly in MPFR at 200 bits.
double mpfr_linear(const Rational& a, const Rational& b) {
  mpfr_t pi, x, y;
  mpfr_inits2(200, pi, x, y, static_cast<mpfr_ptr>(nullptr));
  mpfr_const_pi(pi, MPFR_RNDN);
  mpfr_set_q(x, b.get_mpq_t(), MPFR_RNDN);
  mpfr_mul(x, x, pi, MPFR_RNDN);
  mpfr_set_q(y, a.get_mpq_t(), MPFR_RNDN);
  mpfr_add(x, x, y, MPFR_RNDN);
  const double out = mpfr_get_d(x, MPFR_RNDN);
  mpfr_clears(pi, x, y, static_cast<mpfr_ptr>(nullptr));
  return out;
}

TEST(Rational, ParseAndPrint) {
  EXPECT_EQ(parse_rational("6/4"), make_rational(3, 2));
  EXPECT_EQ(parse_rational("-7"), make_rational(-7));
  EXPECT_EQ(to_string(make_rational(-3, 6)), "-1/2");
  EXPECT_EQ(to_string(make_rational(4, 2)), "2");
  EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
  EXPECT_THROW(parse_rational("x"), std::invalid_argument);
  EXPECT_EQ(floor_of(make_rational(-1, 2)), -1);
}

TEST(ExactScalar, SpecArithmetic) {
  EXPECT_EQ(q(1, 2) + q(1, 2), ExactScalar(1));
  EXPECT_EQ(kPi * (ExactScalar(1) / kPi), ExactScalar(1));
  EXPECT_EQ(ExactScalar(2) * kPi / ExactScalar(2), kPi);
}

TEST(ExactScalar, CanonicalFormIsUnique) {
  // (pi^2 - 1) / (pi - 1) reduces to pi + 1.
  const ExactScalar lhs = (kPi * kPi - ExactScalar(1)) / (kPi - ExactScalar(1));
  EXPECT_EQ(lhs, kPi + ExactScalar(1));
  EXPECT_TRUE(lhs.denominator() == PiPoly(Rational(1)));
  // Denominators are monic.
  const ExactScalar r = ExactScalar(1) / (ExactScalar(2) * kPi + ExactScalar(4));
  EXPECT_EQ(r.denominator().leading(), Rational(1));
}

TEST(ExactScalar, DivisionByZeroThrows) {
  EXPECT_THROW(ExactScalar(1) / ExactScalar(0), ArithmeticError);
  EXPECT_THROW(ExactScalar(0).inverse(), ArithmeticError);
}

TEST(ExactScalar, SignAndFloor) {
  EXPECT_EQ((kPi - ExactScalar(3)).sign(), 1);
  EXPECT_EQ((ExactScalar(22) / ExactScalar(7) - kPi).sign(), 1);
  EXPECT_EQ((q(355, 113) - kPi).sign(), 1);
  EXPECT_EQ((q(314159, 100000) - kPi).sign(), -1);
  EXPECT_EQ(kPi.floor(), 3);
  EXPECT_EQ((-kPi).floor(), -4);
  EXPECT_EQ((ExactScalar(1) / kPi).floor(), 0);
}

TEST(ExactScalar, PiFreePartShiftsWithIntegers) {
  const ExactScalar x = (kPi * kPi + q(1, 3)) / (kPi + ExactScalar(2));
  EXPECT_EQ((x + ExactScalar(5)).pi_free_part(), x.pi_free_part() + 5);
}

TEST(ExactScalar, FieldAxiomsOnRandomInputs) {
  gen::Rng rng(7);
  const gen::ScalarShape shape{12, 2, true, false};
  for (int i = 0; i < 200; ++i) {
    const ExactScalar a = gen::scalar(rng, shape);
    const ExactScalar b = gen::scalar(rng, shape);
    const ExactScalar c = gen::scalar(rng, shape);
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a - a, ExactScalar(0));
    if (!b.is_zero()) EXPECT_EQ(a / b * b, a);
  }
}

TEST(CircleNumber, Reduce) {
  EXPECT_EQ(circle_reduce(q(-1, 2)), circle_reduce(q(1, 2)));
  EXPECT_EQ(circle_reduce(q(-1, 2)).representative(), q(1, 2));
  EXPECT_TRUE(circle_reduce(ExactScalar(3)).is_zero());
  EXPECT_EQ(circle_reduce(kPi).representative(), kPi);
  EXPECT_FALSE(circle_eq(circle_reduce(kPi), circle_reduce(kPi - ExactScalar(3)) + circle_reduce(q(1, 2))));
  EXPECT_EQ(circle_reduce(kPi + ExactScalar(4)), circle_reduce(kPi));
  EXPECT_EQ(circle_reduce(q(1, 2)).to_string(), "1/2 mod 1");
}

TEST(ToFloat, SpecValues) {
  EXPECT_DOUBLE_EQ(to_float(kPi, 15), 3.141592653589793);
  EXPECT_DOUBLE_EQ(to_float(q(1, 3)), 1.0 / 3.0);
  EXPECT_DOUBLE_EQ(to_float(ExactScalar(1) + ExactScalar(2) * kPi), 7.283185307179586);
}

TEST(ToFloat, MatchesIndependentMpfr) {
  gen::Rng rng(11);
  for (int i = 0; i < 100; ++i) {
    const Rational a = gen::rational(rng, 20);
    const Rational b = gen::rational(rng, 20);
    const ExactScalar x = ExactScalar(a) + ExactScalar(b) * kPi;
    EXPECT_DOUBLE_EQ(to_float(x), mpfr_linear(a, b));
  }
}

TEST(CircleDistance, Wraps) {
  EXPECT_NEAR(circle_distance(0.99, 0.01), 0.02, 1e-15);
  EXPECT_NEAR(circle_distance(-0.25, 0.75), 0.0, 1e-15);
  EXPECT_NEAR(circle_distance(0.0, 0.5), 0.5, 1e-15);
}

TEST(CircleNumber, ToFloatIsInUnitInterval) {
  const CircleNumber c = circle_reduce(ExactScalar(-2) * kPi);
  EXPECT_NEAR(c.to_float(), 0.716814692820414, 1e-12);
  EXPECT_EQ(c.to_string(), "-2π mod 1");
}

}  // namespace
}  // namespace sparks
