#include "sparks/deligne.hpp"

#include <gtest/gtest.h>

#include "sparks/generators.hpp"

namespace sparks {
namespace {

const ExactScalar kPi = ExactScalar::pi();
const PolyTrig kT = PolyTrig::monomial(1);

ExactScalar q(long n, long d = 1) { return ExactScalar(make_rational(n, d)); }

CircleSpark0 winding(long n) { return CircleSpark0::make(n, 0); }
CircleSpark0 constant(const ExactScalar& c) { return CircleSpark0::make(0, c); }

gen::PolyTrigShape shape() { return {1, 3, 3, {6, 1, false, false}}; }
gen::SparkShape spark_shape() { return {4, 4, 2, {10, 1, false, false}}; }

TEST(DeligneD, IntegerColumn) {
  DeligneCochain c{1, {}, {}};
  c.add_z(0, {1, 4, 9});
  DeligneCochain expected{1, {}, BiCochain::single({0, 0}, constants({1, 4, 9}))};
  expected.add_z(1, {3, 5, 8});
  EXPECT_EQ(deligne_D(c), expected);

  DeligneCochain c1{2, {}, {}};
  c1.add_z(1, {2, 0, -1});
  EXPECT_EQ(deligne_D(c1), (DeligneCochain{2, {}, BiCochain::single({1, 0}, -constants({2, 0, -1}))}));
}

TEST(DeligneD, LastColumnIsDeltaOnly) {
  const Sections f = uniform(kT * ExactScalar(3));
  const DeligneCochain level1{1, {}, BiCochain::single({0, 0}, f)};
  EXPECT_EQ(deligne_D(level1), (DeligneCochain{1, {}, BiCochain::single({1, 0}, circle_delta(f))}));
  const DeligneCochain level2{2, {}, BiCochain::single({0, 0}, f)};
  BiCochain both = BiCochain::single({1, 0}, circle_delta(f));
  both.add({0, 1}, uniform(PolyTrig::constant(3)));
  EXPECT_EQ(deligne_D(level2), (DeligneCochain{2, {}, both}));
}

TEST(DeligneD, SquaresToZero) {
  gen::Rng rng(51);
  for (int i = 0; i < 100; ++i) {
    const int level = static_cast<int>(rng.uniform(1, 2));
    const DeligneCochain c = gen::deligne(rng, level, static_cast<int>(rng.uniform(0, 2)), shape());
    EXPECT_TRUE(deligne_D(deligne_D(c)).is_zero());
  }
}

TEST(DeligneCochain, Validation) {
  const DeligneCochain bad{1, {}, BiCochain::single({0, 1}, uniform(kT))};
  EXPECT_THROW(bad.validate(), std::invalid_argument);
  EXPECT_THROW(deligne_D(bad), std::invalid_argument);
  EXPECT_THROW((DeligneCochain{1, {}, {}} + DeligneCochain{2, {}, {}}), std::invalid_argument);
}

TEST(SparkToDeligne, Examples) {
  const DeligneCochain c = spark_to_deligne(constant(q(2, 5)));
  EXPECT_TRUE(c.z.empty());
  EXPECT_EQ(c.forms, BiCochain::single({0, 0}, uniform(PolyTrig::constant(q(2, 5)))));

  const DeligneCochain w = spark_to_deligne(winding(3));
  ASSERT_EQ(w.z.size(), 1U);
  EXPECT_EQ(w.z.at(1), (IntSections{0, 0, 3}));
  EXPECT_EQ(w.forms, BiCochain::single({0, 0}, uniform(kT * ExactScalar(3))));
  EXPECT_TRUE(deligne_D(w).is_zero());

  EXPECT_TRUE(spark_to_deligne(CircleSpark0{}).is_zero());
}

TEST(DeligneToSpark, Examples) {
  const DeligneCochain c{1, {}, BiCochain::single({0, 0}, uniform(PolyTrig::constant(q(7, 3))))};
  EXPECT_EQ(deligne_to_spark0(c), constant(q(1, 3)));

  DeligneCochain w{1, {}, BiCochain::single({0, 0}, uniform(kT * ExactScalar(-2)))};
  w.add_z(1, {0, 0, -2});
  EXPECT_EQ(deligne_to_spark0(w), winding(-2));

  DeligneCochain open{1, {}, BiCochain::single({0, 0}, uniform(kT))};
  EXPECT_THROW(deligne_to_spark0(open), PreconditionError);
  EXPECT_THROW(deligne_to_spark1(c), std::invalid_argument);
}

TEST(RoundTrip, LevelOne) {
  gen::Rng rng(52);
  for (int i = 0; i < 100; ++i) {
    const CircleSpark0 x = gen::spark0(rng, spark_shape());
    EXPECT_EQ(deligne_to_spark0(spark_to_deligne(x)), x);
    // Moving the representative by a D-image leaves the class alone.
    const DeligneCochain g = gen::deligne(rng, 1, 0, shape());
    EXPECT_EQ(deligne_to_spark0(spark_to_deligne(x) + deligne_D(g)), x);
  }
}

TEST(RoundTrip, LevelTwo) {
  gen::Rng rng(53);
  for (int i = 0; i < 60; ++i) {
    const Spark1Cocycle c = product_engine(gen::spark0(rng, spark_shape()), gen::spark0(rng, spark_shape()));
    EXPECT_EQ(deligne_to_spark1(spark_to_deligne(c)), c);
    const DeligneCochain g = gen::deligne(rng, 2, 1, shape());
    const Spark1Cocycle moved = deligne_to_spark1(spark_to_deligne(c) + deligne_D(g));
    EXPECT_EQ(reduce_to_circle(moved), reduce_to_circle(c));
  }
}

TEST(DeligneCup, ChainMap) {
  gen::Rng rng(54);
  for (int i = 0; i < 100; ++i) {
    const DeligneCochain x = gen::deligne(rng, 1, static_cast<int>(rng.uniform(0, 1)), shape());
    const DeligneCochain y = gen::deligne(rng, 1, static_cast<int>(rng.uniform(0, 1)), shape());
    const int deg_x = x.is_zero() ? 0 : x.total_degree();
    const DeligneCochain second = deligne_cup_cochain(x, deligne_D(y));
    const DeligneCochain negated = DeligneCochain{2, {}, {}} - second;
    const DeligneCochain rhs = deligne_cup_cochain(deligne_D(x), y) + (deg_x % 2 == 0 ? second : negated);
    EXPECT_EQ(deligne_D(deligne_cup_cochain(x, y)), rhs) << to_string(x) << "\n" << to_string(y);
  }
}

TEST(DeligneCup, Examples) {
  EXPECT_TRUE(deligne_product(constant(q(1, 3)), constant(q(2, 7))).is_zero());
  EXPECT_EQ(deligne_product(winding(2), winding(3)), CircleNumber(ExactScalar(3)));
  EXPECT_EQ(deligne_product(winding(1), winding(3)), CircleNumber(q(1, 2)));
  const CircleSpark0 s = CircleSpark0::make(0, 0, {{1, {1, 0}}});
  const CircleSpark0 c = CircleSpark0::make(0, 0, {{1, {0, 1}}});
  EXPECT_EQ(deligne_product(s, c), CircleNumber(-kPi));
}

TEST(DeligneCup, OnlyLevelOneByOne) {
  const DeligneClass one(spark_to_deligne(winding(1)));
  const DeligneClass two(spark_to_deligne(product_engine(winding(1), winding(1))));
  EXPECT_THROW(deligne_cup(one, two), std::invalid_argument);
  EXPECT_THROW(deligne_cup(two, two), std::invalid_argument);
  EXPECT_NO_THROW(deligne_cup(one, one));
  EXPECT_THROW(DeligneClass(DeligneCochain{1, {}, BiCochain::single({0, 0}, uniform(kT))}), PreconditionError);
}

TEST(RingAgreement, Examples) {
  EXPECT_TRUE(ring_agreement_check(winding(1), winding(1)));
  EXPECT_TRUE(ring_agreement_check(CircleSpark0{}, CircleSpark0::make(3, q(1, 4), {{2, {1, kPi}}})));
  gen::Rng rng(55);
  for (int i = 0; i < 40; ++i) {
    EXPECT_TRUE(ring_agreement_check(gen::spark0(rng, spark_shape()), gen::spark0(rng, spark_shape())));
  }
}

TEST(StructuralChecks, BothLevels) {
  for (int level : {1, 2}) {
    const StructuralReport r = structural_checks(level);
    EXPECT_FALSE(r.checks.empty());
    for (const auto& c : r.checks) EXPECT_TRUE(c.ok) << c.name;
  }
  EXPECT_THROW(structural_checks(3), std::invalid_argument);
}

}  // namespace
}  // namespace sparks
