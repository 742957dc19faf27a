#include "sparks/io.hpp"

#include <gtest/gtest.h>

#include "sparks/generators.hpp"

namespace sparks {
namespace {

const std::string kData = SPARKS_TEST_DATA;

TEST(Io, ScalarRoundTrip) {
  gen::Rng rng(61);
  for (int i = 0; i < 100; ++i) {
    const ExactScalar x = gen::scalar(rng, {14, 2, true, false});
    EXPECT_EQ(io::scalar_from_json(io::scalar_to_json(x)), x);
  }
  EXPECT_EQ(io::scalar_from_json(io::Json("3/6")), ExactScalar(make_rational(1, 2)));
  EXPECT_EQ(io::scalar_from_json(io::Json(4)), ExactScalar(4));
  EXPECT_THROW(io::scalar_from_json(io::Json("1/0")), io::ParseError);
  EXPECT_THROW(io::scalar_from_json(io::Json::array()), io::ParseError);
}

TEST(Io, PolyTrigAndSparkRoundTrip) {
  gen::Rng rng(62);
  for (int i = 0; i < 60; ++i) {
    const PolyTrig f = gen::polytrig(rng, {2, 4, 4, {10, 2, false, false}});
    EXPECT_EQ(io::polytrig_from_json(io::polytrig_to_json(f)), f);
    const CircleSpark0 s = gen::spark0(rng, {});
    EXPECT_EQ(io::spark0_from_json(io::spark0_to_json(s)), s);
  }
}

TEST(Io, SparkFiles) {
  EXPECT_EQ(io::spark0_from_json(io::read_json_file(kData + "/winding1.json")), CircleSpark0::make(1, 0));
  EXPECT_EQ(io::spark0_from_json(io::read_json_file(kData + "/sin2.json")),
            CircleSpark0::make(0, 0, {{2, {1, 0}}}));
  EXPECT_TRUE(io::spark0_from_json(io::read_json_file(kData + "/zero.json")).is_zero());
  EXPECT_THROW(io::spark0_from_json(io::read_json_file(kData + "/bad_field.json")), io::ParseError);
  EXPECT_THROW(io::read_json_file(kData + "/malformed.json"), io::ParseError);
  EXPECT_THROW(io::read_json_file(kData + "/missing.json"), io::ParseError);
}

TEST(Io, NerveAndCochains) {
  const Nerve n = io::nerve_from_json(io::read_json_file(kData + "/triangle_nerve.json"));
  EXPECT_EQ(n.all(), Nerve::triangle().all());
  EXPECT_EQ(io::nerve_from_json(io::nerve_to_json(n)).all(), n.all());
  const io::AnyCochain c = io::cochain_from_json(io::read_json_file(kData + "/c1_int.json"));
  EXPECT_EQ(io::ring_name(c), "Z");
  EXPECT_EQ(io::degree_of(c), 1);
  EXPECT_EQ(io::cochain_to_json(io::cochain_from_json(io::cochain_to_json(c))), io::cochain_to_json(c));

  gen::Rng rng(63);
  const auto q = gen::rational_cochain(rng, Nerve::from_maximal(4, {{0, 1, 2}, {1, 3}}), 1);
  const io::AnyCochain back = io::cochain_from_json(io::cochain_to_json(q));
  EXPECT_EQ(std::get<Cochain<Rational>>(back), q);
}

TEST(Io, Chains) {
  const Chain c = io::chain_from_json(io::read_json_file(kData + "/s3_cycle.json"));
  EXPECT_EQ(c.degree, 3);
  EXPECT_TRUE(boundary(c).coefficients.empty());
  EXPECT_EQ(io::chain_from_json(io::Json::array(), 3).degree, 3);
}

TEST(Io, BicochainAndDeligneRoundTrip) {
  gen::Rng rng(64);
  for (int i = 0; i < 40; ++i) {
    const BiCochain b = gen::bicochain(rng, static_cast<int>(rng.uniform(0, 2)), {1, 3, 2, {8, 1, false, false}});
    EXPECT_EQ(io::bicochain_from_json(io::bicochain_to_json(b)), b);
    const DeligneCochain d = gen::deligne(rng, static_cast<int>(rng.uniform(1, 2)),
                                          static_cast<int>(rng.uniform(0, 2)), {1, 3, 2, {8, 1, false, false}});
    EXPECT_EQ(io::deligne_from_json(io::deligne_to_json(d)), d);
  }
}

}  // namespace
}  // namespace sparks
