#include "sparks/fuzz.hpp"

#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

#include "sparks/generators.hpp"

namespace sparks {

namespace {

using CaseFn = std::function<std::optional<std::string>(gen::Rng&)>;

std::string describe(const BiCochain& a, const BiCochain& b) {
  return "a =\n" + to_string(a) + "b =\n" + to_string(b);
}

std::optional<std::string> leibniz_case(gen::Rng& rng) {
  const gen::PolyTrigShape shape{2, 3, 2, {6, 0, false, false}};
  const int da = static_cast<int>(rng.uniform(0, 2));
  const int db = static_cast<int>(rng.uniform(0, 2));
  const BiCochain a = gen::bicochain(rng, da, shape);
  const BiCochain b = gen::bicochain(rng, db, shape);
  const BiCochain lhs = total_D(bicx_cup(a, b));
  const BiCochain second = bicx_cup(a, total_D(b));
  const BiCochain rhs = bicx_cup(total_D(a), b) + (da % 2 == 0 ? second : -second);
  if (lhs == rhs) return std::nullopt;
  return "D(a u b) != Da u b + (-1)^deg(a) a u Db\n" + describe(a, b);
}

std::optional<std::string> assoc_case(gen::Rng& rng) {
  const gen::PolyTrigShape shape{1, 3, 2, {6, 0, false, false}};
  const BiCochain a = gen::bicochain(rng, static_cast<int>(rng.uniform(0, 1)), shape);
  const BiCochain b = gen::bicochain(rng, static_cast<int>(rng.uniform(0, 1)), shape);
  const BiCochain c = gen::bicochain(rng, static_cast<int>(rng.uniform(0, 1)), shape);
  if (bicx_cup(bicx_cup(a, b), c) != bicx_cup(a, bicx_cup(b, c))) {
    return "bicx_cup not associative\n" + describe(a, b) + "c =\n" + to_string(c);
  }
  const Nerve n = gen::nerve(rng, static_cast<int>(rng.uniform(2, 6)), 3, 4);
  const int dims = n.dimension();
  const int r = static_cast<int>(rng.uniform(0, dims));
  const int s = static_cast<int>(rng.uniform(0, dims - r));
  const int t = static_cast<int>(rng.uniform(0, dims - r - s));
  const auto x = gen::rational_cochain(rng, n, r);
  const auto y = gen::rational_cochain(rng, n, s);
  const auto z = gen::rational_cochain(rng, n, t);
  if (cech_cup(n, cech_cup(n, x, y), z) != cech_cup(n, x, cech_cup(n, y, z))) {
    return "cech_cup not associative on a nerve with " + std::to_string(n.all().size()) + " simplices";
  }
  return std::nullopt;
}

std::optional<std::string> commut_case(gen::Rng& rng) {
  const CircleSpark0 x = gen::spark0(rng, {});
  const CircleSpark0 y = gen::spark0(rng, {});
  const CircleNumber xy = reduce_to_circle(product_engine(x, y));
  const CircleNumber yx = reduce_to_circle(product_engine(y, x));
  if (xy == -yx) return std::nullopt;
  return "x*y != -(y*x)\nx: " + to_string(x) + "\ny: " + to_string(y) + "\nx*y = " + xy.to_string() +
         "\ny*x = " + yx.to_string();
}

std::optional<std::string> roundtrip_case(gen::Rng& rng) {
  const CircleSpark0 x = gen::spark0(rng, {});
  const CircleSpark0 back = deligne_to_spark0(spark_to_deligne(x));
  if (!(back == x)) return "level-1 round trip changed " + to_string(x) + " into " + to_string(back);
  const CircleSpark0 y = gen::spark0(rng, {});
  const Spark1Cocycle product = product_engine(x, y);
  const Spark1Cocycle again = deligne_to_spark1(spark_to_deligne(product));
  if (!(again == product)) return "level-2 round trip changed the product of " + to_string(x) + " and " + to_string(y);
  return std::nullopt;
}

std::optional<std::string> agreement_case(gen::Rng& rng) {
  const CircleSpark0 x = gen::spark0(rng, {});
  const CircleSpark0 y = gen::spark0(rng, {});
  const CircleNumber closed = product_closed_form(x, y);
  const CircleNumber engine = reduce_to_circle(product_engine(x, y));
  const CircleNumber deligne = deligne_product(x, y);
  if (closed == engine && closed == deligne) return std::nullopt;
  return "pipelines disagree\nx: " + to_string(x) + "\ny: " + to_string(y) + "\nclosed = " + closed.to_string() +
         "\nengine = " + engine.to_string() + "\ndeligne = " + deligne.to_string();
}

const std::map<std::string, CaseFn>& registry() {
  static const std::map<std::string, CaseFn> suites{
      {"leibniz", leibniz_case}, {"assoc", assoc_case},         {"commut", commut_case},
      {"roundtrip", roundtrip_case}, {"agreement", agreement_case},
  };
  return suites;
}

}  // namespace

const std::vector<std::string>& fuzz_suites() {
  static const std::vector<std::string> names{"leibniz", "assoc", "commut", "roundtrip", "agreement"};
  return names;
}

FuzzReport run_fuzz(const std::string& suite, long cases, std::uint64_t seed) {
  const auto it = registry().find(suite);
  if (it == registry().end()) throw std::invalid_argument("unknown fuzz suite \"" + suite + "\"");
  FuzzReport report{suite, cases, seed, 0, std::nullopt};
  gen::Rng rng(seed);
  for (long i = 0; i < cases; ++i) {
    std::optional<std::string> failure;
    try {
      failure = it->second(rng);
    } catch (const std::exception& e) {
      failure = std::string("exception: ") + e.what();
    }
    if (failure) {
      report.counterexample = "case " + std::to_string(i) + ": " + *failure;
      break;
    }
    ++report.passed;
  }
  return report;
}

}  // namespace sparks
