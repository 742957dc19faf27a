#include "sparks/spark.hpp"

#include <sstream>
#include <stdexcept>

namespace sparks {

namespace {

BiCochain component(Bidegree degree, const Sections& s) { return BiCochain::single(degree, s); }

bool is_global(const Sections& e) {
  return e[0] == e[1] && e[1] == e[2] && pt_shift(e[0], 1) == e[0];
}

SparkValidation fail(std::string reason) { return {false, std::move(reason)}; }

}  // namespace

CircleSpark0 CircleSpark0::make(Integer winding, ExactScalar constant,
                                std::map<int, Harmonic> harmonics) {
  CircleSpark0 s;
  s.winding_ = std::move(winding);
  ExactScalar at_zero = constant;
  for (auto it = harmonics.begin(); it != harmonics.end();) {
    if (it->first < 1) throw std::invalid_argument("harmonic index must be >= 1");
    if (it->second.sin.is_zero() && it->second.cos.is_zero()) {
      it = harmonics.erase(it);
      continue;
    }
    at_zero += it->second.cos;
    ++it;
  }
  s.constant_ = constant - ExactScalar(at_zero.floor());
  s.harmonics_ = std::move(harmonics);
  return s;
}

PolyTrig CircleSpark0::lift() const {
  PolyTrig f = PolyTrig::monomial(1, ExactScalar(winding_)) + PolyTrig::constant(constant_);
  for (const auto& [k, h] : harmonics_) f += PolyTrig::sin(k, h.sin) + PolyTrig::cos(k, h.cos);
  return f;
}

bool CircleSpark0::is_zero() const {
  return winding_ == 0 && constant_.is_zero() && harmonics_.empty();
}

CircleSpark0 canonicalize0(const WindingFunction& f) {
  ExactScalar constant;
  std::map<int, Harmonic> harmonics;
  for (const auto& [b, c] : f.body.terms()) {
    if (b.power == 1 && b.freq == 0) continue;
    if (b.power != 0) throw std::invalid_argument("winding body has non-periodic terms");
    if (b.freq == 0) {
      constant = c;
    } else if (b.wave == PolyTrig::Wave::Sin) {
      harmonics[b.freq].sin = c;
    } else {
      harmonics[b.freq].cos = c;
    }
  }
  return CircleSpark0::make(f.winding, constant, std::move(harmonics));
}

bool spark0_eq(const CircleSpark0& x, const CircleSpark0& y) { return x == y; }

CircleSpark0 spark0_add(const CircleSpark0& x, const CircleSpark0& y) {
  std::map<int, Harmonic> harmonics = x.harmonics();
  for (const auto& [k, h] : y.harmonics()) {
    harmonics[k].sin += h.sin;
    harmonics[k].cos += h.cos;
  }
  return CircleSpark0::make(x.winding() + y.winding(), x.constant() + y.constant(),
                            std::move(harmonics));
}

CircleSpark0 spark0_scale(const CircleSpark0& x, long n) {
  const ExactScalar c(n);
  std::map<int, Harmonic> harmonics;
  for (const auto& [k, h] : x.harmonics()) harmonics[k] = {h.sin * c, h.cos * c};
  return CircleSpark0::make(x.winding() * n, x.constant() * c, std::move(harmonics));
}

std::string to_string(const CircleSpark0& x) {
  std::ostringstream os;
  os << "N=" << x.winding().get_str() << " C=" << to_string(x.constant());
  for (const auto& [k, h] : x.harmonics()) {
    os << " k=" << k << ":(A=" << to_string(h.sin) << ", B=" << to_string(h.cos) << ")";
  }
  return os.str();
}

SparkTriple spark_from_data(const CircleSpark0& s) {
  const PolyTrig f = s.lift();
  SparkTriple t;
  t.degree = 0;
  t.a = component({0, 0}, uniform(f));
  t.e = uniform(pt_derivative(f));
  t.r = -circle_delta(uniform(f));
  return t;
}

SparkValidation validate_spark(const SparkTriple& t) {
  if (t.degree < 0 || t.degree > 1) return fail("spark degree must be 0 or 1");
  for (const auto& [bd, s] : t.a.components()) {
    if (bd.total() != t.degree) return fail("a is not homogeneous of the spark degree");
  }
  const bool top = t.degree == 1;
  if (top && (!is_zero(t.e) || !is_zero(t.r))) {
    return fail("a degree-1 spark has no room for e or r on the circle");
  }
  if (!top) {
    if (!is_global(t.e)) return fail("e is not a global form");
    if (!is_integer_constant(t.r)) return fail("r is not an integer cochain");
  }
  BiCochain rhs;
  if (!top) {
    rhs.add({0, 1}, t.e);
    rhs.add({1, 0}, -t.r);
  }
  if (total_D(t.a) != rhs) return fail("spark equation D a = e - r fails");
  return {};
}

PolyTrig delta1(const SparkTriple& t) { return t.degree == 0 ? t.e[0] : PolyTrig{}; }

Integer delta2(const SparkTriple& t) {
  if (t.degree != 0) return 0;
  const std::array<Integer, 3> r = integer_values(t.r);
  return r[0] + r[1] - r[2];
}

BiCochain Spark1Cocycle::as_bicochain() const {
  BiCochain c;
  c.add({0, 1}, s01);
  c.add({1, 0}, s10);
  return c;
}

Spark1Cocycle Spark1Cocycle::from_bicochain(const BiCochain& c) {
  for (const auto& [bd, s] : c.components()) {
    if (bd.total() != 1) throw std::invalid_argument("degree-1 spark has a component off total degree 1");
  }
  return {c.component({0, 1}), c.component({1, 0})};
}

SparkValidation validate_cocycle(const Spark1Cocycle& c) {
  const Sections lhs = circle_delta(c.s01);
  Sections rhs;
  for (int e = 0; e < 3; ++e) rhs[e] = pt_derivative(c.s10[e]);
  if (lhs != rhs) return fail("delta s01 != d s10");
  return {};
}

Spark1Cocycle product_engine(const CircleSpark0& x, const CircleSpark0& y) {
  const SparkTriple tx = spark_from_data(x);
  const SparkTriple ty = spark_from_data(y);
  const BiCochain f = component({0, 1}, ty.e);
  const BiCochain r = component({1, 0}, tx.r);
  return Spark1Cocycle::from_bicochain(bicx_cup(tx.a, f) - bicx_cup(r, ty.a));
}

Spark1Cocycle product_engine_alt(const CircleSpark0& x, const CircleSpark0& y) {
  const SparkTriple tx = spark_from_data(x);
  const SparkTriple ty = spark_from_data(y);
  const BiCochain s = component({1, 0}, ty.r);
  const BiCochain e = component({0, 1}, tx.e);
  return Spark1Cocycle::from_bicochain(bicx_cup(tx.a, s) - bicx_cup(e, ty.a));
}

CircleNumber reduce_to_circle(const Spark1Cocycle& c) {
  if (const SparkValidation v = validate_cocycle(c); !v) throw PreconditionError(v.reason);
  const Sections primitives{pt_antiderivative(c.s01[0]), pt_antiderivative(c.s01[1]),
                            pt_antiderivative(c.s01[2])};
  const Sections w = c.s10 - circle_delta(primitives);
  for (const PolyTrig& we : w) {
    if (!we.is_constant()) throw PreconditionError("s10 - delta F is not locally constant");
  }
  // The loop 1 -> 2 -> 3 -> 1 crosses the overlaps 12, 23 forwards and 13 backwards.
  return CircleNumber(w[0].constant_term() + w[1].constant_term() - w[2].constant_term());
}

CircleNumber product_closed_form(const CircleSpark0& x, const CircleSpark0& y) {
  const ExactScalar n(x.winding());
  const ExactScalar n2(y.winding());
  ExactScalar value = n * n2 * ExactScalar(make_rational(1, 2)) + x.constant() * n2 - y.constant() * n;
  for (const auto& [k, h] : x.harmonics()) {
    const auto it = y.harmonics().find(k);
    if (it == y.harmonics().end()) continue;
    value += (it->second.sin * h.cos - h.sin * it->second.cos) * ExactScalar::pi_power(1, Rational(k));
  }
  return CircleNumber(value);
}

}  // namespace sparks
