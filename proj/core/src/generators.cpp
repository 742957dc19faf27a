#include "sparks/generators.hpp"

#include <algorithm>
#include <limits>

namespace sparks::gen {

long Rng::uniform(long lo, long hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  if (span == 0) return static_cast<long>(next());
  // Rejection sampling keeps the draw unbiased.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % span;
  std::uint64_t x = next();
  while (x >= limit) x = next();
  return lo + static_cast<long>(x % span);
}

bool Rng::coin(double p_true) { return unit() < p_true; }

double Rng::unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

Rational rational(Rng& rng, int bits, bool dyadic) {
  const long bound = (1L << bits) - 1;
  const long num = rng.uniform(-bound, bound);
  Rational q;
  if (dyadic) {
    q = Rational(num) / Rational(Integer(1) << static_cast<unsigned>(rng.uniform(0, bits)));
  } else {
    q = make_rational(num, rng.uniform(1, bound));
  }
  q.canonicalize();
  return q;
}

ExactScalar scalar(Rng& rng, const ScalarShape& shape) {
  std::vector<Rational> num;
  for (int i = 0; i <= shape.max_pi_degree; ++i) num.push_back(rational(rng, shape.bits, shape.dyadic));
  PiPoly den(Rational(1));
  if (shape.pi_denominator && rng.coin(0.5)) den = PiPoly::monomial(static_cast<int>(rng.uniform(1, 2)));
  return ExactScalar(PiPoly(std::move(num)), den);
}

PolyTrig polytrig(Rng& rng, const PolyTrigShape& shape) {
  PolyTrig f;
  const long terms = rng.uniform(0, shape.max_terms);
  for (long i = 0; i < terms; ++i) {
    const int power = static_cast<int>(rng.uniform(0, shape.max_power));
    const int freq = static_cast<int>(rng.uniform(0, shape.max_freq));
    const auto wave = rng.coin() ? PolyTrig::Wave::Sin : PolyTrig::Wave::Cos;
    f.add_term({power, freq, freq == 0 ? PolyTrig::Wave::Cos : wave}, scalar(rng, shape.coeff));
  }
  return f;
}

Sections sections(Rng& rng, const PolyTrigShape& shape) {
  return {polytrig(rng, shape), polytrig(rng, shape), polytrig(rng, shape)};
}

std::array<Integer, 3> integers(Rng& rng, long bound) {
  return {Integer(rng.uniform(-bound, bound)), Integer(rng.uniform(-bound, bound)),
          Integer(rng.uniform(-bound, bound))};
}

BiCochain bicochain(Rng& rng, int total_degree, const PolyTrigShape& shape) {
  BiCochain c;
  for (int p = 0; p <= 1; ++p) {
    const int q = total_degree - p;
    if (q < 0 || q > 1) continue;
    c.add({p, q}, sections(rng, shape));
  }
  return c;
}

CircleSpark0 spark0(Rng& rng, const SparkShape& shape) {
  const Integer n(rng.uniform(-shape.max_winding, shape.max_winding));
  const ExactScalar c = scalar(rng, shape.coeff);
  std::map<int, Harmonic> harmonics;
  const long count = rng.uniform(0, shape.max_harmonics);
  for (long i = 0; i < count; ++i) {
    const int k = static_cast<int>(rng.uniform(1, shape.max_k));
    harmonics[k] = {scalar(rng, shape.coeff), scalar(rng, shape.coeff)};
  }
  return CircleSpark0::make(n, c, std::move(harmonics));
}

Nerve nerve(Rng& rng, int vertices, int max_dim, int max_simplices) {
  std::vector<Simplex> maximal;
  const long count = rng.uniform(1, max_simplices);
  for (long i = 0; i < count; ++i) {
    const long size = rng.uniform(1, std::min(max_dim + 1, vertices));
    std::vector<int> pool(static_cast<std::size_t>(vertices));
    for (int v = 0; v < vertices; ++v) pool[static_cast<std::size_t>(v)] = v;
    Simplex s;
    for (long j = 0; j < size; ++j) {
      const auto pick = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(pool.size()) - 1));
      s.push_back(pool[pick]);
      pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(pick));
    }
    maximal.push_back(std::move(s));
  }
  return Nerve::from_maximal(vertices, maximal);
}

Cochain<Rational> rational_cochain(Rng& rng, const Nerve& n, int degree, int bits) {
  Cochain<Rational> c{degree, {}};
  for (const Simplex& s : n.simplices(degree)) {
    if (rng.coin(0.8)) c.add(s, rational(rng, bits));
  }
  return c;
}

DeligneCochain deligne(Rng& rng, int level, int total_degree, const PolyTrigShape& shape) {
  DeligneCochain c{level, {}, {}};
  if (total_degree >= 0 && total_degree <= 1) c.add_z(total_degree, integers(rng, 5));
  for (int r = 0; r <= 1; ++r) {
    const int q = total_degree - r - 1;
    if (q < 0 || q > level - 1 || q > 1) continue;
    c.forms.add({r, q}, sections(rng, shape));
  }
  return c;
}

}  // namespace sparks::gen
