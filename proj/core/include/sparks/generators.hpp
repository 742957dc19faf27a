#pragma once

#include <cstdint>
#include <random>

#include "sparks/deligne.hpp"
#include "sparks/nerve.hpp"

namespace sparks::gen {

/// Seeded source with its own bounded draws, so sequences are identical
/// across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform in [lo, hi].
  long uniform(long lo, long hi);
  bool coin(double p_true = 0.5);
  /// Uniform in [0, 1).
  double unit();

 private:
  std::mt19937_64 engine_;
};

struct ScalarShape {
  int bits = 16;          // numerator and denominator magnitudes < 2^bits
  int max_pi_degree = 0;  // 0 gives rationals
  bool pi_denominator = false;
  bool dyadic = false;    // denominators restricted to powers of two
};

Rational rational(Rng& rng, int bits, bool dyadic = false);
ExactScalar scalar(Rng& rng, const ScalarShape& shape);

struct PolyTrigShape {
  int max_power = 1;
  int max_freq = 4;
  int max_terms = 3;
  ScalarShape coeff{8, 0, false, false};
};

PolyTrig polytrig(Rng& rng, const PolyTrigShape& shape);
Sections sections(Rng& rng, const PolyTrigShape& shape);
std::array<Integer, 3> integers(Rng& rng, long bound);

/// Random homogeneous BiCochain of the given total degree (0, 1 or 2).
BiCochain bicochain(Rng& rng, int total_degree, const PolyTrigShape& shape);

struct SparkShape {
  int max_k = 6;
  long max_winding = 5;
  int max_harmonics = 3;
  ScalarShape coeff{16, 0, false, false};
};

CircleSpark0 spark0(Rng& rng, const SparkShape& shape);

/// Random nerve from up to `max_simplices` random maximal simplices of
/// dimension <= max_dim.
Nerve nerve(Rng& rng, int vertices, int max_dim, int max_simplices);
Cochain<Rational> rational_cochain(Rng& rng, const Nerve& n, int degree, int bits = 6);

/// Random level-p Deligne cochain of the given total degree.
DeligneCochain deligne(Rng& rng, int level, int total_degree, const PolyTrigShape& shape);

}  // namespace sparks::gen
