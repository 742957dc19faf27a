#pragma once

#include <map>
#include <string>

#include "sparks/bicomplex.hpp"

namespace sparks {

/// Degree-0 spark on the circle in canonical Fourier form
///   f(t) = N t + C + sum_k (A_k sin(2 pi k t) + B_k cos(2 pi k t)),
/// normalized so that f(0) = C + sum_k B_k lies in [0, 1).
class CircleSpark0 {
 public:
  CircleSpark0() = default;

  /// Canonicalizes the data; harmonic keys must be >= 1.
  static CircleSpark0 make(Integer winding, ExactScalar constant,
                           std::map<int, Harmonic> harmonics = {});

  [[nodiscard]] const Integer& winding() const { return winding_; }
  [[nodiscard]] const ExactScalar& constant() const { return constant_; }
  /// k -> (A_k, B_k) stored as (sin, cos).
  [[nodiscard]] const std::map<int, Harmonic>& harmonics() const { return harmonics_; }

  /// The lift N t + periodic part.
  [[nodiscard]] PolyTrig lift() const;
  [[nodiscard]] bool is_zero() const;

  friend bool operator==(const CircleSpark0&, const CircleSpark0&) = default;

 private:
  Integer winding_;
  ExactScalar constant_;
  std::map<int, Harmonic> harmonics_;
};

CircleSpark0 canonicalize0(const WindingFunction& f);
bool spark0_eq(const CircleSpark0& x, const CircleSpark0& y);
/// Sum of Fourier data (the group law on circle-valued functions).
CircleSpark0 spark0_add(const CircleSpark0& x, const CircleSpark0& y);
CircleSpark0 spark0_scale(const CircleSpark0& x, long n);
std::string to_string(const CircleSpark0& x);

/// A spark a with D a = e - r, e a global form of degree k + 1 stored on the
/// arcs at bidegree (0, k+1), and r an integer cochain at bidegree (k+1, 0).
struct SparkTriple {
  int degree = 0;
  BiCochain a;
  Sections e;
  Sections r;
};

struct SparkValidation {
  bool ok = true;
  std::string reason;

  explicit operator bool() const { return ok; }
};

SparkTriple spark_from_data(const CircleSpark0& s);
SparkValidation validate_spark(const SparkTriple& t);

/// Curvature: dt-coefficient of e (zero for degree-1 sparks).
PolyTrig delta1(const SparkTriple& t);
/// Characteristic class in H^1(S^1, Z) = Z, oriented so the spark of N t has
/// class N; zero for degree-1 sparks.
Integer delta2(const SparkTriple& t);

/// Degree-1 spark: s01 at bidegree (0,1), s10 at bidegree (1,0).
struct Spark1Cocycle {
  Sections s01;
  Sections s10;

  [[nodiscard]] BiCochain as_bicochain() const;
  static Spark1Cocycle from_bicochain(const BiCochain& c);
  friend bool operator==(const Spark1Cocycle&, const Spark1Cocycle&) = default;
};

/// Checks delta s01 = d s10 exactly.
SparkValidation validate_cocycle(const Spark1Cocycle& c);

/// a u f - r u b for x = [a] with D a = e - r and y = [b] with D b = f - s.
Spark1Cocycle product_engine(const CircleSpark0& x, const CircleSpark0& y);
/// The alternative representative a u s - e u b of the same class.
Spark1Cocycle product_engine_alt(const CircleSpark0& x, const CircleSpark0& y);

/// Value in R/Z of a degree-1 spark class, normalized so that a global form
/// w dt maps to its integral over [0, 1]. Throws PreconditionError when the
/// input is not a cocycle.
CircleNumber reduce_to_circle(const Spark1Cocycle& c);

/// NN'/2 + C N' - C' N + sum_k (A'_k B_k - A_k B'_k) pi k  mod Z.
CircleNumber product_closed_form(const CircleSpark0& x, const CircleSpark0& y);

}  // namespace sparks
