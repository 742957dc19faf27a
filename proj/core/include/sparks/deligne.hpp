#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "sparks/spark.hpp"

namespace sparks {

using IntSections = std::array<Integer, 3>;

/// Cochain in the Cech total complex of the smooth Deligne complex
/// Z -> E^0 -> ... -> E^{level-1} on the three-arc cover. The integer column
/// has sheaf degree 0; a form of degree q has sheaf degree q + 1. Total degree
/// is Cech degree plus sheaf degree.
struct DeligneCochain {
  int level = 1;
  /// Cech degree -> integer values on the simplices of that degree.
  std::map<int, IntSections> z;
  /// Form parts, form degree <= level - 1.
  BiCochain forms;

  [[nodiscard]] bool is_zero() const;
  /// Throws std::logic_error when not homogeneous; -1 for zero.
  [[nodiscard]] int total_degree() const;
  /// Throws std::invalid_argument on form degrees outside the truncation.
  void validate() const;

  void add_z(int cech, const IntSections& values);

  friend DeligneCochain operator+(const DeligneCochain& a, const DeligneCochain& b);
  friend DeligneCochain operator-(const DeligneCochain& a, const DeligneCochain& b);
  friend bool operator==(const DeligneCochain&, const DeligneCochain&) = default;
};

/// Integer column: delta z + (-1)^r i(z). Form column q < level - 1:
/// delta + (-1)^r d. Last column q = level - 1: delta only.
DeligneCochain deligne_D(const DeligneCochain& c);

/// (-1)^p r + a for a spark triple, at level p = degree + 1.
DeligneCochain spark_to_deligne(const SparkTriple& t);
DeligneCochain spark_to_deligne(const CircleSpark0& s);
DeligneCochain spark_to_deligne(const Spark1Cocycle& c);

/// Level-1 closed cochain of total degree 1 -> canonical degree-0 spark.
/// Throws PreconditionError on non-closed input.
CircleSpark0 deligne_to_spark0(const DeligneCochain& c);
/// Level-2 closed cochain of total degree 2 -> degree-1 spark cocycle.
Spark1Cocycle deligne_to_spark1(const DeligneCochain& c);

/// Cochain-level cup of a level-p and a level-q cochain into level p + q:
/// x.y when x has sheaf degree 0, x ^ dy when x has positive sheaf degree and
/// y has sheaf degree q, 0 otherwise, with the Cech sign (-1)^(m s) for x of
/// sheaf degree m against y of Cech degree s.
DeligneCochain deligne_cup_cochain(const DeligneCochain& x, const DeligneCochain& y);

/// A D-closed cochain of total degree equal to its level.
class DeligneClass {
 public:
  /// Throws PreconditionError unless c is closed of total degree c.level.
  explicit DeligneClass(DeligneCochain c);

  [[nodiscard]] int level() const { return rep_.level; }
  [[nodiscard]] const DeligneCochain& representative() const { return rep_; }

 private:
  DeligneCochain rep_;
};

/// Class-level cup. Only level 1 x level 1 is realizable on the circle;
/// other combinations throw std::invalid_argument.
DeligneClass deligne_cup(const DeligneClass& x, const DeligneClass& y);

/// Product of degree-0 sparks computed through the Deligne complex.
CircleNumber deligne_product(const CircleSpark0& x, const CircleSpark0& y);
bool ring_agreement_check(const CircleSpark0& x, const CircleSpark0& y);

struct StructuralReport {
  struct Check {
    std::string name;
    bool ok;
  };
  std::vector<Check> checks;

  [[nodiscard]] bool ok() const;
};

/// Short exact sequence consequences on the circle at level 1 or 2.
StructuralReport structural_checks(int level);

std::string to_string(const DeligneCochain& c);

}  // namespace sparks
