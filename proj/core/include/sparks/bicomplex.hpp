#pragma once

#include <array>
#include <compare>
#include <map>
#include <string>

#include "sparks/nerve.hpp"
#include "sparks/trigpoly.hpp"

namespace sparks {

// Fixed three-arc cover of the circle. Arcs 1, 2, 3 sit at indices 0, 1, 2 of
// a Cech-0 section triple; overlaps 12, 23, 13 sit at indices 0, 1, 2 of a
// Cech-1 triple. There is no triple overlap. All sections are written in the
// global lifted coordinate t; on overlap 13 the chart of arc 3 is used, so an
// arc-1 section is carried there by t -> t - 1.
namespace cover {

inline constexpr int kArcs = 3;
/// Vertex indices (first, second) of each overlap.
inline constexpr std::array<std::array<int, 2>, 3> kEdges{{{0, 1}, {1, 2}, {0, 2}}};
inline constexpr int kSeamEdge = 2;

/// Label used in files: "1", "2", "3" for arcs, "12", "23", "13" for overlaps.
std::string label(int cech, int index);

/// Arc section `section` of arc `vertex` expressed in the chart of `edge`.
PolyTrig transport(const PolyTrig& section, int vertex, int edge);

}  // namespace cover

struct Bidegree {
  int cech = 0;
  int form = 0;

  [[nodiscard]] int total() const { return cech + form; }
  friend auto operator<=>(const Bidegree&, const Bidegree&) = default;
};

using Sections = std::array<PolyTrig, 3>;

Sections operator+(const Sections& a, const Sections& b);
Sections operator-(const Sections& a, const Sections& b);
Sections operator-(const Sections& a);
Sections scaled(const Sections& a, const ExactScalar& c);
bool is_zero(const Sections& s);
/// The same section on every arc.
Sections uniform(const PolyTrig& f);
/// Integer constants on each simplex.
Sections constants(const std::array<Integer, 3>& values);

/// Element of the Cech-de Rham bicomplex on the cover; zero components are
/// never stored. Cech degree and form degree are each 0 or 1.
class BiCochain {
 public:
  BiCochain() = default;

  static BiCochain single(Bidegree degree, Sections sections);

  [[nodiscard]] const std::map<Bidegree, Sections>& components() const { return components_; }
  [[nodiscard]] Sections component(Bidegree degree) const;
  [[nodiscard]] bool is_zero() const { return components_.empty(); }
  /// Total degree when homogeneous; throws std::logic_error otherwise, and
  /// returns -1 for zero.
  [[nodiscard]] int total_degree() const;

  void add(Bidegree degree, const Sections& sections);

  BiCochain& operator+=(const BiCochain& other);
  BiCochain& operator-=(const BiCochain& other);
  friend BiCochain operator+(BiCochain a, const BiCochain& b) { return a += b; }
  friend BiCochain operator-(BiCochain a, const BiCochain& b) { return a -= b; }
  BiCochain operator-() const;

  friend bool operator==(const BiCochain&, const BiCochain&) = default;

 private:
  std::map<Bidegree, Sections> components_;
};

/// delta on a Cech-0 triple: (c2 - c1, c3 - c2, c3 - c1(t - 1)).
Sections circle_delta(const Sections& arcs);
/// delta on every component; Cech-1 components map to zero.
BiCochain circle_delta(const BiCochain& c);
/// Componentwise derivative raising form degree; form-degree-1 parts vanish.
BiCochain circle_d(const BiCochain& c);
/// D = delta + (-1)^p d.
BiCochain total_D(const BiCochain& c);

/// Unsigned front/back wedge of two components.
Sections bicx_wedge(Bidegree da, const Sections& a, Bidegree db, const Sections& b);
/// Signed cup: (-1)^(j s) a_{r,j} ^ b_{s,k}, summed over components.
BiCochain bicx_cup(const BiCochain& a, const BiCochain& b);

/// A form-degree-0 component with integer constant sections, as a cochain on
/// the triangle nerve. Throws std::invalid_argument if not integer-constant.
Cochain<Integer> to_nerve_cochain(int cech, const Sections& sections);
Sections from_nerve_cochain(const Cochain<Integer>& c);

/// True when every section is a constant integer.
bool is_integer_constant(const Sections& s);
std::array<Integer, 3> integer_values(const Sections& s);

std::string to_string(const BiCochain& c);

}  // namespace sparks
