#include "sparks/bicomplex.hpp"

#include <sstream>
#include <stdexcept>

namespace sparks {

namespace cover {

std::string label(int cech, int index) {
  static const std::array<const char*, 3> arcs{"1", "2", "3"};
  static const std::array<const char*, 3> edges{"12", "23", "13"};
  return cech == 0 ? arcs.at(index) : edges.at(index);
}

PolyTrig transport(const PolyTrig& section, int vertex, int edge) {
  return edge == kSeamEdge && vertex == 0 ? pt_shift(section, -1) : section;
}

}  // namespace cover

Sections operator+(const Sections& a, const Sections& b) {
  return {a[0] + b[0], a[1] + b[1], a[2] + b[2]};
}

Sections operator-(const Sections& a, const Sections& b) {
  return {a[0] - b[0], a[1] - b[1], a[2] - b[2]};
}

Sections operator-(const Sections& a) { return {-a[0], -a[1], -a[2]}; }

Sections scaled(const Sections& a, const ExactScalar& c) { return {a[0] * c, a[1] * c, a[2] * c}; }

bool is_zero(const Sections& s) { return s[0].is_zero() && s[1].is_zero() && s[2].is_zero(); }

Sections uniform(const PolyTrig& f) { return {f, f, f}; }

Sections constants(const std::array<Integer, 3>& values) {
  return {PolyTrig::constant(values[0]), PolyTrig::constant(values[1]),
          PolyTrig::constant(values[2])};
}

BiCochain BiCochain::single(Bidegree degree, Sections sections) {
  BiCochain c;
  c.add(degree, sections);
  return c;
}

Sections BiCochain::component(Bidegree degree) const {
  const auto it = components_.find(degree);
  return it == components_.end() ? Sections{} : it->second;
}

int BiCochain::total_degree() const {
  int degree = -1;
  for (const auto& [bd, s] : components_) {
    if (degree >= 0 && bd.total() != degree) throw std::logic_error("BiCochain is not homogeneous");
    degree = bd.total();
  }
  return degree;
}

void BiCochain::add(Bidegree degree, const Sections& sections) {
  if (degree.cech < 0 || degree.cech > 1 || degree.form < 0 || degree.form > 1) {
    if (sparks::is_zero(sections)) return;
    throw std::invalid_argument("bidegree outside the circle bicomplex");
  }
  if (sparks::is_zero(sections)) return;
  auto [it, inserted] = components_.try_emplace(degree, sections);
  if (!inserted) {
    it->second = it->second + sections;
    if (sparks::is_zero(it->second)) components_.erase(it);
  }
}

BiCochain& BiCochain::operator+=(const BiCochain& other) {
  for (const auto& [bd, s] : other.components_) add(bd, s);
  return *this;
}

BiCochain& BiCochain::operator-=(const BiCochain& other) {
  for (const auto& [bd, s] : other.components_) add(bd, -s);
  return *this;
}

BiCochain BiCochain::operator-() const {
  BiCochain c;
  for (const auto& [bd, s] : components_) c.add(bd, -s);
  return c;
}

Sections circle_delta(const Sections& arcs) {
  Sections out;
  for (int e = 0; e < 3; ++e) {
    const auto [u, v] = cover::kEdges[e];
    out[e] = cover::transport(arcs[v], v, e) - cover::transport(arcs[u], u, e);
  }
  return out;
}

BiCochain circle_delta(const BiCochain& c) {
  BiCochain out;
  for (const auto& [bd, s] : c.components()) {
    // The cover has no triple overlaps, so delta of a Cech-1 component is 0.
    if (bd.cech == 0) out.add({1, bd.form}, circle_delta(s));
  }
  return out;
}

BiCochain circle_d(const BiCochain& c) {
  BiCochain out;
  for (const auto& [bd, s] : c.components()) {
    if (bd.form == 0) {
      out.add({bd.cech, 1}, {pt_derivative(s[0]), pt_derivative(s[1]), pt_derivative(s[2])});
    }
  }
  return out;
}

BiCochain total_D(const BiCochain& c) {
  BiCochain out = circle_delta(c);
  const BiCochain dc = circle_d(c);
  for (const auto& [bd, s] : dc.components()) out.add(bd, bd.cech % 2 == 0 ? s : -s);
  return out;
}

Sections bicx_wedge(Bidegree da, const Sections& a, Bidegree db, const Sections& b) {
  if (da.cech + db.cech > 1 || da.form + db.form > 1) return {};
  Sections out;
  if (da.cech == 0 && db.cech == 0) {
    for (int i = 0; i < 3; ++i) out[i] = a[i] * b[i];
  } else if (da.cech == 1) {
    // a on the overlap, b on its back vertex; the overlap chart is the back
    // vertex's chart, so no transport is needed.
    for (int e = 0; e < 3; ++e) out[e] = a[e] * b[cover::kEdges[e][1]];
  } else {
    for (int e = 0; e < 3; ++e) {
      const int u = cover::kEdges[e][0];
      out[e] = cover::transport(a[u], u, e) * b[e];
    }
  }
  return out;
}

BiCochain bicx_cup(const BiCochain& a, const BiCochain& b) {
  BiCochain out;
  for (const auto& [da, sa] : a.components()) {
    for (const auto& [db, sb] : b.components()) {
      if (da.cech + db.cech > 1 || da.form + db.form > 1) continue;
      const Sections w = bicx_wedge(da, sa, db, sb);
      out.add({da.cech + db.cech, da.form + db.form}, (da.form * db.cech) % 2 == 0 ? w : -w);
    }
  }
  return out;
}

bool is_integer_constant(const Sections& s) {
  for (const PolyTrig& f : s) {
    if (!f.is_constant() || !f.constant_term().is_integer()) return false;
  }
  return true;
}

std::array<Integer, 3> integer_values(const Sections& s) {
  if (!is_integer_constant(s)) throw std::invalid_argument("sections are not integer constants");
  std::array<Integer, 3> out;
  for (int i = 0; i < 3; ++i) out[i] = s[i].constant_term().rational_value().get_num();
  return out;
}

Cochain<Integer> to_nerve_cochain(int cech, const Sections& sections) {
  const std::array<Integer, 3> values = integer_values(sections);
  Cochain<Integer> c{cech, {}};
  for (int i = 0; i < 3; ++i) {
    if (cech == 0) {
      c.add({i}, values[i]);
    } else {
      c.add({cover::kEdges[i][0], cover::kEdges[i][1]}, values[i]);
    }
  }
  return c;
}

Sections from_nerve_cochain(const Cochain<Integer>& c) {
  std::array<Integer, 3> values;
  for (int i = 0; i < 3; ++i) {
    values[i] = c.degree == 0 ? c.at({i}) : c.at({cover::kEdges[i][0], cover::kEdges[i][1]});
  }
  return constants(values);
}

std::string to_string(const BiCochain& c) {
  if (c.is_zero()) return "0";
  std::ostringstream os;
  for (const auto& [bd, s] : c.components()) {
    os << "(" << bd.cech << "," << bd.form << "):";
    for (int i = 0; i < 3; ++i) os << " [" << cover::label(bd.cech, i) << "] " << to_string(s[i]);
    os << "\n";
  }
  return os.str();
}

}  // namespace sparks
