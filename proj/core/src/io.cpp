#include "sparks/io.hpp"

#include <fstream>
#include <sstream>

namespace sparks::io {

namespace {

[[noreturn]] void shape_error(const std::string& what) { throw ParseError(what); }

const Json& require(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) shape_error(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

int int_from_json(const Json& j, const char* what) {
  if (!j.is_number_integer()) shape_error(std::string(what) + " must be an integer");
  return j.get<int>();
}

std::vector<Rational> rationals_from_json(const Json& j) {
  if (!j.is_array()) shape_error("expected an array of rationals");
  std::vector<Rational> out;
  for (const Json& x : j) out.push_back(rational_from_json(x));
  return out;
}

Json rationals_to_json(const PiPoly& p) {
  Json out = Json::array();
  for (const Rational& c : p.coefficients()) out.push_back(rational_to_json(c));
  return out;
}

Simplex simplex_from_json(const Json& j) {
  if (!j.is_array()) shape_error("simplex must be an array of vertex indices");
  Simplex s;
  for (const Json& v : j) s.push_back(int_from_json(v, "vertex index"));
  return s;
}

Json harmonics_to_json(const std::map<int, Harmonic>& harmonics) {
  Json out = Json::array();
  for (const auto& [k, h] : harmonics) {
    out.push_back({{"k", k}, {"sin", scalar_to_json(h.sin)}, {"cos", scalar_to_json(h.cos)}});
  }
  return out;
}

std::map<int, Harmonic> harmonics_from_json(const Json& j) {
  if (!j.is_array()) shape_error("harmonics must be an array");
  std::map<int, Harmonic> out;
  for (const Json& h : j) {
    const int k = int_from_json(require(h, "k"), "harmonic index k");
    if (k < 1) shape_error("harmonic index k must be >= 1");
    Harmonic& slot = out[k];
    if (h.contains("sin")) slot.sin += scalar_from_json(h.at("sin"));
    if (h.contains("cos")) slot.cos += scalar_from_json(h.at("cos"));
  }
  return out;
}

int index_of_label(int cech, const std::string& label) {
  for (int i = 0; i < 3; ++i) {
    if (cover::label(cech, i) == label) return i;
  }
  shape_error("unknown " + std::string(cech == 0 ? "arc" : "overlap") + " label \"" + label + "\"");
}

template <typename R>
Json value_to_json(const R& v) {
  if constexpr (std::is_same_v<R, Integer>) {
    return v.get_str();
  } else if constexpr (std::is_same_v<R, Rational>) {
    return rational_to_json(v);
  } else if constexpr (std::is_same_v<R, ExactScalar>) {
    return scalar_to_json(v);
  } else {
    return v;
  }
}

template <typename R>
R value_from_json(const Json& j) {
  if constexpr (std::is_same_v<R, Integer>) {
    return integer_from_json(j);
  } else if constexpr (std::is_same_v<R, Rational>) {
    return rational_from_json(j);
  } else if constexpr (std::is_same_v<R, ExactScalar>) {
    return scalar_from_json(j);
  } else {
    if (!j.is_number()) shape_error("float cochain values must be numbers");
    return j.get<double>();
  }
}

template <typename R>
Cochain<R> typed_cochain(const Json& j, int degree) {
  Cochain<R> c{degree, {}};
  const Json& values = require(j, "values");
  if (!values.is_array()) shape_error("cochain values must be an array");
  for (const Json& entry : values) {
    const Simplex s = simplex_from_json(require(entry, "simplex"));
    if (static_cast<int>(s.size()) != degree + 1) {
      shape_error("simplex of size " + std::to_string(s.size()) + " in a degree-" +
                  std::to_string(degree) + " cochain");
    }
    c.add(s, value_from_json<R>(require(entry, "value")));
  }
  return c;
}

}  // namespace

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    return parse_json(buffer.str());
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(e.what());
  }
}

Json rational_to_json(const Rational& q) { return to_string(q); }

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(Integer(std::to_string(j.get<long long>())));
  if (!j.is_string()) shape_error("rational must be a string \"p/q\" or an integer");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

Integer integer_from_json(const Json& j) {
  const Rational q = rational_from_json(j);
  if (q.get_den() != 1) shape_error("expected an integer, got " + to_string(q));
  return q.get_num();
}

Json scalar_to_json(const ExactScalar& x) {
  return {{"num", rationals_to_json(x.numerator())}, {"den", rationals_to_json(x.denominator())}};
}

ExactScalar scalar_from_json(const Json& j) {
  if (j.is_string() || j.is_number_integer()) return ExactScalar(rational_from_json(j));
  if (!j.is_object()) shape_error("ExactScalar must be an object {num, den} or a rational");
  const PiPoly num(rationals_from_json(require(j, "num")));
  const PiPoly den = j.contains("den") ? PiPoly(rationals_from_json(j.at("den"))) : PiPoly(Rational(1));
  if (den.is_zero()) shape_error("ExactScalar denominator is zero");
  return ExactScalar(num, den);
}

Json polytrig_to_json(const PolyTrig& f) {
  Json terms = Json::array();
  for (const auto& [power, series] : f.series()) {
    terms.push_back({{"power", power},
                     {"constant", scalar_to_json(series.constant)},
                     {"harmonics", harmonics_to_json(series.harmonics)}});
  }
  return {{"terms", terms}};
}

PolyTrig polytrig_from_json(const Json& j) {
  const Json& terms = require(j, "terms");
  if (!terms.is_array()) shape_error("PolyTrig terms must be an array");
  PolyTrig f;
  for (const Json& t : terms) {
    const int power = int_from_json(require(t, "power"), "power");
    if (power < 0) shape_error("power must be >= 0");
    TrigSeries series;
    if (t.contains("constant")) series.constant = scalar_from_json(t.at("constant"));
    if (t.contains("harmonics")) series.harmonics = harmonics_from_json(t.at("harmonics"));
    f += PolyTrig::from_series(power, series);
  }
  return f;
}

Json spark0_to_json(const CircleSpark0& s) {
  return {{"winding", s.winding().get_str()},
          {"constant", scalar_to_json(s.constant())},
          {"harmonics", harmonics_to_json(s.harmonics())}};
}

CircleSpark0 spark0_from_json(const Json& j) {
  if (!j.is_object()) shape_error("spark file must be a JSON object");
  for (const auto& [key, value] : j.items()) {
    if (key != "winding" && key != "constant" && key != "harmonics") {
      shape_error("unknown spark field \"" + key + "\"");
    }
  }
  const Integer n = j.contains("winding") ? integer_from_json(j.at("winding")) : Integer(0);
  const ExactScalar c = j.contains("constant") ? scalar_from_json(j.at("constant")) : ExactScalar();
  std::map<int, Harmonic> h;
  if (j.contains("harmonics")) h = harmonics_from_json(j.at("harmonics"));
  return CircleSpark0::make(n, c, std::move(h));
}

Json nerve_to_json(const Nerve& n) {
  Json simplices = Json::array();
  for (const Simplex& s : n.all()) simplices.push_back(s);
  return {{"vertices", n.vertex_count()}, {"simplices", simplices}};
}

Nerve nerve_from_json(const Json& j) {
  const int n = int_from_json(require(j, "vertices"), "vertices");
  const Json& list = require(j, "simplices");
  if (!list.is_array()) shape_error("simplices must be an array");
  std::set<Simplex> simplices;
  for (const Json& s : list) simplices.insert(simplex_from_json(s));
  try {
    return Nerve(n, std::move(simplices));
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("invalid nerve: ") + e.what());
  }
}

std::string ring_name(const AnyCochain& c) {
  static const std::array<const char*, 4> names{"Z", "Q", "QPi", "float"};
  return names.at(c.index());
}

int degree_of(const AnyCochain& c) {
  return std::visit([](const auto& x) { return x.degree; }, c);
}

Json cochain_to_json(const AnyCochain& c) {
  Json values = Json::array();
  std::visit(
      [&](const auto& x) {
        for (const auto& [s, v] : x.values) values.push_back({{"simplex", s}, {"value", value_to_json(v)}});
      },
      c);
  return {{"degree", degree_of(c)}, {"ring", ring_name(c)}, {"values", values}};
}

AnyCochain cochain_from_json(const Json& j) {
  const int degree = int_from_json(require(j, "degree"), "degree");
  if (degree < 0) shape_error("degree must be >= 0");
  const Json& ring = require(j, "ring");
  if (!ring.is_string()) shape_error("ring must be a string");
  const std::string name = ring.get<std::string>();
  if (name == "Z") return typed_cochain<Integer>(j, degree);
  if (name == "Q") return typed_cochain<Rational>(j, degree);
  if (name == "QPi") return typed_cochain<ExactScalar>(j, degree);
  if (name == "float") return typed_cochain<double>(j, degree);
  shape_error("unknown ring \"" + name + "\"");
}

Json chain_to_json(const Chain& c) {
  Json out = Json::array();
  for (const auto& [s, n] : c.coefficients) out.push_back({{"simplex", s}, {"coefficient", n.get_str()}});
  return out;
}

Chain chain_from_json(const Json& j, int empty_degree) {
  if (!j.is_array()) shape_error("cycle file must be an array");
  Chain c{empty_degree, {}};
  bool first = true;
  for (const Json& entry : j) {
    const Simplex s = simplex_from_json(require(entry, "simplex"));
    const int degree = static_cast<int>(s.size()) - 1;
    if (first) c.degree = degree;
    if (degree != c.degree) shape_error("cycle mixes simplices of different dimensions");
    first = false;
    c.coefficients[s] += integer_from_json(require(entry, "coefficient"));
  }
  std::erase_if(c.coefficients, [](const auto& kv) { return kv.second == 0; });
  return c;
}

Json bicochain_to_json(const BiCochain& c) {
  Json components = Json::array();
  for (const auto& [bd, s] : c.components()) {
    Json sections = Json::object();
    for (int i = 0; i < 3; ++i) {
      if (!s[i].is_zero()) sections[cover::label(bd.cech, i)] = polytrig_to_json(s[i]);
    }
    components.push_back({{"cech", bd.cech}, {"form", bd.form}, {"sections", sections}});
  }
  return {{"components", components}};
}

BiCochain bicochain_from_json(const Json& j) {
  const Json& components = require(j, "components");
  if (!components.is_array()) shape_error("components must be an array");
  BiCochain c;
  for (const Json& comp : components) {
    const int cech = int_from_json(require(comp, "cech"), "cech");
    const int form = int_from_json(require(comp, "form"), "form");
    if (cech < 0 || cech > 1 || form < 0 || form > 1) shape_error("bidegree outside {0,1} x {0,1}");
    Sections s;
    const Json& sections = require(comp, "sections");
    if (!sections.is_object()) shape_error("sections must be an object keyed by arc/overlap label");
    for (const auto& [label, f] : sections.items()) s[index_of_label(cech, label)] = polytrig_from_json(f);
    c.add({cech, form}, s);
  }
  return c;
}

Json deligne_to_json(const DeligneCochain& c) {
  Json out = bicochain_to_json(c.forms);
  out["level"] = c.level;
  Json z = Json::array();
  for (const auto& [r, v] : c.z) {
    Json values = Json::object();
    for (int i = 0; i < 3; ++i) values[cover::label(r, i)] = v[i].get_str();
    z.push_back({{"cech", r}, {"values", values}});
  }
  out["z_part"] = z;
  return out;
}

DeligneCochain deligne_from_json(const Json& j) {
  DeligneCochain c;
  c.level = int_from_json(require(j, "level"), "level");
  if (c.level < 1) shape_error("level must be >= 1");
  c.forms = j.contains("components") ? bicochain_from_json(j) : BiCochain{};
  if (j.contains("z_part")) {
    const Json& z = j.at("z_part");
    if (!z.is_array()) shape_error("z_part must be an array");
    for (const Json& entry : z) {
      const int r = int_from_json(require(entry, "cech"), "cech");
      if (r < 0 || r > 1) shape_error("z_part Cech degree must be 0 or 1");
      IntSections v;
      for (const auto& [label, n] : require(entry, "values").items()) {
        v[index_of_label(r, label)] = integer_from_json(n);
      }
      c.add_z(r, v);
    }
  }
  try {
    c.validate();
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
  return c;
}

}  // namespace sparks::io
