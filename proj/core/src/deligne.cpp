#include "sparks/deligne.hpp"

#include <sstream>
#include <stdexcept>

namespace sparks {

namespace {

bool all_zero(const IntSections& v) { return v[0] == 0 && v[1] == 0 && v[2] == 0; }

IntSections negated(const IntSections& v) { return {-v[0], -v[1], -v[2]}; }

IntSections integer_delta(const IntSections& v) { return {v[1] - v[0], v[2] - v[1], v[2] - v[0]}; }

// Sheaf degree of a Deligne component and its Cech degree.
struct Piece {
  int cech;
  int sheaf;
  bool integral;
  Bidegree form_degree;
  Sections sections;
};

std::vector<Piece> pieces(const DeligneCochain& c) {
  std::vector<Piece> out;
  for (const auto& [r, v] : c.z) out.push_back({r, 0, true, {r, 0}, constants(v)});
  for (const auto& [bd, s] : c.forms.components()) {
    out.push_back({bd.cech, bd.form + 1, false, bd, s});
  }
  return out;
}

void require_closed(const DeligneCochain& c, int degree) {
  c.validate();
  const int total = c.total_degree();
  if (total != degree && total != -1) {
    throw PreconditionError("Deligne cochain has total degree " + std::to_string(total) +
                            ", expected " + std::to_string(degree));
  }
  if (!deligne_D(c).is_zero()) throw PreconditionError("Deligne cochain is not D-closed");
}

}  // namespace

bool DeligneCochain::is_zero() const { return z.empty() && forms.is_zero(); }

int DeligneCochain::total_degree() const {
  int degree = forms.is_zero() ? -1 : forms.total_degree() + 1;
  for (const auto& [r, v] : z) {
    if (degree >= 0 && degree != r) throw std::logic_error("Deligne cochain is not homogeneous");
    degree = r;
  }
  return degree;
}

void DeligneCochain::validate() const {
  if (level < 1) throw std::invalid_argument("Deligne level must be >= 1");
  for (const auto& [bd, s] : forms.components()) {
    if (bd.form > level - 1) {
      throw std::invalid_argument("form degree " + std::to_string(bd.form) +
                                  " exceeds the level-" + std::to_string(level) + " truncation");
    }
  }
  for (const auto& [r, v] : z) {
    if (r < 0 || r > 1) throw std::invalid_argument("integer part outside Cech degrees 0..1");
  }
}

void DeligneCochain::add_z(int cech, const IntSections& values) {
  if (cech > 1) return;  // no simplices of Cech degree >= 2
  auto [it, inserted] = z.try_emplace(cech, values);
  if (!inserted) {
    for (int i = 0; i < 3; ++i) it->second[i] += values[i];
  }
  if (all_zero(it->second)) z.erase(it);
}

DeligneCochain operator+(const DeligneCochain& a, const DeligneCochain& b) {
  if (a.level != b.level) throw std::invalid_argument("Deligne levels differ");
  DeligneCochain out = a;
  for (const auto& [r, v] : b.z) out.add_z(r, v);
  out.forms += b.forms;
  return out;
}

DeligneCochain operator-(const DeligneCochain& a, const DeligneCochain& b) {
  DeligneCochain neg{b.level, {}, -b.forms};
  for (const auto& [r, v] : b.z) neg.add_z(r, negated(v));
  return a + neg;
}

DeligneCochain deligne_D(const DeligneCochain& c) {
  c.validate();
  DeligneCochain out{c.level, {}, {}};
  for (const auto& [r, v] : c.z) {
    if (r == 0) out.add_z(1, integer_delta(v));
    const Sections i = constants(v);
    out.forms.add({r, 0}, r % 2 == 0 ? i : -i);
  }
  for (const auto& [bd, s] : c.forms.components()) {
    if (bd.cech == 0) out.forms.add({1, bd.form}, circle_delta(s));
    if (bd.form < c.level - 1 && bd.form == 0) {
      const Sections ds{pt_derivative(s[0]), pt_derivative(s[1]), pt_derivative(s[2])};
      out.forms.add({bd.cech, 1}, bd.cech % 2 == 0 ? ds : -ds);
    }
  }
  return out;
}

DeligneCochain spark_to_deligne(const SparkTriple& t) {
  if (const SparkValidation v = validate_spark(t); !v) throw PreconditionError(v.reason);
  const int p = t.degree + 1;
  DeligneCochain out{p, {}, t.a};
  if (!sparks::is_zero(t.r)) {
    const IntSections r = integer_values(t.r);
    out.add_z(t.degree + 1, p % 2 == 0 ? r : negated(r));
  }
  return out;
}

DeligneCochain spark_to_deligne(const CircleSpark0& s) { return spark_to_deligne(spark_from_data(s)); }

DeligneCochain spark_to_deligne(const Spark1Cocycle& c) {
  return spark_to_deligne(SparkTriple{1, c.as_bicochain(), {}, {}});
}

CircleSpark0 deligne_to_spark0(const DeligneCochain& c) {
  if (c.level != 1) throw std::invalid_argument("expected a level-1 Deligne cochain");
  require_closed(c, 1);
  const Sections a = c.forms.component({0, 0});
  // Closedness makes a_2 - a_1 and a_3 - a_2 integer constants, so a_1 alone
  // is a representative lift of the class.
  const PolyTrig jump12 = a[1] - a[0];
  const PolyTrig jump23 = a[2] - a[1];
  if (!jump12.is_constant() || !jump23.is_constant() || !jump12.constant_term().is_integer() ||
      !jump23.constant_term().is_integer()) {
    throw PreconditionError("arc sections differ by non-integers");
  }
  return canonicalize0(make_winding_function(a[0]));
}

Spark1Cocycle deligne_to_spark1(const DeligneCochain& c) {
  if (c.level != 2) throw std::invalid_argument("expected a level-2 Deligne cochain");
  require_closed(c, 2);
  return Spark1Cocycle::from_bicochain(c.forms);
}

DeligneCochain deligne_cup_cochain(const DeligneCochain& x, const DeligneCochain& y) {
  x.validate();
  y.validate();
  const int level = x.level + y.level;
  const int q = y.level;
  DeligneCochain out{level, {}, {}};
  for (const Piece& a : pieces(x)) {
    for (const Piece& b : pieces(y)) {
      const int cech = a.cech + b.cech;
      if (cech > 1) continue;
      const bool negate = (a.sheaf * b.cech) % 2 != 0;
      if (a.sheaf == 0) {
        const Sections w = bicx_wedge({a.cech, 0}, a.sections, b.form_degree, b.sections);
        if (b.integral) {
          const IntSections v = integer_values(w);
          out.add_z(cech, negate ? negated(v) : v);
        } else {
          out.forms.add({cech, b.form_degree.form}, negate ? -w : w);
        }
      } else if (b.sheaf == q && !b.integral) {
        // x ^ dy with y in the top column of its complex.
        const int form = a.form_degree.form + q;
        if (form > 1 || b.form_degree.form != 0) continue;
        const Sections dy{pt_derivative(b.sections[0]), pt_derivative(b.sections[1]),
                          pt_derivative(b.sections[2])};
        const Sections w = bicx_wedge(a.form_degree, a.sections, {b.cech, 1}, dy);
        out.forms.add({cech, form}, negate ? -w : w);
      }
    }
  }
  return out;
}

DeligneClass::DeligneClass(DeligneCochain c) : rep_(std::move(c)) { require_closed(rep_, rep_.level); }

DeligneClass deligne_cup(const DeligneClass& x, const DeligneClass& y) {
  if (x.level() != 1 || y.level() != 1) {
    throw std::invalid_argument(
        "Deligne cup on the circle is only realized for levels 1 x 1; level " +
        std::to_string(x.level() + y.level()) + " classes vanish for dimension reasons");
  }
  return DeligneClass(deligne_cup_cochain(x.representative(), y.representative()));
}

CircleNumber deligne_product(const CircleSpark0& x, const CircleSpark0& y) {
  const DeligneClass cx(spark_to_deligne(x));
  const DeligneClass cy(spark_to_deligne(y));
  return reduce_to_circle(deligne_to_spark1(deligne_cup(cx, cy).representative()));
}

bool ring_agreement_check(const CircleSpark0& x, const CircleSpark0& y) {
  return deligne_product(x, y) == product_closed_form(x, y);
}

bool StructuralReport::ok() const {
  for (const Check& c : checks) {
    if (!c.ok) return false;
  }
  return true;
}

StructuralReport structural_checks(int level) {
  if (level != 1 && level != 2) throw std::invalid_argument("structural checks exist for levels 1 and 2");
  StructuralReport report;
  const auto half = ExactScalar(make_rational(1, 2));
  const std::vector<CircleSpark0> samples{
      CircleSpark0::make(0, ExactScalar(make_rational(7, 3))),
      CircleSpark0::make(0, ExactScalar::pi()),
      CircleSpark0::make(3, half),
      CircleSpark0::make(-2, 0, {{1, {1, 0}}}),
      CircleSpark0::make(0, 0, {{2, {half, ExactScalar::pi()}}}),
  };
  if (level == 1) {
    bool flat_iff_constant = true;
    bool flat_value = true;
    bool integral_periods = true;
    for (const CircleSpark0& s : samples) {
      const DeligneCochain c = spark_to_deligne(s);
      const CircleSpark0 back = deligne_to_spark0(c);
      const SparkTriple t = spark_from_data(back);
      const PolyTrig curvature = delta1(t);
      const bool constant = back.winding() == 0 && back.harmonics().empty();
      flat_iff_constant = flat_iff_constant && (curvature.is_zero() == constant);
      if (constant) flat_value = flat_value && CircleNumber(back.constant()) == CircleNumber(s.constant());
      const PolyTrig primitive = pt_antiderivative(curvature);
      const ExactScalar period = pt_eval_integer(primitive, 1) - pt_eval_integer(primitive, 0);
      integral_periods = integral_periods && period == ExactScalar(delta2(t));
    }
    report.checks.push_back({"zero curvature exactly for constant classes", flat_iff_constant});
    report.checks.push_back({"flat classes are their constant mod 1", flat_value});
    report.checks.push_back({"curvature has integral period equal to the winding", integral_periods});
    bool surjective = true;
    for (long n = -3; n <= 3; ++n) {
      const SparkTriple t = spark_from_data(CircleSpark0::make(n, 0));
      surjective = surjective && delta1(t) == PolyTrig::constant(n) && delta2(t) == n;
    }
    report.checks.push_back({"N dt is the curvature of the winding-N spark", surjective});
  } else {
    bool global_rep = true;
    bool zero_curvature = true;
    for (const CircleSpark0& x : samples) {
      for (const CircleSpark0& y : samples) {
        const Spark1Cocycle product = product_engine(x, y);
        const DeligneCochain c = spark_to_deligne(product);
        const Spark1Cocycle back = deligne_to_spark1(c);
        const CircleNumber value = reduce_to_circle(back);
        const Spark1Cocycle global{uniform(PolyTrig::constant(value.representative())), {}};
        global_rep = global_rep && reduce_to_circle(global) == value;
        const SparkTriple t{1, back.as_bicochain(), {}, {}};
        zero_curvature = zero_curvature && delta1(t).is_zero() && delta2(t) == 0;
      }
    }
    report.checks.push_back({"top-degree classes have zero curvature and class", zero_curvature});
    report.checks.push_back({"every class is the class of a global 1-form", global_rep});
  }
  return report;
}

std::string to_string(const DeligneCochain& c) {
  std::ostringstream os;
  os << "level " << c.level << "\n";
  for (const auto& [r, v] : c.z) {
    os << "Z[" << r << "]:";
    for (int i = 0; i < 3; ++i) os << " [" << cover::label(r, i) << "] " << v[i].get_str();
    os << "\n";
  }
  os << to_string(c.forms);
  return os.str();
}

}  // namespace sparks
