#include "sparks/scalars.hpp"

#include <mpfr.h>

#include <algorithm>
#include <cmath>
#include <ostream>
#include <sstream>

namespace sparks {

namespace {

const Rational& zero_rational() {
  static const Rational zero(0);
  return zero;
}

// RAII wrapper over an mpfr_t.
class MpfrValue {
 public:
  explicit MpfrValue(mpfr_prec_t bits) { mpfr_init2(value_, bits); }
  ~MpfrValue() { mpfr_clear(value_); }
  MpfrValue(const MpfrValue&) = delete;
  MpfrValue& operator=(const MpfrValue&) = delete;

  mpfr_ptr get() { return value_; }

 private:
  mpfr_t value_;
};

Rational mpfr_to_rational(mpfr_ptr value) {
  Integer mantissa;
  const mpfr_exp_t exponent = mpfr_get_z_2exp(mantissa.get_mpz_t(), value);
  Rational result(mantissa);
  if (exponent >= 0) {
    mpq_mul_2exp(result.get_mpq_t(), result.get_mpq_t(), static_cast<mp_bitcnt_t>(exponent));
  } else {
    mpq_div_2exp(result.get_mpq_t(), result.get_mpq_t(), static_cast<mp_bitcnt_t>(-exponent));
  }
  return result;
}

struct Interval {
  Rational lo;
  Rational hi;

  [[nodiscard]] bool contains_zero() const { return lo <= 0 && hi >= 0; }
};

// Rigorous enclosure of pi with `bits` of working precision.
Interval pi_enclosure(mpfr_prec_t bits) {
  MpfrValue value(bits);
  Interval result;
  mpfr_const_pi(value.get(), MPFR_RNDD);
  result.lo = mpfr_to_rational(value.get());
  mpfr_const_pi(value.get(), MPFR_RNDU);
  result.hi = mpfr_to_rational(value.get());
  return result;
}

// Enclosure of p(pi) given pi in [lo, hi] with lo > 0.
Interval evaluate(const PiPoly& p, const Interval& pi) {
  Interval result{Rational(0), Rational(0)};
  Rational lo_pow(1);
  Rational hi_pow(1);
  for (int i = 0; i <= p.degree(); ++i) {
    const Rational& c = p.coeff(i);
    if (c > 0) {
      result.lo += c * lo_pow;
      result.hi += c * hi_pow;
    } else if (c < 0) {
      result.lo += c * hi_pow;
      result.hi += c * lo_pow;
    }
    lo_pow *= pi.lo;
    hi_pow *= pi.hi;
  }
  return result;
}

Interval divide(const Interval& num, const Interval& den) {
  const Rational candidates[4] = {num.lo / den.lo, num.lo / den.hi, num.hi / den.lo,
                                  num.hi / den.hi};
  Interval result{candidates[0], candidates[0]};
  for (const auto& c : candidates) {
    if (c < result.lo) result.lo = c;
    if (c > result.hi) result.hi = c;
  }
  return result;
}

constexpr mpfr_prec_t kInitialBits = 64;
constexpr mpfr_prec_t kMaxBits = mpfr_prec_t{1} << 22;

// Encloses value(pi), refining until `decided` accepts the enclosure.
template <class Decided>
Interval refine(const ExactScalar& value, Decided decided) {
  for (mpfr_prec_t bits = kInitialBits; bits <= kMaxBits; bits *= 2) {
    const Interval pi = pi_enclosure(bits);
    const Interval den = evaluate(value.denominator(), pi);
    if (den.contains_zero()) continue;
    const Interval enclosure = divide(evaluate(value.numerator(), pi), den);
    if (decided(enclosure)) return enclosure;
  }
  throw ArithmeticError("interval refinement of pi did not converge");
}

void append_term(std::ostringstream& os, const Rational& coeff, int power, bool first) {
  const bool negative = coeff < 0;
  const Rational magnitude = negative ? Rational(-coeff) : coeff;
  if (first) {
    if (negative) os << "-";
  } else {
    os << (negative ? " - " : " + ");
  }
  if (power == 0) {
    os << to_string(magnitude);
    return;
  }
  if (magnitude != 1) {
    if (is_integer(magnitude)) {
      os << to_string(magnitude);
    } else {
      os << "(" << to_string(magnitude) << ")·";
    }
  }
  os << "π";
  if (power > 1) os << "^" << power;
}

}  // namespace

Rational make_rational(long num, long den) {
  if (den == 0) throw ArithmeticError("zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const std::string num_text(text.substr(0, slash));
  const std::string den_text = slash == std::string_view::npos
                                   ? std::string("1")
                                   : std::string(text.substr(slash + 1));
  if (num_text.empty() || den_text.empty()) {
    throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
  }
  Integer num;
  Integer den;
  // mpz_class rejects junk with std::invalid_argument but accepts leading '+'
  // and whitespace inconsistently, so check the alphabet first.
  const auto well_formed = [](const std::string& s) {
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    return std::all_of(s.begin() + static_cast<long>(i), s.end(),
                       [](char c) { return c >= '0' && c <= '9'; });
  };
  if (!well_formed(num_text) || !well_formed(den_text)) {
    throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
  }
  num.set_str(num_text[0] == '+' ? num_text.substr(1) : num_text, 10);
  den.set_str(den_text[0] == '+' ? den_text.substr(1) : den_text, 10);
  if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

Integer floor_of(const Rational& value) {
  Integer result;
  mpz_fdiv_q(result.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  return result;
}

bool is_integer(const Rational& value) { return value.get_den() == 1; }

// ---------------------------------------------------------------------------
// PiPoly

PiPoly::PiPoly(const Rational& constant) {
  if (constant != 0) coeffs_.push_back(constant);
}

PiPoly::PiPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

PiPoly PiPoly::monomial(int power, const Rational& coeff) {
  if (power < 0) throw std::invalid_argument("negative pi power in PiPoly");
  PiPoly p;
  if (coeff == 0) return p;
  p.coeffs_.assign(static_cast<std::size_t>(power) + 1, Rational(0));
  p.coeffs_.back() = coeff;
  return p;
}

bool PiPoly::is_monomial() const {
  if (coeffs_.empty()) return false;
  for (std::size_t i = 0; i + 1 < coeffs_.size(); ++i) {
    if (coeffs_[i] != 0) return false;
  }
  return true;
}

int PiPoly::valuation() const {
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != 0) return static_cast<int>(i);
  }
  return -1;
}

const Rational& PiPoly::coeff(int power) const {
  if (power < 0 || power >= static_cast<int>(coeffs_.size())) return zero_rational();
  return coeffs_[static_cast<std::size_t>(power)];
}

const Rational& PiPoly::leading() const {
  if (coeffs_.empty()) return zero_rational();
  return coeffs_.back();
}

PiPoly PiPoly::times_pi_power(int k) const {
  if (coeffs_.empty() || k == 0) return *this;
  PiPoly p;
  p.coeffs_.assign(static_cast<std::size_t>(k), Rational(0));
  p.coeffs_.insert(p.coeffs_.end(), coeffs_.begin(), coeffs_.end());
  return p;
}

PiPoly PiPoly::divided_by_pi_power(int k) const {
  if (k == 0 || coeffs_.empty()) return *this;
  if (valuation() < k) throw std::logic_error("PiPoly not divisible by requested pi power");
  PiPoly p;
  p.coeffs_.assign(coeffs_.begin() + k, coeffs_.end());
  return p;
}

PiPoly PiPoly::monic() const {
  if (coeffs_.empty()) return *this;
  const Rational lead = leading();
  PiPoly p = *this;
  for (auto& c : p.coeffs_) c /= lead;
  return p;
}

PiPoly& PiPoly::operator+=(const PiPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  trim();
  return *this;
}

PiPoly& PiPoly::operator-=(const PiPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  trim();
  return *this;
}

PiPoly& PiPoly::operator*=(const PiPoly& other) {
  if (coeffs_.empty() || other.coeffs_.empty()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rational> product(coeffs_.size() + other.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < other.coeffs_.size(); ++j) {
      product[i + j] += coeffs_[i] * other.coeffs_[j];
    }
  }
  coeffs_ = std::move(product);
  trim();
  return *this;
}

PiPoly& PiPoly::operator*=(const Rational& scale) {
  if (scale == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& c : coeffs_) c *= scale;
  return *this;
}

PiPoly PiPoly::operator-() const {
  PiPoly p = *this;
  for (auto& c : p.coeffs_) c = -c;
  return p;
}

std::pair<PiPoly, PiPoly> PiPoly::divmod(const PiPoly& num, const PiPoly& den) {
  if (den.is_zero()) throw ArithmeticError("polynomial division by zero");
  PiPoly remainder = num;
  if (remainder.degree() < den.degree()) return {PiPoly(), remainder};
  std::vector<Rational> quotient(static_cast<std::size_t>(num.degree() - den.degree() + 1),
                                 Rational(0));
  const Rational& lead = den.leading();
  while (!remainder.is_zero() && remainder.degree() >= den.degree()) {
    const int shift = remainder.degree() - den.degree();
    const Rational factor = remainder.leading() / lead;
    quotient[static_cast<std::size_t>(shift)] = factor;
    for (int i = 0; i <= den.degree(); ++i) {
      remainder.coeffs_[static_cast<std::size_t>(i + shift)] -=
          factor * den.coeffs_[static_cast<std::size_t>(i)];
    }
    remainder.trim();
  }
  return {PiPoly(std::move(quotient)), remainder};
}

void PiPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

PiPoly gcd(PiPoly a, PiPoly b) {
  while (!b.is_zero()) {
    PiPoly r = PiPoly::divmod(a, b).second;
    a = std::move(b);
    b = r.monic();
  }
  return a.monic();
}

// ---------------------------------------------------------------------------
// ExactScalar

ExactScalar::ExactScalar(long value) : num_(Rational(value)), den_(Rational(1)) {}

ExactScalar::ExactScalar(const Rational& value) : num_(value), den_(Rational(1)) {}

ExactScalar::ExactScalar(const Integer& value) : num_(Rational(value)), den_(Rational(1)) {}

ExactScalar::ExactScalar(PiPoly num, PiPoly den) : num_(std::move(num)), den_(std::move(den)) {
  canonicalize();
}

ExactScalar ExactScalar::pi() { return pi_power(1); }

ExactScalar ExactScalar::pi_power(int power, const Rational& coeff) {
  if (power >= 0) return {PiPoly::monomial(power, coeff), PiPoly(Rational(1))};
  return {PiPoly(coeff), PiPoly::monomial(-power)};
}

void ExactScalar::canonicalize() {
  if (den_.is_zero()) throw ArithmeticError("division by zero");
  if (num_.is_zero()) {
    den_ = PiPoly(Rational(1));
    return;
  }
  if (den_.is_constant()) {
    num_ *= Rational(1 / den_.leading());
    den_ = PiPoly(Rational(1));
    return;
  }
  if (den_.is_monomial()) {
    // Laurent case: cancel the common power of pi.
    const int common = std::min(num_.valuation(), den_.degree());
    const Rational lead = den_.leading();
    num_ = num_.divided_by_pi_power(common);
    num_ *= Rational(1 / lead);
    den_ = PiPoly::monomial(den_.degree() - common);
    return;
  }
  const PiPoly g = gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = PiPoly::divmod(num_, g).first;
    den_ = PiPoly::divmod(den_, g).first;
  }
  const Rational lead = den_.leading();
  if (lead != 1) {
    num_ *= Rational(1 / lead);
    den_ *= Rational(1 / lead);
  }
}

bool ExactScalar::is_integer() const {
  return is_rational() && sparks::is_integer(num_.coeff(0));
}

Rational ExactScalar::rational_value() const {
  if (!is_rational()) throw std::logic_error("ExactScalar " + to_string(*this) + " depends on pi");
  return num_.coeff(0);
}

Rational ExactScalar::pi_free_part() const {
  if (den_.is_constant()) return num_.coeff(0);
  return PiPoly::divmod(num_, den_).first.coeff(0);
}

int ExactScalar::sign() const {
  if (is_zero()) return 0;
  if (is_rational()) return sgn(num_.coeff(0));
  const Interval enclosure =
      refine(*this, [](const Interval& e) { return e.lo > 0 || e.hi < 0; });
  return enclosure.lo > 0 ? 1 : -1;
}

Integer ExactScalar::floor() const {
  if (is_rational()) return floor_of(num_.coeff(0));
  // A pi-dependent value is irrational, so the enclosure eventually avoids
  // every integer.
  const Interval enclosure =
      refine(*this, [](const Interval& e) { return floor_of(e.lo) == floor_of(e.hi); });
  return floor_of(enclosure.lo);
}

ExactScalar ExactScalar::inverse() const {
  if (is_zero()) throw ArithmeticError("inverse of zero");
  return {den_, num_};
}

ExactScalar& ExactScalar::operator+=(const ExactScalar& other) {
  if (other.is_zero()) return *this;
  if (den_ == other.den_) {
    num_ += other.num_;
  } else if (den_.is_monomial() && other.den_.is_monomial()) {
    const int target = std::max(den_.degree(), other.den_.degree());
    num_ = num_.times_pi_power(target - den_.degree()) +
           other.num_.times_pi_power(target - other.den_.degree());
    den_ = PiPoly::monomial(target);
  } else {
    num_ = num_ * other.den_ + other.num_ * den_;
    den_ *= other.den_;
  }
  canonicalize();
  return *this;
}

ExactScalar& ExactScalar::operator-=(const ExactScalar& other) { return *this += -other; }

ExactScalar& ExactScalar::operator*=(const ExactScalar& other) {
  if (is_zero()) return *this;
  if (other.is_zero()) {
    *this = ExactScalar();
    return *this;
  }
  num_ *= other.num_;
  den_ *= other.den_;
  canonicalize();
  return *this;
}

ExactScalar& ExactScalar::operator/=(const ExactScalar& other) {
  return *this *= other.inverse();
}

ExactScalar ExactScalar::operator-() const {
  ExactScalar result = *this;
  result.num_ = -result.num_;
  return result;
}

double to_float(const ExactScalar& value, int precision) {
  if (precision < 1) throw std::invalid_argument("precision must be positive");
  if (value.is_rational()) return value.rational_value().get_d();
  const auto bits = static_cast<mpfr_prec_t>(std::ceil(precision * 3.3219280948873623) + 64);
  MpfrValue pi(bits);
  MpfrValue num(bits);
  MpfrValue den(bits);
  MpfrValue term(bits);
  mpfr_const_pi(pi.get(), MPFR_RNDN);
  const auto horner = [&](const PiPoly& p, mpfr_ptr out) {
    mpfr_set_zero(out, 1);
    for (int i = p.degree(); i >= 0; --i) {
      mpfr_mul(out, out, pi.get(), MPFR_RNDN);
      mpfr_set_q(term.get(), p.coeff(i).get_mpq_t(), MPFR_RNDN);
      mpfr_add(out, out, term.get(), MPFR_RNDN);
    }
  };
  horner(value.numerator(), num.get());
  horner(value.denominator(), den.get());
  mpfr_div(num.get(), num.get(), den.get(), MPFR_RNDN);
  return mpfr_get_d(num.get(), MPFR_RNDN);
}

std::string to_string(const PiPoly& value) {
  if (value.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i <= value.degree(); ++i) {
    if (value.coeff(i) == 0) continue;
    append_term(os, value.coeff(i), i, first);
    first = false;
  }
  return os.str();
}

std::string to_string(const ExactScalar& value) {
  if (value.denominator() == PiPoly(Rational(1))) return to_string(value.numerator());
  return "(" + to_string(value.numerator()) + ") / (" + to_string(value.denominator()) + ")";
}

std::ostream& operator<<(std::ostream& os, const ExactScalar& value) {
  return os << to_string(value);
}

// ---------------------------------------------------------------------------
// CircleNumber

CircleNumber::CircleNumber(const ExactScalar& value)
    : value_(value - ExactScalar(floor_of(value.pi_free_part()))) {}

double CircleNumber::to_float(int precision) const {
  const double v = sparks::to_float(value_, precision);
  return v - std::floor(v);
}

std::string CircleNumber::to_string() const { return sparks::to_string(value_) + " mod 1"; }

bool operator==(const CircleNumber& a, const CircleNumber& b) {
  return (a.value_ - b.value_).is_integer();
}

CircleNumber circle_reduce(const ExactScalar& value) { return CircleNumber(value); }

bool circle_eq(const CircleNumber& a, const CircleNumber& b) { return a == b; }

double circle_distance(double a, double b) {
  double d = std::fmod(a - b, 1.0);
  if (d < 0) d += 1.0;
  return std::min(d, 1.0 - d);
}

}  // namespace sparks
