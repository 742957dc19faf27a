#include "sparks/trigpoly.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace sparks {

namespace {

using Basis = PolyTrig::Basis;
using Wave = PolyTrig::Wave;

const ExactScalar& half() {
  static const ExactScalar value(make_rational(1, 2));
  return value;
}

// 2 pi k
ExactScalar angular(int k) { return ExactScalar::pi_power(1, Rational(2 * k)); }

// Adds c * t^power * wave(2 pi freq t) for a possibly negative frequency.
void add_signed(PolyTrig& out, int power, int freq, Wave wave, const ExactScalar& c) {
  if (freq < 0) {
    freq = -freq;
    if (wave == Wave::Sin) {
      out.add_term({power, freq, wave}, -c);
      return;
    }
  }
  out.add_term({power, freq, wave}, c);
}

Integer binomial(long n, long k) {
  Integer result;
  mpz_bin_uiui(result.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return result;
}

// Primitive of t^power * wave(2 pi freq t) by repeated integration by parts.
PolyTrig integrate_basis(int power, int freq, Wave wave) {
  if (freq == 0) {
    return PolyTrig::monomial(power + 1, ExactScalar(make_rational(1, power + 1)));
  }
  const ExactScalar inv_omega = angular(freq).inverse();
  PolyTrig result;
  if (wave == Wave::Cos) {
    // t^j sin / w - (j / w) * int t^(j-1) sin
    result.add_term({power, freq, Wave::Sin}, inv_omega);
    if (power > 0) {
      result -= integrate_basis(power - 1, freq, Wave::Sin) * (ExactScalar(power) * inv_omega);
    }
  } else {
    // -t^j cos / w + (j / w) * int t^(j-1) cos
    result.add_term({power, freq, Wave::Cos}, -inv_omega);
    if (power > 0) {
      result += integrate_basis(power - 1, freq, Wave::Cos) * (ExactScalar(power) * inv_omega);
    }
  }
  return result;
}

}  // namespace

bool TrigSeries::is_zero() const {
  if (!constant.is_zero()) return false;
  for (const auto& [k, h] : harmonics) {
    if (!h.sin.is_zero() || !h.cos.is_zero()) return false;
  }
  return true;
}

PolyTrig PolyTrig::constant(const ExactScalar& c) { return term({0, 0, Wave::Cos}, c); }

PolyTrig PolyTrig::monomial(int power, const ExactScalar& c) {
  return term({power, 0, Wave::Cos}, c);
}

PolyTrig PolyTrig::sin(int k, const ExactScalar& c) { return term({0, k, Wave::Sin}, c); }

PolyTrig PolyTrig::cos(int k, const ExactScalar& c) { return term({0, k, Wave::Cos}, c); }

PolyTrig PolyTrig::term(const Basis& basis, const ExactScalar& c) {
  PolyTrig p;
  p.add_term(basis, c);
  return p;
}

PolyTrig PolyTrig::from_series(int power, const TrigSeries& series) {
  PolyTrig p;
  p.add_term({power, 0, Wave::Cos}, series.constant);
  for (const auto& [k, h] : series.harmonics) {
    if (k < 1) throw std::invalid_argument("harmonic index must be >= 1");
    p.add_term({power, k, Wave::Sin}, h.sin);
    p.add_term({power, k, Wave::Cos}, h.cos);
  }
  return p;
}

void PolyTrig::add_term(const Basis& basis, const ExactScalar& c) {
  if (basis.power < 0 || basis.freq < 0) {
    throw std::invalid_argument("PolyTrig basis needs power >= 0 and freq >= 0");
  }
  if (c.is_zero()) return;
  if (basis.freq == 0 && basis.wave == Wave::Sin) return;
  auto [it, inserted] = terms_.try_emplace(basis, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

ExactScalar PolyTrig::coefficient(const Basis& basis) const {
  const auto it = terms_.find(basis);
  return it == terms_.end() ? ExactScalar() : it->second;
}

std::map<int, TrigSeries> PolyTrig::series() const {
  std::map<int, TrigSeries> out;
  for (const auto& [b, c] : terms_) {
    TrigSeries& s = out[b.power];
    if (b.freq == 0) {
      s.constant = c;
    } else if (b.wave == Wave::Sin) {
      s.harmonics[b.freq].sin = c;
    } else {
      s.harmonics[b.freq].cos = c;
    }
  }
  return out;
}

bool PolyTrig::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Basis{});
}

ExactScalar PolyTrig::constant_term() const { return coefficient(Basis{}); }

int PolyTrig::max_power() const {
  int result = -1;
  for (const auto& [b, c] : terms_) result = std::max(result, b.power);
  return result;
}

int PolyTrig::max_frequency() const {
  int result = 0;
  for (const auto& [b, c] : terms_) result = std::max(result, b.freq);
  return result;
}

PolyTrig& PolyTrig::operator+=(const PolyTrig& other) {
  for (const auto& [b, c] : other.terms_) add_term(b, c);
  return *this;
}

PolyTrig& PolyTrig::operator-=(const PolyTrig& other) {
  for (const auto& [b, c] : other.terms_) add_term(b, -c);
  return *this;
}

PolyTrig& PolyTrig::operator*=(const ExactScalar& scale) {
  if (scale.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [b, c] : terms_) c *= scale;
  return *this;
}

PolyTrig PolyTrig::operator-() const {
  PolyTrig p = *this;
  for (auto& [b, c] : p.terms_) c = -c;
  return p;
}

PolyTrig operator*(const PolyTrig& a, const PolyTrig& b) {
  PolyTrig out;
  for (const auto& [ba, ca] : a.terms()) {
    for (const auto& [bb, cb] : b.terms()) {
      const int power = ba.power + bb.power;
      const ExactScalar c = ca * cb;
      if (ba.freq == 0) {
        out.add_term({power, bb.freq, bb.wave}, c);
        continue;
      }
      if (bb.freq == 0) {
        out.add_term({power, ba.freq, ba.wave}, c);
        continue;
      }
      const ExactScalar h = c * half();
      const int sum = ba.freq + bb.freq;
      const int diff = ba.freq - bb.freq;
      if (ba.wave == Wave::Cos && bb.wave == Wave::Cos) {
        add_signed(out, power, diff, Wave::Cos, h);
        add_signed(out, power, sum, Wave::Cos, h);
      } else if (ba.wave == Wave::Sin && bb.wave == Wave::Sin) {
        add_signed(out, power, diff, Wave::Cos, h);
        add_signed(out, power, sum, Wave::Cos, -h);
      } else if (ba.wave == Wave::Sin) {
        add_signed(out, power, sum, Wave::Sin, h);
        add_signed(out, power, diff, Wave::Sin, h);
      } else {
        add_signed(out, power, sum, Wave::Sin, h);
        add_signed(out, power, diff, Wave::Sin, -h);
      }
    }
  }
  return out;
}

PolyTrig pt_mul(const PolyTrig& f, const PolyTrig& g) { return f * g; }

PolyTrig pt_derivative(const PolyTrig& f) {
  PolyTrig out;
  for (const auto& [b, c] : f.terms()) {
    if (b.power > 0) out.add_term({b.power - 1, b.freq, b.wave}, c * ExactScalar(b.power));
    if (b.freq == 0) continue;
    const ExactScalar w = c * angular(b.freq);
    if (b.wave == Wave::Cos) {
      out.add_term({b.power, b.freq, Wave::Sin}, -w);
    } else {
      out.add_term({b.power, b.freq, Wave::Cos}, w);
    }
  }
  return out;
}

PolyTrig pt_antiderivative(const PolyTrig& f) {
  PolyTrig out;
  for (const auto& [b, c] : f.terms()) out += integrate_basis(b.power, b.freq, b.wave) * c;
  return out;
}

PolyTrig pt_shift(const PolyTrig& f, long m) {
  if (m == 0) return f;
  PolyTrig out;
  for (const auto& [b, c] : f.terms()) {
    // (t + m)^j = sum_i C(j, i) m^(j - i) t^i
    Integer m_power(1);
    for (int i = b.power; i >= 0; --i) {
      out.add_term({i, b.freq, b.wave}, c * ExactScalar(Integer(binomial(b.power, i) * m_power)));
      m_power *= m;
    }
  }
  return out;
}

ExactScalar pt_eval_integer(const PolyTrig& f, long t) {
  ExactScalar value;
  for (const auto& [b, c] : f.terms()) {
    if (b.wave == Wave::Sin) continue;
    Integer t_power;
    mpz_pow_ui(t_power.get_mpz_t(), Integer(t).get_mpz_t(), static_cast<unsigned long>(b.power));
    value += c * ExactScalar(t_power);
  }
  return value;
}

double pt_eval_float(const PolyTrig& f, double t) {
  double value = 0.0;
  for (const auto& [b, c] : f.terms()) {
    double basis = std::pow(t, b.power);
    if (b.freq != 0) {
      const double x = b.freq * t;
      const double angle = 2.0 * std::numbers::pi * (x - std::round(x));
      basis *= b.wave == Wave::Sin ? std::sin(angle) : std::cos(angle);
    }
    value += to_float(c) * basis;
  }
  return value;
}

std::string to_string(const PolyTrig& f) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [b, c] : f.terms()) {
    if (!first) os << " + ";
    first = false;
    os << "(" << to_string(c) << ")";
    if (b.power == 1) os << "·t";
    if (b.power > 1) os << "·t^" << b.power;
    if (b.freq != 0) os << (b.wave == Wave::Sin ? "·sin(2π·" : "·cos(2π·") << b.freq << "t)";
  }
  return os.str();
}

WindingFunction make_winding_function(PolyTrig body) {
  const PolyTrig jump = pt_shift(body, 1) - body;
  if (!jump.is_constant() || !jump.constant_term().is_integer()) {
    throw std::invalid_argument("not a winding lift: f(t+1) - f(t) = " + to_string(jump));
  }
  return {jump.constant_term().rational_value().get_num(), std::move(body)};
}

}  // namespace sparks
