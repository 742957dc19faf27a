#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "sparks/scalars.hpp"

namespace sparks {

using Simplex = std::vector<int>;

/// Input that violates a structural precondition (wrong degree, bad simplex).
class DegreeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Input that is well-formed but fails a mathematical precondition.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Abstract simplicial complex on vertices 0..n-1, closed under faces.
class Nerve {
 public:
  /// Throws std::invalid_argument unless every listed simplex is strictly
  /// increasing, in range, and has all its faces listed.
  Nerve(int vertex_count, std::set<Simplex> simplices);

  /// Closure of the given maximal simplices under taking faces.
  static Nerve from_maximal(int vertex_count, const std::vector<Simplex>& maximal);
  /// Boundary of a triangle: the nerve of a three-arc cover of the circle.
  static Nerve triangle();

  [[nodiscard]] int vertex_count() const { return vertex_count_; }
  [[nodiscard]] int dimension() const { return static_cast<int>(by_degree_.size()) - 1; }
  [[nodiscard]] const std::vector<Simplex>& simplices(int degree) const;
  [[nodiscard]] bool contains(const Simplex& s) const { return all_.contains(s); }
  [[nodiscard]] const std::set<Simplex>& all() const { return all_; }

 private:
  int vertex_count_;
  std::set<Simplex> all_;
  std::vector<std::vector<Simplex>> by_degree_;
};

/// Simplex with vertex m removed.
Simplex face(const Simplex& s, std::size_t m);

template <typename R>
bool is_zero_value(const R& value) {
  return value == R{};
}

/// Sparse Cech cochain; absent simplices carry 0.
template <typename R>
struct Cochain {
  int degree = 0;
  std::map<Simplex, R> values;

  [[nodiscard]] R at(const Simplex& s) const {
    const auto it = values.find(s);
    return it == values.end() ? R{} : it->second;
  }
  void add(const Simplex& s, const R& value) {
    if (is_zero_value(value)) return;
    auto [it, inserted] = values.try_emplace(s, value);
    if (!inserted) {
      it->second = it->second + value;
      if (is_zero_value(it->second)) values.erase(it);
    }
  }
  [[nodiscard]] bool is_zero() const { return values.empty(); }

  friend bool operator==(const Cochain&, const Cochain&) = default;
};

template <typename R>
Cochain<R> operator+(Cochain<R> a, const Cochain<R>& b) {
  if (a.degree != b.degree) throw DegreeError("cochain degrees differ");
  for (const auto& [s, v] : b.values) a.add(s, v);
  return a;
}

template <typename R>
Cochain<R> operator-(const Cochain<R>& a) {
  Cochain<R> out{a.degree, {}};
  for (const auto& [s, v] : a.values) out.add(s, R{} - v);
  return out;
}

template <typename R>
Cochain<R> operator-(const Cochain<R>& a, const Cochain<R>& b) {
  return a + (-b);
}

template <typename R>
Cochain<R> scale(const Cochain<R>& a, const R& factor) {
  Cochain<R> out{a.degree, {}};
  for (const auto& [s, v] : a.values) out.add(s, v * factor);
  return out;
}

template <typename To, typename From>
Cochain<To> cochain_cast(const Cochain<From>& c) {
  Cochain<To> out{c.degree, {}};
  for (const auto& [s, v] : c.values) out.add(s, To(v));
  return out;
}

template <typename R>
void check_support(const Nerve& nerve, const Cochain<R>& c) {
  for (const auto& [s, v] : c.values) {
    if (static_cast<int>(s.size()) != c.degree + 1 || !nerve.contains(s)) {
      throw DegreeError("cochain value on a simplex that is not a " + std::to_string(c.degree) +
                        "-simplex of the nerve");
    }
  }
}

/// (delta c)(s) = sum_m (-1)^m c(face_m s).
template <typename R>
Cochain<R> cech_delta(const Nerve& nerve, const Cochain<R>& c) {
  Cochain<R> out{c.degree + 1, {}};
  for (const Simplex& s : nerve.simplices(c.degree + 1)) {
    R total{};
    for (std::size_t m = 0; m < s.size(); ++m) {
      const R v = c.at(face(s, m));
      total = m % 2 == 0 ? R(total + v) : R(total - v);
    }
    out.add(s, total);
  }
  return out;
}

template <typename R>
bool is_cocycle(const Nerve& nerve, const Cochain<R>& c) {
  return cech_delta(nerve, c).is_zero();
}

/// Front-face / back-face cup: (a u b)(i0..i_{r+s}) = a(i0..ir) * b(ir..i_{r+s}).
template <typename R, typename Mul>
Cochain<R> cech_cup(const Nerve& nerve, const Cochain<R>& a, const Cochain<R>& b, Mul mul) {
  const int r = a.degree;
  Cochain<R> out{a.degree + b.degree, {}};
  for (const Simplex& s : nerve.simplices(out.degree)) {
    const Simplex front(s.begin(), s.begin() + r + 1);
    const Simplex back(s.begin() + r, s.end());
    const auto fa = a.values.find(front);
    if (fa == a.values.end()) continue;
    const auto fb = b.values.find(back);
    if (fb == b.values.end()) continue;
    out.add(s, mul(fa->second, fb->second));
  }
  return out;
}

template <typename R>
Cochain<R> cech_cup(const Nerve& nerve, const Cochain<R>& a, const Cochain<R>& b) {
  return cech_cup(nerve, a, b, [](const R& x, const R& y) -> R { return x * y; });
}

/// Cochain with an extra coefficient-level grading (form degree).
template <typename R>
struct BigradedCochain {
  /// (Cech degree r, form degree j) -> component of Cech degree r.
  std::map<std::pair<int, int>, Cochain<R>> components;

  void add(int r, int j, const Cochain<R>& c) {
    if (c.degree != r) throw DegreeError("component Cech degree does not match its key");
    if (c.is_zero()) return;
    auto [it, inserted] = components.try_emplace({r, j}, c);
    if (!inserted) {
      it->second = it->second + c;
      if (it->second.is_zero()) components.erase(it);
    }
  }
  friend bool operator==(const BigradedCochain&, const BigradedCochain&) = default;
};

template <typename R>
BigradedCochain<R> operator+(BigradedCochain<R> a, const BigradedCochain<R>& b) {
  for (const auto& [key, c] : b.components) a.add(key.first, key.second, c);
  return a;
}

template <typename R>
BigradedCochain<R> operator-(const BigradedCochain<R>& a) {
  BigradedCochain<R> out;
  for (const auto& [key, c] : a.components) out.add(key.first, key.second, -c);
  return out;
}

/// Signed cup: sum over components of (-1)^(j*s) a_{r,j} u b_{s,k}, where
/// `mul(j, x, k, y)` resolves the coefficient product landing in form degree
/// j + k and may return std::nullopt when that product vanishes.
template <typename R, typename Mul>
BigradedCochain<R> graded_cup(const Nerve& nerve, const BigradedCochain<R>& a,
                              const BigradedCochain<R>& b, Mul mul) {
  BigradedCochain<R> out;
  for (const auto& [ka, ca] : a.components) {
    for (const auto& [kb, cb] : b.components) {
      const auto [r, j] = ka;
      const auto [s, k] = kb;
      bool vanishes = false;
      const Cochain<R> cup = cech_cup(nerve, ca, cb, [&](const R& x, const R& y) {
        std::optional<R> product = mul(j, x, k, y);
        if (!product) {
          vanishes = true;
          return R{};
        }
        return *product;
      });
      if (vanishes) continue;
      out.add(r + s, j + k, (j * s) % 2 == 0 ? cup : -cup);
    }
  }
  return out;
}

/// D = delta + (-1)^r d, where `d(j, x)` differentiates a form-degree j
/// coefficient and returns std::nullopt above the top form degree.
template <typename R, typename D>
BigradedCochain<R> graded_total_D(const Nerve& nerve, const BigradedCochain<R>& c, D d) {
  BigradedCochain<R> out;
  for (const auto& [key, comp] : c.components) {
    const auto [r, j] = key;
    out.add(r + 1, j, cech_delta(nerve, comp));
    Cochain<R> dc{r, {}};
    bool vanishes = false;
    for (const auto& [s, v] : comp.values) {
      std::optional<R> dv = d(j, v);
      if (!dv) {
        vanishes = true;
        break;
      }
      dc.add(s, *dv);
    }
    if (!vanishes) out.add(r, j + 1, r % 2 == 0 ? dc : -dc);
  }
  return out;
}

/// Solves delta x = target over Q by exact Gaussian elimination; nullopt when
/// target is not a coboundary.
std::optional<Cochain<Rational>> solve_coboundary(const Nerve& nerve,
                                                  const Cochain<Rational>& target);

/// Basis of the rational cocycles of the given degree.
std::vector<Cochain<Rational>> cocycle_basis(const Nerve& nerve, int degree);

/// Formal integer combination of simplices of one dimension.
struct Chain {
  int degree = 0;
  std::map<Simplex, Integer> coefficients;
};

Chain boundary(const Chain& c);

template <typename R>
R pair(const Cochain<R>& c, const Chain& chain) {
  R total{};
  for (const auto& [s, n] : chain.coefficients) {
    const auto it = c.values.find(s);
    if (it != c.values.end()) total = total + it->second * R(n);
  }
  return total;
}

/// Evaluates the cup cocycle r u b10 on a 3-cycle and reduces mod Z. Throws
/// DegreeError on wrong degrees and PreconditionError when r is not a cocycle,
/// delta b10 is not integral, or the chain is not a cycle.
CircleNumber flat_bundle_product(const Nerve& nerve, const Cochain<Integer>& r,
                                 const Cochain<Rational>& b10, const Chain& cycle);

}  // namespace sparks
