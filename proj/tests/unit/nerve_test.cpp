#include "sparks/nerve.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <array>
#include <numeric>

#include "sparks/generators.hpp"
#include "sparks/trigpoly.hpp"

namespace sparks {
namespace {

Cochain<Integer> zc(int degree, std::map<Simplex, Integer> values) {
  Cochain<Integer> c{degree, {}};
  for (const auto& [s, v] : values) c.add(s, v);
  return c;
}

TEST(Nerve, Validation) {
  EXPECT_THROW(Nerve(3, {{0, 1, 2}}), std::invalid_argument);        // missing edges
  EXPECT_EQ(Nerve(3, {{0, 1}}).simplices(0).size(), 3U);              // vertices are implicit
  EXPECT_THROW(Nerve(3, {{0}, {1}, {1, 0}}), std::invalid_argument);  // not increasing
  EXPECT_THROW(Nerve(2, {{0}, {2}}), std::invalid_argument);          // out of range
  const Nerve t = Nerve::triangle();
  EXPECT_EQ(t.dimension(), 1);
  EXPECT_EQ(t.simplices(0).size(), 3U);
  EXPECT_EQ(t.simplices(1).size(), 3U);
  EXPECT_TRUE(t.simplices(2).empty());
}

TEST(CechDelta, TriangleDifferences) {
  const Nerve t = Nerve::triangle();
  const auto c = zc(0, {{{0}, 1}, {{1}, 4}, {{2}, 9}});
  EXPECT_EQ(cech_delta(t, c), zc(1, {{{0, 1}, 3}, {{1, 2}, 5}, {{0, 2}, 8}}));
  EXPECT_TRUE(cech_delta(t, zc(0, {{{0}, 2}, {{1}, 2}, {{2}, 2}})).is_zero());
}

TEST(CechDelta, SquaresToZero) {
  gen::Rng rng(21);
  for (int i = 0; i < 40; ++i) {
    const Nerve n = gen::nerve(rng, 6, 3, 5);
    for (int d = 0; d <= 2; ++d) {
      const auto c = gen::rational_cochain(rng, n, d);
      EXPECT_TRUE(cech_delta(n, cech_delta(n, c)).is_zero());
    }
  }
}

TEST(IsCocycle, Examples) {
  const Nerve t = Nerve::triangle();
  EXPECT_TRUE(is_cocycle(t, zc(1, {{{0, 2}, 5}})));
  EXPECT_FALSE(is_cocycle(t, zc(0, {{{0}, 1}, {{1}, 2}, {{2}, 3}})));
  EXPECT_TRUE(is_cocycle(t, Cochain<Integer>{0, {}}));
}

TEST(CechCup, Examples) {
  const Nerve t = Nerve::triangle();
  const auto a0 = zc(0, {{{0}, 2}, {{1}, 3}, {{2}, 5}});
  const auto b0 = zc(0, {{{0}, 7}, {{1}, 11}, {{2}, 13}});
  EXPECT_EQ(cech_cup(t, a0, b0), zc(0, {{{0}, 14}, {{1}, 33}, {{2}, 65}}));
  const auto a1 = zc(1, {{{0, 1}, 2}, {{1, 2}, 3}, {{0, 2}, 5}});
  EXPECT_EQ(cech_cup(t, a1, b0), zc(1, {{{0, 1}, 22}, {{1, 2}, 39}, {{0, 2}, 65}}));
  const auto r = zc(1, {{{0, 2}, 4}});
  EXPECT_TRUE(cech_cup(t, r, r).is_zero());
}

TEST(CechCup, LeibnizAndAssociativity) {
  gen::Rng rng(22);
  for (int i = 0; i < 40; ++i) {
    const Nerve n = gen::nerve(rng, 6, 3, 5);
    const int p = static_cast<int>(rng.uniform(0, 1));
    const int s = static_cast<int>(rng.uniform(0, 1));
    const auto a = gen::rational_cochain(rng, n, p);
    const auto b = gen::rational_cochain(rng, n, s);
    const auto c = gen::rational_cochain(rng, n, static_cast<int>(rng.uniform(0, 1)));
    const auto lhs = cech_delta(n, cech_cup(n, a, b));
    const auto second = cech_cup(n, a, cech_delta(n, b));
    const auto rhs = cech_cup(n, cech_delta(n, a), b) + (p % 2 == 0 ? second : -second);
    EXPECT_EQ(lhs, rhs);
    EXPECT_EQ(cech_cup(n, cech_cup(n, a, b), c), cech_cup(n, a, cech_cup(n, b, c)));
  }
}

TEST(CechCup, GradedCommutativeUpToCoboundary) {
  gen::Rng rng(23);
  int nontrivial = 0;
  for (int i = 0; i < 25; ++i) {
    const Nerve n = gen::nerve(rng, 6, 3, 6);
    for (int p = 0; p <= 1; ++p) {
      for (int s = 0; s <= 1; ++s) {
        const auto basis_a = cocycle_basis(n, p);
        const auto basis_b = cocycle_basis(n, s);
        if (basis_a.empty() || basis_b.empty()) continue;
        Cochain<Rational> a{p, {}}, b{s, {}};
        for (const auto& z : basis_a) a = a + scale(z, gen::rational(rng, 4));
        for (const auto& z : basis_b) b = b + scale(z, gen::rational(rng, 4));
        const auto ab = cech_cup(n, a, b);
        const auto ba = cech_cup(n, b, a);
        const auto diff = (p * s) % 2 == 0 ? ab - ba : ab + ba;
        const auto x = solve_coboundary(n, diff);
        ASSERT_TRUE(x.has_value());
        EXPECT_EQ(cech_delta(n, *x), diff);
        if (!diff.is_zero()) ++nontrivial;
      }
    }
  }
  EXPECT_GT(nontrivial, 0);
}

TEST(SolveCoboundary, RejectsNonCoboundary) {
  const Nerve t = Nerve::triangle();
  Cochain<Rational> winding{1, {}};
  winding.add({0, 2}, Rational(1));
  EXPECT_FALSE(solve_coboundary(t, winding).has_value());
  ASSERT_EQ(cocycle_basis(t, 1).size(), 3U);
  ASSERT_EQ(cocycle_basis(t, 0).size(), 1U);
}

// Coefficients are PolyTrig functions of form degree 0 or 1 on a 1-manifold.
std::optional<PolyTrig> wedge(int j, const PolyTrig& x, int k, const PolyTrig& y) {
  if (j + k > 1) return std::nullopt;
  return pt_mul(x, y);
}

std::optional<PolyTrig> dform(int j, const PolyTrig& x) {
  if (j > 0) return std::nullopt;
  return pt_derivative(x);
}

BigradedCochain<PolyTrig> random_bigraded(gen::Rng& rng, const Nerve& n, int r, int j) {
  const gen::PolyTrigShape shape{1, 2, 2, {5, 0, false, false}};
  Cochain<PolyTrig> c{r, {}};
  for (const Simplex& s : n.simplices(r)) c.add(s, gen::polytrig(rng, shape));
  BigradedCochain<PolyTrig> out;
  out.add(r, j, c);
  return out;
}

TEST(GradedCup, SignConvention) {
  const Nerve t = Nerve::triangle();
  Cochain<PolyTrig> a0{0, {}}, b1{1, {}};
  for (int v = 0; v < 3; ++v) a0.add({v}, PolyTrig::cos(v + 1) + PolyTrig::monomial(1));
  for (const Simplex& e : t.simplices(1)) b1.add(e, PolyTrig::sin(e[1]) + PolyTrig::constant(e[0] + 1));
  BigradedCochain<PolyTrig> a, b;
  a.add(0, 1, a0);
  b.add(1, 0, b1);
  const auto signed_cup = graded_cup(t, a, b, wedge);
  const auto plain = cech_cup(t, a.components.at({0, 1}), b.components.at({1, 0}),
                              [](const PolyTrig& x, const PolyTrig& y) { return pt_mul(x, y); });
  EXPECT_EQ(signed_cup.components.at({1, 1}), -plain);
  const auto unsigned_cup = graded_cup(t, b, a, wedge);
  EXPECT_EQ(unsigned_cup.components.at({1, 1}),
            cech_cup(t, b.components.at({1, 0}), a.components.at({0, 1}),
                     [](const PolyTrig& x, const PolyTrig& y) { return pt_mul(x, y); }));
}

TEST(GradedCup, TotalDifferentialIsDerivation) {
  gen::Rng rng(24);
  for (int i = 0; i < 30; ++i) {
    const Nerve n = gen::nerve(rng, 5, 2, 4);
    const int r = static_cast<int>(rng.uniform(0, 1));
    const int j = static_cast<int>(rng.uniform(0, 1));
    const auto a = random_bigraded(rng, n, r, j);
    const auto b = random_bigraded(rng, n, static_cast<int>(rng.uniform(0, 1)),
                                   static_cast<int>(rng.uniform(0, 1)));
    const auto lhs = graded_total_D(n, graded_cup(n, a, b, wedge), dform);
    const auto first = graded_cup(n, graded_total_D(n, a, dform), b, wedge);
    const auto second = graded_cup(n, a, graded_total_D(n, b, dform), wedge);
    const auto rhs = first + ((r + j) % 2 == 0 ? second : -second);
    EXPECT_EQ(lhs, rhs);
  }
}

TEST(Pairing, BoundaryAndStokes) {
  const Nerve n = Nerve::from_maximal(4, {{0, 1, 2, 3}});
  const Chain tet{3, {{{0, 1, 2, 3}, 1}}};
  const Chain db = boundary(tet);
  EXPECT_TRUE(boundary(db).coefficients.empty());
  gen::Rng rng(25);
  const auto c = gen::rational_cochain(rng, n, 2);
  EXPECT_EQ(pair(cech_delta(n, c), tet), pair(c, db));
}

// Periodic Freudenthal triangulation of the 3-torus on an m x m x m grid.
struct Torus {
  static constexpr int m = 3;
  std::vector<Simplex> tets;
  Chain fundamental{3, {}};
  // Lifted displacement along each oriented edge (u < v).
  std::map<Simplex, std::array<int, 3>> displacement;

  static int index(std::array<int, 3> x) {
    return ((x[0] % m) * m + (x[1] % m)) * m + (x[2] % m);
  }

  Torus() {
    std::array<int, 3> perm{0, 1, 2};
    for (int base = 0; base < m * m * m; ++base) {
      const std::array<int, 3> origin{base / (m * m), (base / m) % m, base % m};
      std::sort(perm.begin(), perm.end());
      do {
        std::array<std::array<int, 3>, 4> lifted{};
        lifted[0] = origin;
        for (int step = 0; step < 3; ++step) {
          lifted[step + 1] = lifted[step];
          lifted[step + 1][perm[step]] += 1;
        }
        std::array<int, 4> order{0, 1, 2, 3};
        std::sort(order.begin(), order.end(),
                  [&](int a, int b) { return index(lifted[a]) < index(lifted[b]); });
        Simplex s;
        for (int o : order) s.push_back(index(lifted[o]));
        int inversions = 0;
        for (int a = 0; a < 4; ++a) {
          for (int b = a + 1; b < 4; ++b) inversions += order[a] > order[b] ? 1 : 0;
        }
        int perm_sign = 1;
        for (int a = 0; a < 3; ++a) {
          for (int b = a + 1; b < 3; ++b) perm_sign *= perm[a] > perm[b] ? -1 : 1;
        }
        tets.push_back(s);
        fundamental.coefficients[s] += perm_sign * (inversions % 2 == 0 ? 1 : -1);
        for (int a = 0; a < 4; ++a) {
          for (int b = a + 1; b < 4; ++b) {
            std::array<int, 3> d{};
            for (int i = 0; i < 3; ++i) d[i] = lifted[order[b]][i] - lifted[order[a]][i];
            displacement[{s[a], s[b]}] = d;
          }
        }
      } while (std::next_permutation(perm.begin(), perm.end()));
    }
  }

  // Integer 1-cocycle dual to the i-th circle factor.
  Cochain<Integer> winding(int i) const {
    Cochain<Integer> c{1, {}};
    for (const auto& [e, d] : displacement) {
      const int xu = i == 0 ? e[0] / (m * m) : i == 1 ? (e[0] / m) % m : e[0] % m;
      const int xv = i == 0 ? e[1] / (m * m) : i == 1 ? (e[1] / m) % m : e[1] % m;
      c.add(e, Integer((xu + d[i] - xv) / m));
    }
    return c;
  }
};

TEST(FlatBundleProduct, ThreeTorus) {
  const Torus torus;
  ASSERT_EQ(torus.tets.size(), 162U);
  const std::set<Simplex> distinct(torus.tets.begin(), torus.tets.end());
  ASSERT_EQ(distinct.size(), 162U);
  const Nerve nerve = Nerve::from_maximal(27, torus.tets);
  ASSERT_TRUE(boundary(torus.fundamental).coefficients.empty());

  const auto zx = torus.winding(0);
  const auto zy = torus.winding(1);
  const auto zz = torus.winding(2);
  for (const auto* z : {&zx, &zy, &zz}) ASSERT_TRUE(is_cocycle(nerve, *z));
  const auto r = cech_cup(nerve, zx, zy);
  const Rational alpha = make_rational(2, 7);
  const auto b10 = scale(cochain_cast<Rational>(zz), alpha);

  // Brute-force pairing: sum over the cycle of r(front 2-face) * b10(back edge).
  Rational brute;
  for (const auto& [s, n] : torus.fundamental.coefficients) {
    brute += Rational(n) * Rational(r.at({s[0], s[1], s[2]})) * b10.at({s[2], s[3]});
  }
  const CircleNumber value = flat_bundle_product(nerve, r, b10, torus.fundamental);
  EXPECT_EQ(value, CircleNumber(ExactScalar(brute)));
  // x, y, z dual classes cup to the orientation class.
  EXPECT_EQ(value, CircleNumber(ExactScalar(alpha)));
  // Integer-valued b10 collapses.
  EXPECT_TRUE(flat_bundle_product(nerve, r, cochain_cast<Rational>(zz), torus.fundamental).is_zero());
}

TEST(FlatBundleProduct, Errors) {
  const Nerve n = Nerve::from_maximal(4, {{0, 1, 2, 3}});
  const Chain tet{3, {{{0, 1, 2, 3}, 1}}};
  const Cochain<Integer> r0{2, {}};
  const Cochain<Rational> b0{1, {}};
  EXPECT_TRUE(flat_bundle_product(n, r0, b0, Chain{3, {}}).is_zero());
  EXPECT_THROW(flat_bundle_product(n, r0, b0, tet), PreconditionError);
  EXPECT_THROW(flat_bundle_product(n, Cochain<Integer>{1, {}}, b0, Chain{3, {}}), DegreeError);
  const auto not_closed = zc(2, {{{0, 1, 2}, 1}});
  EXPECT_THROW(flat_bundle_product(n, not_closed, b0, Chain{3, {}}), PreconditionError);
  Cochain<Rational> half{1, {}};
  half.add({0, 1}, make_rational(1, 2));
  EXPECT_THROW(flat_bundle_product(n, r0, half, Chain{3, {}}), PreconditionError);
}

}  // namespace
}  // namespace sparks
