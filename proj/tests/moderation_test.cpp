#include "support.hpp"

#include <addcomp/moderation.hpp>

#include <gtest/gtest.h>

using namespace addcomp;
using namespace testing_support;

namespace {

IntFunction paraboloid() {
  IntPoly s = IntPoly::variable(2, 0), t = IntPoly::variable(2, 1);
  return fn::poly(s * s + t * t);
}

IntFunction neg2_paraboloid() {
  IntPoly s = IntPoly::variable(2, 0), t = IntPoly::variable(2, 1);
  return fn::poly(Int(-2) * (s * s + t * t));
}

// max over |x| <= reach of u(x) + v(x0 - x), first coordinate.
Int brute_max(const IntFunction& u, const IntFunction& v, const Point& x0, long reach) {
  std::optional<Int> best;
  Window::cube(x0.size(), -reach, reach).for_each([&](const Point& x) {
    Int val = u(x)[0] + v(x0 - x)[0];
    if (!best || val > *best) best = val;
  });
  return *best;
}

}  // namespace

TEST(Moderation, SquarePairBound) {
  IntFunction u = square(), v = fn::univariate({0, 0, -2});
  auto b = analytic_bound(u, v);
  ASSERT_TRUE(b.has_value());
  for (long x0 = -10; x0 <= 10; ++x0) {
    EXPECT_EQ((*b)(P({x0})), 2 * x0 * x0);
    EXPECT_LE(brute_max(u, v, P({x0}), 100), 2 * x0 * x0);
  }
  EXPECT_EQ(brute_max(u, v, P({3}), 100), 18);
}

TEST(Moderation, ParaboloidPairBound) {
  auto b = analytic_bound(paraboloid(), neg2_paraboloid());
  ASSERT_TRUE(b.has_value());
  EXPECT_EQ((*b)(P({1, 1})), 4);
  for (long s = -3; s <= 3; ++s)
    for (long t = -3; t <= 3; ++t) EXPECT_GE((*b)(P({s, t})), brute_max(paraboloid(), neg2_paraboloid(), P({s, t}), 20));
}

TEST(Moderation, MaxPowerGapMatchesScan) {
  for (unsigned D : {2u, 4u, 6u})
    for (long t0 = -12; t0 <= 12; ++t0) {
      Int best = 0;
      bool any = false;
      for (long t = -200; t <= 200; ++t) {
        Int val = pow_int(Int(t), D) - 2 * pow_int(Int(t0 - t), D);
        if (!any || val > best) best = val;
        any = true;
      }
      EXPECT_EQ(max_power_gap(t0, D), best) << D << " " << t0;
    }
}

TEST(Moderation, AntiExampleIsUnbounded) {
  EXPECT_FALSE(analytic_bound(square(), square()).has_value());
  auto rep = check_moderation(square(), square(), Window::cube(1, -5, 5), Window::cube(1, -100, 100));
  EXPECT_TRUE(rep.unbounded);
}

TEST(Moderation, ZeroAndConstant) {
  IntFunction zero = fn::univariate({0});
  auto rep = check_moderation(zero, zero, Window::cube(1, -3, 3), Window::cube(1, -20, 20));
  EXPECT_FALSE(rep.unbounded);
  for (const auto& row : rep.rows) EXPECT_EQ(row.empirical_max, 0);
  IntFunction seven = fn::univariate({7});
  auto b = analytic_bound(seven, zero);
  ASSERT_TRUE(b.has_value());
  EXPECT_EQ((*b)(P({4})), 7);
}

TEST(Moderation, BallModerationCertifies) {
  Moderation m = ball_moderation(square());
  EXPECT_EQ(m.v.at(5), -100);
  auto rep = check_moderation(square(), m.v, Window::cube(1, -10, 10), Window::cube(1, -100, 100), m.bound);
  EXPECT_EQ(rep.violations, 0u);
  EXPECT_FALSE(rep.unbounded);
}

TEST(Moderation, PolyModerationCertifies) {
  Moderation m = poly_moderation(square());
  // K = 1, D = 2 * 1 * 2.
  EXPECT_EQ(m.v.at(2), -2 * 16);
  auto rep = check_moderation(square(), m.v, Window::cube(1, -10, 10), Window::cube(1, -100, 100), m.bound);
  EXPECT_EQ(rep.violations, 0u);
  Moderation m2 = poly_moderation(paraboloid());
  auto rep2 = check_moderation(paraboloid(), m2.v, Window::cube(2, -3, 3), Window::cube(2, -15, 15), m2.bound);
  EXPECT_EQ(rep2.violations, 0u);
}

TEST(Moderation, CheckReportsViolation) {
  ModerationBound tight{"test", "zero", [](const Point&) { return Int(0); }};
  auto rep = check_moderation(square(), fn::univariate({0, 0, -2}), Window::cube(1, 1, 3), Window::cube(1, -30, 30), tight);
  EXPECT_EQ(rep.violations, 3u);
}

TEST(Moderation, SubgroupValued) {
  Subgroup two = Subgroup::lattice(1, {P({2})});
  IntFunction v = fn::univariate({0, 0, -2});
  IntFunction same = subgroup_valued_moderation(v, two);
  for (long t = -6; t <= 6; ++t) EXPECT_EQ(same.at(t), -2 * t * t);
  EXPECT_TRUE(values_in(v, two));
  EXPECT_FALSE(values_in(fn::univariate({0, 1}), two));

  Subgroup three = Subgroup::lattice(1, {P({3})});
  Moderation m{v, *analytic_bound(square(), v)};
  Moderation m3 = subgroup_valued_moderation(m, three);
  for (long t = -8; t <= 8; ++t) EXPECT_EQ(mod_floor(m3.v.at(t), 3), 0);
  auto rep = check_moderation(square(), m3.v, Window::cube(1, -10, 10), Window::cube(1, -100, 100), m3.bound);
  EXPECT_EQ(rep.violations, 0u);
}

// |x^i| <= (|x_1| ... |x_n|)^(sum i) needs every coordinate nonzero; the bound used for
// poly_moderation, |x^i| <= x_1^D + ... + x_n^D with D = 2 n d, holds everywhere.
TEST(Moderation, MonomialInequalities) {
  std::mt19937 rng(77);
  std::uniform_int_distribution<long> c(-9, 9), e(0, 3);
  for (int trial = 0; trial < 2000; ++trial) {
    const std::size_t n = 2;
    std::vector<long> x{c(rng), c(rng)};
    std::vector<unsigned> i{static_cast<unsigned>(e(rng)), static_cast<unsigned>(e(rng))};
    unsigned d = i[0] + i[1];
    if (d == 0) continue;
    Int mono = pow_int(Int(std::abs(x[0])), i[0]) * pow_int(Int(std::abs(x[1])), i[1]);
    unsigned D = 2 * n * d;
    Int power_sum = pow_int(Int(x[0]), D) + pow_int(Int(x[1]), D);
    EXPECT_LE(mono, power_sum);
    if (x[0] != 0 && x[1] != 0) EXPECT_LE(mono, pow_int(Int(std::abs(x[0] * x[1])), d));
  }
}
