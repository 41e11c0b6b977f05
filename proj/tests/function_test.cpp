#include "support.hpp"

#include <addcomp/json_io.hpp>
#include <addcomp/moderation.hpp>

#include <gtest/gtest.h>

#include <cmath>

using namespace addcomp;
using namespace testing_support;

namespace {

RatPoly rat_univariate(std::vector<long> c) {
  std::vector<Rational> r;
  for (long x : c) r.emplace_back(x);
  return RatPoly::univariate(r);
}

}  // namespace

TEST(Polynomial, ArithmeticAndEval) {
  IntPoly x = IntPoly::variable(2, 0), y = IntPoly::variable(2, 1);
  IntPoly p = x * x + Int(3) * y - IntPoly::constant(2, 1);
  EXPECT_EQ(p.eval(std::vector<Int>{2, 5}), 18);
  EXPECT_EQ(p.degree(), 2u);
  EXPECT_TRUE(p.is_separable());
  EXPECT_FALSE((x * y).is_separable());
  EXPECT_EQ((p - p).is_zero(), true);
}

TEST(Polynomial, RandomRingLaws) {
  std::mt19937 rng(3);
  std::uniform_int_distribution<long> c(-5, 5);
  auto random_poly = [&] {
    IntPoly p(2);
    for (unsigned i = 0; i < 3; ++i)
      for (unsigned j = 0; j + i < 3; ++j) p.add_term(Exponents{i, j}, Int(c(rng)));
    return p;
  };
  for (int t = 0; t < 50; ++t) {
    IntPoly a = random_poly(), b = random_poly();
    std::vector<Int> pt{Int(c(rng)), Int(c(rng))};
    EXPECT_EQ((a * b).eval(pt), a.eval(pt) * b.eval(pt));
    EXPECT_EQ((a + b).eval(pt), a.eval(pt) + b.eval(pt));
  }
}

TEST(QuadSurd, FloorAndCeil) {
  QuadSurd r2 = QuadSurd::root(2);
  EXPECT_EQ(r2.floor(), 1);
  EXPECT_EQ(r2.ceil(), 2);
  EXPECT_EQ((-r2).floor(), -2);
  EXPECT_EQ(QuadSurd(Rational(3), Rational(0), 2).floor(), 3);
  EXPECT_TRUE(QuadSurd(Rational(3), Rational(0), 2).is_integer());
  EXPECT_EQ(QuadSurd::root(9).floor(), 3);
  EXPECT_EQ(compare(r2 + Rational(1), QuadSurd::rational(Rational(12, 5), 2)), 1);
}

TEST(QuadSurd, FloorMatchesLongDoubleAwayFromIntegers) {
  std::mt19937 rng(17);
  std::uniform_int_distribution<long> num(-400, 400), den(1, 9), n(2, 50);
  int checked = 0;
  for (int t = 0; t < 2000; ++t) {
    Rational a(num(rng), den(rng)), b(num(rng), den(rng));
    a.canonicalize();
    b.canonicalize();
    long nn = n(rng);
    QuadSurd q(a, b, nn);
    long double approx = (long double)a.get_d() + (long double)b.get_d() * std::sqrt((long double)nn);
    if (std::fabs(approx - std::round(approx)) < 1e-6) continue;
    ++checked;
    EXPECT_EQ(q.floor(), Int((long)std::floor(approx))) << q.to_string();
    EXPECT_EQ(q.ceil(), Int((long)std::ceil(approx))) << q.to_string();
  }
  EXPECT_GT(checked, 1500);
}

TEST(IntFunction, PolynomialAndRationalFloor) {
  IntFunction u = square();
  EXPECT_EQ(u.at(-7), 49);
  IntFunction r = fn::rational_floor(rat_univariate({1}), rat_univariate({0, 1}), Rounding::Floor, {{P({0}), Int(0)}});
  EXPECT_EQ(r.at(0), 0);
  EXPECT_EQ(r.at(1), 1);
  EXPECT_EQ(r.at(2), 0);
  EXPECT_EQ(r.at(-2), -1);
  IntFunction rc = fn::rational_floor(rat_univariate({1}), rat_univariate({0, 1}), Rounding::Ceil, {{P({0}), Int(0)}});
  EXPECT_EQ(rc.at(2), 1);
  EXPECT_EQ(rc.at(-2), 0);
}

TEST(IntFunction, CombinatorsAndTable) {
  IntFunction u = square();
  EXPECT_EQ(fn::negated(u).at(3), -9);
  EXPECT_EQ(fn::translated(u, P({1})).at(3), 16);
  IntFunction s = fn::stack({u, fn::univariate({0, 1})});
  EXPECT_EQ(s(P({3})), P({9, 3}));
  IntFunction t = fn::table(1, 1, {{P({2}), P({7})}}, P({0}));
  EXPECT_EQ(t.at(2), 7);
  EXPECT_EQ(t.at(5), 0);
  IntFunction ap = fn::abs_power(1, {3, 4});
  EXPECT_EQ(ap(P({-2})), P({9, 16}));
}

TEST(IntFunction, ReducedModThree) {
  IntFunction v = fn::reduced(fn::univariate({0, 1}), Subgroup::lattice(1, {P({3})}));
  EXPECT_EQ(v.at(0), 0);
  EXPECT_EQ(v.at(1), 0);
  EXPECT_EQ(v.at(2), 0);
  EXPECT_EQ(v.at(4), 3);
  EXPECT_EQ(v.at(-1), -3);
}

TEST(IntFunction, ReducedIndexFourLattice) {
  Subgroup h = Subgroup::lattice(2, {P({2, 0}), P({0, 2})});
  IntFunction v = fn::reduced(fn::stack({square(), fn::univariate({1, 1})}), h);
  for (long t = -10; t <= 10; ++t) {
    Point val = v(P({t}));
    EXPECT_TRUE(h.contains(GroupElement::of(val)));
    Point raw = P({t * t, t + 1});
    Point diff = raw - val;
    EXPECT_TRUE(diff[0] >= 0 && diff[0] < 2 && diff[1] >= 0 && diff[1] < 2);
  }
}

// Direct scan of the lattice ball {y : (y + x)^2 < x^2 + 1}.
TEST(BallModeration, SquareMatchesEnumeration) {
  IntFunction v = fn::ball_moderation(square());
  for (long x = -50; x <= 50; ++x) {
    long best = 0;
    bool any = false;
    for (long y = -3 * std::abs(x) - 3; y <= 3 * std::abs(x) + 3; ++y)
      if ((y + x) * (y + x) < x * x + 1) {
        best = any ? std::max(best, y * y) : y * y;
        any = true;
      }
    EXPECT_EQ(v.at(x), -best);
    EXPECT_EQ(v.at(x), -4 * x * x);
  }
}

TEST(BallModeration, IdentityAndZero) {
  EXPECT_EQ(fn::ball_moderation(fn::univariate({0, 1})).at(3), 0);
  IntFunction z = fn::ball_moderation(fn::univariate({0}));
  for (long x = -5; x <= 5; ++x) EXPECT_EQ(z.at(x), 0);
  auto pts = ball_points(P({-3}), 10);
  EXPECT_EQ(pts.size(), 7u);
}

TEST(RotationHeight, AlphaMatchesDefinition) {
  RatPoly f = rat_univariate({0, 0, 1});
  IntFunction h = fn::rotation_height(f, 1, 1, Rounding::Floor);
  auto* rh = h.as<RotationHeightFn>();
  ASSERT_NE(rh, nullptr);
  for (long t = -6; t <= 6; ++t) {
    QuadSurd al = rh->alpha(t);
    // alpha_t = (f(-t/s) - (a d + b c) t / s) / s with s = sqrt(2), f(-t/s) = t^2 / 2.
    Int adbc = rh->a() * rh->d() + rh->b() * rh->c();
    Rational ra(Int(-adbc * t), 2), rb(t * t, 4);
    ra.canonicalize();
    rb.canonicalize();
    QuadSurd expect(ra, rb, 2);
    EXPECT_EQ(compare(al, expect), 0) << t;
  }
}

TEST(FunctionJson, RoundTrip) {
  Subgroup h3 = Subgroup::lattice(1, {P({3})});
  std::vector<IntFunction> fs = {
      square(),
      fn::univariate({2, -1, 0, 5}),
      fn::rational_floor(rat_univariate({1}), rat_univariate({0, 0, 1}), Rounding::Ceil, {{P({0}), Int(0)}}),
      fn::table(1, 1, {{P({1}), P({4})}}, P({-1})),
      fn::abs_power(1, {3}),
      fn::negated(square()),
      fn::translated(square(), P({2})),
      fn::stack({square(), fn::abs_power(1, {2})}),
      fn::reduced(fn::univariate({0, 0, -2}), h3),
      fn::rotation_height(rat_univariate({0, 0, 1}), 1, 1, Rounding::Ceil),
      fn::ball_moderation(square()),
  };
  for (const auto& f : fs) {
    IntFunction g = parse_function(Json::parse(f.to_json().dump()));
    EXPECT_EQ(g.to_json(), f.to_json());
    for (long t = -8; t <= 8; ++t) EXPECT_EQ(g(P({t})), f(P({t}))) << f.to_json().dump();
  }
}
