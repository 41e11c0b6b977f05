#include "support.hpp"

#include <addcomp/moderation.hpp>
#include <addcomp/oracle.hpp>
#include <addcomp/sumset.hpp>

#include <gtest/gtest.h>

using namespace addcomp;
using namespace testing_support;

namespace {

RatPoly rat_square() { return RatPoly::univariate({Rational(0), Rational(0), Rational(1)}); }

// Exact test of (a x + b y)/s against (b x - a y)^2 / s^2 with s = sqrt(a^2 + b^2):
// compares s (a x + b y) with (b x - a y)^2.
int direct_side(long a, long b, long x, long y) {
  Int lhs_lin = Int(a * x + b * y);
  Int rhs = Int(b * x - a * y) * Int(b * x - a * y);
  Int s2 = Int(a * a + b * b);
  // sign of sqrt(s2) * lhs_lin - rhs
  if (lhs_lin <= 0) return rhs == 0 && lhs_lin == 0 ? 0 : -1;
  Int l2 = s2 * lhs_lin * lhs_lin, r2 = rhs * rhs;
  return l2 > r2 ? 1 : l2 < r2 ? -1 : 0;
}

}  // namespace

TEST(GraphRecipe, SquareGraph) {
  auto r = graph_min_complement(sets::finite(1, {P({0})}), sets::full(GroupSpec::free(1)), fn::univariate({0, 0, -2}));
  Window::parse("-6..6,-80..10").for_each([&](const Point& p) {
    EXPECT_EQ(r.result.contains(p), p[1] == -2 * p[0] * p[0]) << to_string(p);
  });
  EXPECT_EQ(r.kind, RecipeKind::GraphOfModeration);
}

TEST(GraphRecipe, ParaboloidGraph) {
  IntPoly s = IntPoly::variable(2, 0), t = IntPoly::variable(2, 1);
  auto r = graph_min_complement(sets::finite(2, {P({0, 0})}), sets::full(GroupSpec::free(2)),
                                fn::poly(Int(-2) * (s * s + t * t)));
  Window::parse("-3..3,-3..3,-40..2").for_each([&](const Point& p) {
    EXPECT_EQ(r.result.contains(p), p[2] == -2 * (p[0] * p[0] + p[1] * p[1]));
  });
}

TEST(GraphRecipe, WholeBaseSinglePoint) {
  GroupSpec z1 = GroupSpec::free(1);
  IntFunction v = fn::univariate({5, 0, -1});
  auto r = graph_min_complement(sets::full(z1), sets::finite(1, {P({0})}), v);
  EXPECT_EQ(r.result.enumerate(Window::cube(2, -10, 10)), (std::vector<GroupElement>{E({0, 5})}));
  SymbolicSet bz = sets::spiked(sets::full(z1), fn::univariate({0}));
  auto cert = is_complement_on_window(bz, r.result, Window::cube(2, -6, 6), SearchRadius::heuristic(2));
  EXPECT_EQ(cert.status, CoverStatus::Covered);
  auto none = is_complement_on_window(named_sets("cor4.8-W"), r.result, Window::cube(2, -6, 6), SearchRadius::heuristic(2));
  EXPECT_EQ(none.status, CoverStatus::NotCovered);
}

TEST(GraphRecipe, CertifiedCoverageWithBound) {
  IntFunction u = square();
  Moderation m = ball_moderation(u);
  auto r = graph_min_complement(sets::finite(1, {P({0})}), sets::full(GroupSpec::free(1)), m.v, std::nullopt, m.bound);
  SymbolicSet w = sets::spiked(sets::finite(1, {P({0})}), u);
  auto cert = is_complement_on_window(w, r.result, Window::cube(2, -10, 10), SearchRadius::certified(*r.bound));
  EXPECT_EQ(cert.status, CoverStatus::Covered);
}

TEST(SubgroupRestrict, Cases) {
  GroupSpec z2 = GroupSpec::free(2);
  Subgroup axis = Subgroup::lattice(2, {P({1, 0})});
  SymbolicSet r = subgroup_restrict(sets::full(z2), axis);
  Window::cube(2, -4, 4).for_each([&](const Point& p) { EXPECT_EQ(r.contains(p), p[1] == 0); });

  GroupSpec z6 = GroupSpec::cyclic(6);
  auto el = [&](long k) { return GroupElement(z6, {}, P({k})); };
  Subgroup h(z6, {el(3)});
  SymbolicSet m = sets::finite(z6, {el(0), el(1), el(2)});
  SymbolicSet mh = subgroup_restrict(m, h);
  EXPECT_EQ(mh.enumerate(Window(std::vector<std::pair<Int, Int>>{})), (std::vector<GroupElement>{el(0)}));
  FiniteGroupTable g(z6);
  Mask hm = g.mask_of({el(0), el(3)});
  EXPECT_TRUE(g.is_minimal_complement(hm, g.mask_of({el(0), el(1), el(2)})));
  EXPECT_TRUE(g.is_minimal_complement(hm, g.mask_of({el(0)}), hm));

  SymbolicSet graph = sets::graph(sets::full(GroupSpec::free(1)), fn::univariate({0, 1, -1}));
  SymbolicSet gh = subgroup_restrict(graph, axis, Window::parse("-10..10"));
  ASSERT_TRUE(gh.as<FiniteSet>() != nullptr);
  EXPECT_EQ(gh.enumerate(Window::cube(2, -20, 20)), (std::vector<GroupElement>{E({0, 0}), E({1, 0})}));
}

TEST(CosetLift, Examples) {
  Subgroup two = Subgroup::lattice(1, {P({2})});
  SymbolicSet lifted = coset_lift(sets::finite(1, {P({0})}), two, {E({0}), E({1})});
  EXPECT_EQ(lifted.enumerate(Window::parse("-5..5")), (std::vector<GroupElement>{E({0}), E({1})}));
  EXPECT_THROW(coset_lift(sets::finite(1, {P({0})}), two, {E({0}), E({2})}), Error);

  GroupSpec z6 = GroupSpec::cyclic(6);
  auto el = [&](long k) { return GroupElement(z6, {}, P({k})); };
  FiniteGroupTable g(z6);
  Subgroup h(z6, {el(2)});
  Mask hm = g.mask_of({el(0), el(2), el(4)}), w = g.mask_of({el(0), el(2)});
  // {0} alone does not cover H; {0, 2} is a minimal complement of W in H.
  EXPECT_FALSE(g.is_complement(w, g.mask_of({el(0)}), hm));
  EXPECT_TRUE(g.is_minimal_complement(w, g.mask_of({el(0), el(2)}), hm));
  SymbolicSet l6 = coset_lift(sets::finite(z6, {el(0), el(2)}), h, {el(0), el(1)});
  Mask lm = g.mask_of(l6.enumerate(Window(std::vector<std::pair<Int, Int>>{})));
  EXPECT_EQ(lm, g.mask_of({el(0), el(1), el(2), el(3)}));
  EXPECT_TRUE(g.is_minimal_complement(w, lm));
}

TEST(CosetLift, AxisIntoPlane) {
  Subgroup axis = Subgroup::lattice(2, {P({1, 0})});
  SymbolicSet w = sets::finite(2, {P({0, 0}), P({1, 0})});
  SymbolicSet evens = sets::subgroup(Subgroup::lattice(2, {P({2, 0})}));
  auto reps = coset_representatives(axis, 25);
  SymbolicSet lifted = coset_lift(evens, axis, reps);
  auto cert = is_complement_on_window(w, lifted, Window::cube(2, -5, 5), SearchRadius::heuristic(3));
  EXPECT_EQ(cert.status, CoverStatus::Covered);
  auto mins = minimality_witnesses(w, lifted, Window::cube(2, -4, 4), SearchRadius::heuristic(3));
  EXPECT_TRUE(mins.all_found);
}

// Minimal complements of W inside H, lifted along coset representatives, stay minimal in G;
// every group of order at most 16, subsets W of H with at most three elements.
TEST(CosetLift, SubgroupRoundTripsSmallGroups) {
  Window whole(std::vector<std::pair<Int, Int>>{});
  std::size_t checked = 0;
  for (const auto& spec : small_groups(16)) {
    FiniteGroupTable g(spec);
    for (Mask hm : g.subgroups()) {
      std::vector<GroupElement> gens = g.elements_of(hm);
      Subgroup h(spec, gens);
      std::vector<GroupElement> reps;
      for (std::size_t i : g.coset_representatives(hm)) reps.push_back(g.element(i));
      for (Mask w = 1; w <= g.full(); ++w) {
        if ((w & ~hm) || __builtin_popcount(w) > 3) continue;
        auto mins = minimal_complements(g, w, hm);
        ASSERT_FALSE(mins.empty());
        for (std::size_t k = 0; k < mins.size() && k < 2; ++k) {
          SymbolicSet lifted = coset_lift(sets::finite(spec, g.elements_of(mins[k])), h, reps);
          Mask lm = g.mask_of(lifted.enumerate(whole));
          EXPECT_TRUE(g.is_minimal_complement(w, lm)) << spec.to_string() << " " << g.format(w) << " " << g.format(lm);
          SymbolicSet back = subgroup_restrict(lifted, h);
          EXPECT_EQ(g.mask_of(back.enumerate(whole)), mins[k]);
          ++checked;
        }
      }
    }
  }
  EXPECT_GT(checked, 500u);
}

TEST(Rotation, FortyFiveMatchesDirectInequality) {
  SymbolicSet above = rotated_truncated_sets(rat_square(), 1, 1, Side::Above, false);
  SymbolicSet below = rotated_truncated_sets(rat_square(), 1, 1, Side::Below, false);
  std::size_t disagreements = 0;
  Window::cube(2, -12, 12).for_each([&](const Point& p) {
    int side = direct_side(1, 1, p[0].get_si(), p[1].get_si());
    disagreements += above.contains(p) != (side > 0);
    disagreements += below.contains(p) != (side < 0);
  });
  EXPECT_EQ(disagreements, 0u);
  Window::cube(2, -12, 12).for_each([&](const Point& p) {
    EXPECT_EQ(named_sets("rot45-W+").contains(p), above.contains(p));
  });
}

TEST(Rotation, OtherSlopesMatchDirectInequality) {
  for (auto [a, b] : std::vector<std::pair<long, long>>{{2, 3}, {1, 2}, {3, 1}, {-1, 2}}) {
    SymbolicSet above = rotated_truncated_sets(rat_square(), a, b, Side::Above, false);
    SymbolicSet below = rotated_truncated_sets(rat_square(), a, b, Side::Below, false);
    Window::cube(2, -10, 10).for_each([&](const Point& p) {
      int side = direct_side(a, b, p[0].get_si(), p[1].get_si());
      EXPECT_EQ(above.contains(p), side > 0) << a << "/" << b << " " << to_string(p);
      EXPECT_EQ(below.contains(p), side < 0) << a << "/" << b << " " << to_string(p);
    });
  }
}

TEST(Rotation, NoRotationIsTruncatedColumns) {
  SymbolicSet rot = rotated_truncated_sets(rat_square(), 0, 1, Side::Above, false);
  SymbolicSet plain = sets::truncated(sets::full(GroupSpec::free(1)), square(), Side::Above);
  Window::cube(2, -10, 10).for_each([&](const Point& p) { EXPECT_EQ(rot.contains(p), plain.contains(p)); });
}

TEST(Rotation, AxisIncluded) {
  SymbolicSet w = rotated_truncated_sets(rat_square(), 1, 1, Side::Above, true);
  for (long t = -10; t <= 10; ++t) EXPECT_TRUE(w.contains(P({t, t})));
  auto cert = is_complement_on_window(named_sets("rot45-spiked-W"), named_sets("rot45-spiked-M"), Window::cube(2, -6, 6),
                                      SearchRadius::certified(*catalog_entry("rot45-spiked-W").bound));
  EXPECT_EQ(cert.status, CoverStatus::Covered);
}

TEST(CosetGap, SquareWithGapModThree) {
  IntFunction v = fn::univariate({0, 0, -2});
  Moderation mod{v, *analytic_bound(square(), v)};
  Subgroup three = Subgroup::lattice(1, {P({3})});
  auto r = thm511_max_set(sets::finite(1, {P({0})}), square(), three, P({1}), sets::full(GroupSpec::free(1)), mod);
  Window::cube(2, -9, 9).for_each([&](const Point& p) {
    bool expect = p[0] == 0 || p[1] < p[0] * p[0] || mod_floor(p[1] - 1, 3) != 0;
    EXPECT_EQ(r.x.contains(p), expect) << to_string(p);
  });
  for (long t = -6; t <= 6; ++t) {
    auto col = r.complement.result.enumerate(Window::parse(std::to_string(t) + ".." + std::to_string(t) + ",-200..0"));
    ASSERT_EQ(col.size(), 1u);
    EXPECT_EQ(mod_floor(col[0].free()[1], 3), 0);
  }
  auto cert = is_complement_on_window(r.x, r.complement.result, Window::cube(2, -8, 8),
                                      SearchRadius::certified(*r.complement.bound));
  EXPECT_EQ(cert.status, CoverStatus::Covered);
}

TEST(Catalog, Lookup) {
  EXPECT_EQ(named_sets("cor4.8-W").kind(), "spiked");
  EXPECT_EQ(named_sets("lemma2.3-W").kind(), "ray_complement");
  EXPECT_EQ(named_sets("ex5.9-W").spec(), GroupSpec::free(4));
  EXPECT_TRUE(named_sets("ex5.9-W").contains(P({1, 1, 1, 1})));
  EXPECT_FALSE(named_sets("ex5.9-W").contains(P({1, 1, 2, 1})));
  EXPECT_THROW(catalog_entry("no-such-id"), Error);
  for (const auto& id : catalog_ids()) {
    auto e = catalog_entry(id);
    EXPECT_EQ(e.id, id);
    if (!e.complement.empty()) EXPECT_NO_THROW(catalog_entry(e.complement));
  }
}
