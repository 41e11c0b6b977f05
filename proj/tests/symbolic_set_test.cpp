#include "support.hpp"

#include <addcomp/json_io.hpp>

#include <gtest/gtest.h>

using namespace addcomp;
using namespace testing_support;

namespace {

SymbolicSet spiked_square() { return sets::spiked(sets::finite(1, {P({0})}), square()); }

// Sets of several kinds in Z^2 used by the property checks.
std::vector<SymbolicSet> sample_sets() {
  GroupSpec z1 = GroupSpec::free(1), z2 = GroupSpec::free(2);
  IntFunction neg2 = fn::univariate({0, 0, -2});
  std::vector<SymbolicSet> s;
  s.push_back(sets::finite(2, {P({1, 1}), P({5, 5}), P({-3, 2})}));
  s.push_back(sets::full(z2));
  s.push_back(sets::cofinite(z2, {E({0, 0}), E({2, -1})}));
  s.push_back(sets::ray_complement(P({0, 0}), 1, 1));
  s.push_back(sets::truncated(sets::full(z1), square(), Side::Below));
  s.push_back(sets::truncated(sets::finite(1, {P({0}), P({3})}), fn::univariate({1, 1}), Side::Above));
  s.push_back(spiked_square());
  s.push_back(sets::spiked(sets::finite(1, {P({0})}), square(), Fill::BaseOnly));
  s.push_back(sets::bounded_spiked(sets::finite(1, {P({1})}), square(), UnimodularBasis({P({1, 1}), P({0, 1})})));
  s.push_back(sets::coset_gap_spiked(sets::finite(1, {P({0})}), square(), Subgroup::lattice(1, {P({3})}), P({1})));
  s.push_back(sets::column_progressions(sets::full(z1), fn::abs_power(1, {2})));
  s.push_back(sets::graph(sets::full(z1), neg2));
  s.push_back(sets::graph(sets::finite(1, {P({-1}), P({2})}), neg2, UnimodularBasis({P({0, 1}), P({1, 0})})));
  s.push_back(sets::translate(spiked_square(), E({2, -3})));
  s.push_back(sets::set_union({sets::finite(2, {P({9, 9})}), sets::graph(sets::full(z1), neg2)}));
  s.push_back(sets::basis_image(spiked_square(), UnimodularBasis({P({1, 1}), P({0, 1})})));
  s.push_back(sets::subgroup(Subgroup::lattice(2, {P({1, 1}), P({0, 3})})));
  s.push_back(sets::restricted(spiked_square(), Subgroup::lattice(2, {P({2, 0}), P({0, 1})})));
  s.push_back(named_sets("rot45-W+"));
  s.push_back(named_sets("sideparabola-W-"));
  s.push_back(named_sets("ex6.1-W"));
  s.push_back(named_sets("thm511-W"));
  return s;
}

void expect_enumeration_matches(const SymbolicSet& s, const Window& w) {
  auto listed = s.enumerate(w);
  std::size_t k = 0;
  for_each_element(s.spec(), w, [&](const GroupElement& g) {
    if (!s.contains(g)) return;
    ASSERT_LT(k, listed.size()) << s.kind() << " on " << w.to_string();
    EXPECT_EQ(listed[k], g) << s.kind() << " on " << w.to_string();
    ++k;
  });
  EXPECT_EQ(k, listed.size()) << s.kind() << " on " << w.to_string();
}

}  // namespace

TEST(SymbolicSet, SpikedMembership) {
  SymbolicSet w = spiked_square();
  EXPECT_TRUE(w.contains(P({3, 8})));
  EXPECT_FALSE(w.contains(P({3, 9})));
  EXPECT_TRUE(w.contains(P({0, 1000000})));
  SymbolicSet base_only = sets::spiked(sets::finite(1, {P({0})}), square(), Fill::BaseOnly);
  EXPECT_FALSE(base_only.contains(P({3, 8})));
  EXPECT_TRUE(base_only.contains(P({0, -4})));
}

TEST(SymbolicSet, EnumerationExamples) {
  EXPECT_EQ(sets::finite(2, {P({1, 1}), P({5, 5})}).enumerate(Window::parse("0..2,0..2")),
            (std::vector<GroupElement>{E({1, 1})}));
  EXPECT_EQ(sets::truncated(sets::full(GroupSpec::free(1)), square(), Side::Below).enumerate(Window::parse("0..1,0..1")),
            (std::vector<GroupElement>{E({1, 0})}));
  EXPECT_EQ(sets::graph(sets::full(GroupSpec::free(1)), fn::univariate({0, 0, -2})).enumerate(Window::parse("-2..2,-10..0")),
            (std::vector<GroupElement>{E({-2, -8}), E({-1, -2}), E({0, 0}), E({1, -2}), E({2, -8})}));
}

TEST(SymbolicSet, RayComplement) {
  SymbolicSet w = named_sets("lemma2.3-W");
  EXPECT_FALSE(w.contains(P({0, 1})));
  EXPECT_FALSE(w.contains(P({0, 40})));
  EXPECT_TRUE(w.contains(P({0, 0})));
  EXPECT_TRUE(w.contains(P({1, 5})));
}

TEST(SymbolicSet, TranslateExamples) {
  GroupSpec z1 = GroupSpec::free(1);
  SymbolicSet t = sets::translate(sets::finite(1, {P({0})}), E({5}));
  EXPECT_EQ(t.enumerate(Window::parse("-10..10")), (std::vector<GroupElement>{E({5})}));
  SymbolicSet s = spiked_square();
  SymbolicSet same = sets::translate(s, GroupElement::zero(GroupSpec::free(2)));
  Window::cube(2, -6, 6).for_each([&](const Point& p) { EXPECT_EQ(same.contains(p), s.contains(p)); });
  (void)z1;
}

TEST(SymbolicSet, TranslateRoundTripProperty) {
  std::mt19937 rng(21);
  std::uniform_int_distribution<long> d(-20, 20);
  for (const auto& s : sample_sets()) {
    GroupElement g = E({d(rng), d(rng)});
    SymbolicSet back = sets::translate(sets::translate(s, g), -g);
    for (int i = 0; i < 200; ++i) {
      Point p = P({d(rng), d(rng)});
      EXPECT_EQ(back.contains(p), s.contains(p)) << s.kind();
    }
  }
}

TEST(SymbolicSet, BasisImageExamples) {
  GroupSpec z1 = GroupSpec::free(1);
  SymbolicSet s = spiked_square();
  SymbolicSet id = sets::basis_image(s, UnimodularBasis::identity(2));
  Window::cube(2, -6, 6).for_each([&](const Point& p) { EXPECT_EQ(id.contains(p), s.contains(p)); });

  SymbolicSet below = sets::truncated(sets::full(z1), square(), Side::Below);
  SymbolicSet above = sets::truncated(sets::full(z1), fn::univariate({0, 0, -1}), Side::Above);
  SymbolicSet flipped = sets::basis_image(below, UnimodularBasis({P({1, 0}), P({0, -1})}));
  Window::cube(2, -8, 8).for_each([&](const Point& p) { EXPECT_EQ(flipped.contains(p), above.contains(p)); });

  SymbolicSet f = sets::basis_image(sets::finite(2, {P({1, 0})}), UnimodularBasis({P({1, 1}), P({0, 1})}));
  EXPECT_EQ(f.enumerate(Window::cube(2, -3, 3)), (std::vector<GroupElement>{E({1, 0})}));
  SymbolicSet g = sets::basis_image(sets::finite(2, {P({0, 1})}), UnimodularBasis({P({1, 1}), P({0, 1})}));
  EXPECT_EQ(g.enumerate(Window::cube(2, -3, 3)), (std::vector<GroupElement>{E({1, 1})}));
}

TEST(SymbolicSet, BasisImageRoundTripProperty) {
  UnimodularBasis u({P({2, 1}), P({1, 1})});
  for (const auto& s : sample_sets()) {
    SymbolicSet back = sets::basis_image(sets::basis_image(s, u), u.inverse());
    Window::cube(2, -7, 7).for_each([&](const Point& p) { EXPECT_EQ(back.contains(p), s.contains(p)) << s.kind(); });
  }
}

TEST(SymbolicSet, SideParabolas) {
  SymbolicSet right = named_sets("sideparabola-W+"), left = named_sets("sideparabola-W-");
  Window::cube(2, -10, 10).for_each([&](const Point& p) {
    Int lhs = p[0], rhs = p[1] * p[1];
    EXPECT_EQ(right.contains(p), lhs > rhs);
    EXPECT_EQ(left.contains(p), lhs < rhs);
  });
}

TEST(SymbolicSet, TorsionGroups) {
  GroupSpec g = GroupSpec::parse("ZxZ/3");
  SymbolicSet h = sets::subgroup(Subgroup(g, {GroupElement(g, P({1}), P({1}))}));
  EXPECT_TRUE(h.contains(GroupElement(g, P({2}), P({2}))));
  EXPECT_FALSE(h.contains(GroupElement(g, P({2}), P({1}))));
  expect_enumeration_matches(h, Window::parse("-4..4"));
  SymbolicSet t = sets::translate(h, GroupElement(g, P({0}), P({1})));
  expect_enumeration_matches(t, Window::parse("-4..4"));
}

TEST(SymbolicSet, EnumerateAgreesWithContainsOnRandomWindows) {
  std::mt19937 rng(1234);
  auto sets = sample_sets();
  for (int i = 0; i < 1000; ++i) {
    const auto& s = sets[i % sets.size()];
    expect_enumeration_matches(s, random_window(rng, 2, 25, 9));
  }
}

TEST(SymbolicSet, CatalogEnumerationAgrees) {
  std::mt19937 rng(99);
  for (const auto& id : catalog_ids()) {
    SymbolicSet s = named_sets(id);
    long side = s.spec().dim() >= 4 ? 2 : s.spec().dim() == 3 ? 4 : 8;
    for (int i = 0; i < 5; ++i) expect_enumeration_matches(s, random_window(rng, s.spec().dim(), 12, side));
  }
}

TEST(SymbolicSet, JsonRoundTrip) {
  for (const auto& s : sample_sets()) {
    SymbolicSet r = parse_set(Json::parse(s.to_json().dump()));
    EXPECT_EQ(r.to_json(), s.to_json()) << s.kind();
    Window::cube(2, -6, 6).for_each([&](const Point& p) { EXPECT_EQ(r.contains(p), s.contains(p)) << s.kind(); });
  }
  for (const auto& id : catalog_ids()) {
    SymbolicSet s = named_sets(id);
    SymbolicSet r = parse_set(Json::parse(s.to_json().dump()));
    EXPECT_EQ(r.to_json(), s.to_json()) << id;
  }
}

TEST(SymbolicSet, ErrorsOnRankMismatch) {
  EXPECT_THROW(spiked_square().contains(P({1, 2, 3})), Error);
  EXPECT_THROW(sets::set_union({spiked_square(), sets::finite(1, {P({0})})}), Error);
}
