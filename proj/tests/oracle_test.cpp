#include "support.hpp"

#include <addcomp/oracle.hpp>

#include <gtest/gtest.h>

using namespace addcomp;
using namespace testing_support;

namespace {

Mask bits(std::initializer_list<int> xs) {
  Mask m = 0;
  for (int x : xs) m |= Mask(1) << x;
  return m;
}

}  // namespace

TEST(Oracle, CyclicTables) {
  FiniteGroupTable g(GroupSpec::cyclic(4));
  EXPECT_EQ(g.order(), 4u);
  EXPECT_EQ(g.add(3, 3), 2u);
  EXPECT_EQ(g.neg(1), 3u);
  EXPECT_EQ(g.shift(bits({0, 1}), 3), bits({3, 0}));
  EXPECT_EQ(g.sumset(bits({0, 1}), bits({0, 2})), g.full());
}

TEST(Oracle, ComplementExamples) {
  FiniteGroupTable z4(GroupSpec::cyclic(4));
  EXPECT_TRUE(z4.is_complement(bits({0, 1}), bits({0, 2})));
  EXPECT_EQ(all_complements(z4, z4.full()).size(), 15u);
  FiniteGroupTable z3(GroupSpec::cyclic(3));
  EXPECT_EQ(all_complements(z3, bits({0})), (std::vector<Mask>{z3.full()}));
}

TEST(Oracle, MinimalExamples) {
  FiniteGroupTable z4(GroupSpec::cyclic(4));
  EXPECT_EQ(minimal_complements(z4, bits({0, 1})), (std::vector<Mask>{bits({0, 2}), bits({1, 3})}));
  auto singles = minimal_complements(z4, z4.full());
  EXPECT_EQ(singles, (std::vector<Mask>{bits({0}), bits({1}), bits({2}), bits({3})}));

  FiniteGroupTable z6(GroupSpec::cyclic(6));
  auto mins = minimal_complements(z6, bits({0, 2, 4}));
  std::vector<Mask> expect;
  for (int a = 0; a < 6; ++a)
    for (int b = a + 1; b < 6; ++b)
      if ((b - a) % 2 == 1) expect.push_back(bits({a, b}));
  std::sort(expect.begin(), expect.end());
  EXPECT_EQ(mins, expect);
}

TEST(Oracle, AgreesWithBruteForce) {
  std::mt19937 rng(8);
  for (const auto& spec : small_groups(12)) {
    FiniteGroupTable g(spec);
    std::uniform_int_distribution<Mask> pick(1, g.full());
    for (int i = 0; i < 40; ++i) {
      Mask w = pick(rng);
      EXPECT_EQ(minimal_complements(g, w), minimal_complements_brute(g, w)) << spec.to_string() << " " << g.format(w);
    }
  }
}

TEST(Oracle, GreedyIsMinimal) {
  std::mt19937 rng(2);
  for (const auto& spec : small_groups(16)) {
    FiniteGroupTable g(spec);
    std::uniform_int_distribution<Mask> pick(1, g.full());
    for (int i = 0; i < 20; ++i) {
      Mask w = pick(rng);
      EXPECT_TRUE(g.is_minimal_complement(w, greedy_minimal_complement(g, w)));
    }
  }
}

TEST(Oracle, TranslationClosure) {
  for (long n = 2; n <= 10; ++n) {
    FiniteGroupTable g(GroupSpec::cyclic(n));
    for (Mask w = 1; w <= g.full(); w += 3) {
      auto mins = minimal_complements(g, w);
      for (Mask m : mins)
        for (std::size_t t = 0; t < g.order(); ++t)
          EXPECT_TRUE(std::binary_search(mins.begin(), mins.end(), g.shift(m, t)));
    }
  }
}

TEST(Oracle, SubgroupsOfSmallGroups) {
  FiniteGroupTable z12(GroupSpec::cyclic(12));
  EXPECT_EQ(z12.subgroups().size(), 6u);
  FiniteGroupTable k4(GroupSpec::parse("Z2xZ2"));
  EXPECT_EQ(k4.subgroups().size(), 5u);
  for (Mask h : k4.subgroups()) EXPECT_TRUE(k4.is_subgroup(h));
  EXPECT_EQ(z12.coset_representatives(bits({0, 4, 8})), (std::vector<std::size_t>{0, 1, 2, 3}));
}

TEST(SubgroupEquivalence, Examples) {
  FiniteGroupTable z6(GroupSpec::cyclic(6));
  auto r = thm24_check(z6, bits({0, 3}), bits({0}));
  EXPECT_TRUE(r.ok());
  EXPECT_TRUE(r.exists_in_h);
  EXPECT_TRUE(z6.is_minimal_complement(bits({0}), bits({0, 1, 2})) == false);
  EXPECT_TRUE(z6.is_minimal_complement(bits({0, 3}), bits({0, 1, 2})));

  FiniteGroupTable g(GroupSpec::parse("Z4xZ2"));
  GroupSpec s = g.spec();
  auto el = [&](long a, long b) { return GroupElement(s, {}, P({a, b})); };
  Mask h = g.mask_of({el(0, 0), el(1, 0), el(2, 0), el(3, 0)});
  Mask w = g.mask_of({el(0, 0), el(1, 0)});
  EXPECT_TRUE(thm24_check(g, h, w).ok());
  EXPECT_TRUE(thm24_check(g, g.full(), w).ok());
}

TEST(SubgroupEquivalence, AllTriplesUpToEight) {
  for (const auto& spec : small_groups(8)) {
    FiniteGroupTable g(spec);
    for (Mask h : g.subgroups())
      for (Mask w = 1; w <= g.full(); ++w) {
        if (w & ~h) continue;
        auto r = thm24_check(g, h, w);
        EXPECT_TRUE(r.ok()) << spec.to_string() << " " << g.format(h) << " " << g.format(w) << ": " << r.detail;
      }
  }
}
