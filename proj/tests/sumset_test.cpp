#include "support.hpp"

#include <addcomp/oracle.hpp>
#include <addcomp/sumset.hpp>

#include <gtest/gtest.h>

using namespace addcomp;
using namespace testing_support;

namespace {

SymbolicSet spike_w() { return named_sets("cor4.8-W"); }
SymbolicSet spike_m() { return named_sets("cor4.8-M"); }
SearchRadius spike_radius() { return SearchRadius::certified(*catalog_entry("cor4.8-W").bound); }

SymbolicSet column(long n) {
  std::vector<Point> pts;
  for (long i = 0; i <= n; ++i) pts.push_back(P({0, i}));
  return sets::finite(2, pts);
}

// x0 - c in W and x0 - (t, -2t^2) not in W for every other t with |t| <= 1000.
// Beyond that range y + 2t^2 - (x - t)^2 = t^2 + 2xt + y - x^2 is positive for the windows used here.
bool is_spike_witness(const Point& x0, const Point& c) {
  SymbolicSet w = spike_w();
  if (!w.contains(x0 - c)) return false;
  for (long t = -1000; t <= 1000; ++t) {
    Point other = P({t, -2 * t * t});
    if (other != c && w.contains(x0 - other)) return false;
  }
  return true;
}

}  // namespace

TEST(Sumset, SmallIntegers) {
  SymbolicSet a = sets::finite(1, {P({0}), P({1})}), b = sets::finite(1, {P({0}), P({2})});
  auto r = sumset_window(a, b, Window::parse("0..3"), SearchRadius::heuristic(4));
  EXPECT_TRUE(r.complete);
  EXPECT_EQ(r.points, (std::vector<GroupElement>{E({0}), E({1}), E({2}), E({3})}));
}

TEST(Sumset, RayPlusLowerHalfPlane) {
  std::vector<Point> ray;
  for (long n = 0; n <= 40; ++n) ray.push_back(P({0, n}));
  auto cert = is_complement_on_window(named_sets("halfplane-lower"), sets::finite(2, ray), Window::cube(2, -2, 2),
                                      SearchRadius::heuristic(8));
  EXPECT_EQ(cert.status, CoverStatus::Covered);
  EXPECT_EQ(cert.points, 25u);
}

TEST(Sumset, ParabolaSpikeSmallWindowCertified) {
  auto cert = is_complement_on_window(spike_w(), spike_m(), Window::cube(2, -3, 3), spike_radius());
  EXPECT_EQ(cert.status, CoverStatus::Covered);
  for (const auto& [x, c] : cert.witnesses) EXPECT_TRUE(spike_w().contains(x - c));
  Window::cube(2, -3, 3).for_each([&](const Point& x) { EXPECT_TRUE(brute_covered(spike_w(), spike_m(), x, 12)); });
}

TEST(Sumset, PlaneMinusRay) {
  SymbolicSet w = named_sets("lemma2.3-W");
  auto cert = is_complement_on_window(w, named_sets("lemma2.3-S"), Window::cube(2, -5, 5), SearchRadius::heuristic(4));
  EXPECT_EQ(cert.status, CoverStatus::Covered);
  auto lost = is_complement_on_window(w, sets::finite(2, {P({0, 0})}), Window::cube(2, -5, 5), SearchRadius::heuristic(4));
  EXPECT_EQ(lost.status, CoverStatus::NotCovered);
  ASSERT_TRUE(lost.failure.has_value());
  EXPECT_EQ(*lost.failure, E({0, 1}));
}

TEST(Sumset, FullGroupComplement) {
  auto cert = is_complement_on_window(sets::finite(2, {P({7, 7})}), sets::full(GroupSpec::free(2)), Window::cube(2, -4, 4),
                                      SearchRadius::heuristic(2));
  EXPECT_EQ(cert.status, CoverStatus::Covered);
}

TEST(Sumset, ThreadsAgree) {
  EngineOptions opts;
  opts.threads = 3;
  auto a = is_complement_on_window(spike_w(), spike_m(), Window::cube(2, -6, 6), spike_radius());
  auto b = is_complement_on_window(spike_w(), spike_m(), Window::cube(2, -6, 6), spike_radius(), opts);
  EXPECT_EQ(a.to_json(), b.to_json());
}

TEST(Sumset, CertifiedRadiusCandidates) {
  ModerationBound b = *catalog_entry("cor4.8-W").bound;
  EXPECT_EQ(b(P({1})), 2);
  auto r = certified_radius(spike_w(), spike_m(), P({1}), b);
  ASSERT_TRUE(r.m0.has_value());
  EXPECT_EQ(*r.m0, 2);
  EXPECT_EQ(r.candidates, (std::vector<Point>{P({1})}));
  auto r0 = certified_radius(spike_w(), spike_m(), P({0}), b);
  EXPECT_EQ(*r0.m0, 0);
  EXPECT_EQ(r0.candidates, (std::vector<Point>{P({0})}));
  ModerationBound b3 = *catalog_entry("cor4.9-W").bound;
  EXPECT_EQ(b3(P({1, 1})), 4);
}

TEST(Minimality, ParabolaSpikeWitnessOnColumnOne) {
  auto cert = minimality_witnesses(spike_w(), spike_m(), Window::parse("1..1"), spike_radius());
  ASSERT_EQ(cert.entries.size(), 1u);
  ASSERT_TRUE(cert.entries[0].witness.has_value());
  Point x0 = cert.entries[0].witness->free();
  EXPECT_EQ(x0[0], 1);
  // On column 1 the witnesses are exactly the points with y >= 2.
  for (long y = -20; y <= 20; ++y) EXPECT_EQ(is_spike_witness(P({1, y}), P({1, -2})), y >= 2) << y;
  EXPECT_TRUE(is_spike_witness(x0, P({1, -2})));
  EXPECT_LE(x0[1], 2 * 1 * 1 + 1);
}

TEST(Minimality, ParabolaSpikeAllWitnessesVerified) {
  auto cert = minimality_witnesses(spike_w(), spike_m(), Window::parse("-6..6"), spike_radius());
  EXPECT_TRUE(cert.all_found);
  for (const auto& e : cert.entries) {
    ASSERT_TRUE(e.witness.has_value());
    EXPECT_TRUE(is_spike_witness(e.witness->free(), e.c.free())) << e.c.to_string();
  }
}

TEST(Minimality, PlaneMinusRayWitnesses) {
  auto cert = minimality_witnesses(named_sets("lemma2.3-W"), named_sets("lemma2.3-S"), Window::cube(2, -2, 2),
                                   SearchRadius::heuristic(4));
  ASSERT_EQ(cert.entries.size(), 2u);
  EXPECT_EQ(cert.entries[0].witness, E({1, 1}));
  EXPECT_EQ(cert.entries[1].witness, E({0, 1}));
}

TEST(Minimality, HalfPlaneHasNoWitness) {
  auto cert = minimality_witnesses(named_sets("halfplane-lower"), column(10), Window::parse("0..0,5..5"),
                                   SearchRadius::heuristic(8));
  ASSERT_EQ(cert.entries.size(), 1u);
  EXPECT_FALSE(cert.entries[0].witness.has_value());
  EXPECT_FALSE(cert.all_found);
}

TEST(Minimality, SingletonInFullGroup) {
  auto cert = minimality_witnesses(sets::full(GroupSpec::free(2)), sets::finite(2, {P({0, 0})}), Window::cube(2, -1, 1),
                                   SearchRadius::heuristic(2));
  ASSERT_EQ(cert.entries.size(), 1u);
  EXPECT_TRUE(cert.entries[0].witness.has_value());
}

// Witnesses for the rotated spiked pair, checked against every complement element in a wide box.
TEST(Minimality, Rot45SpikedWitnessesBruteForce) {
  SymbolicSet w = named_sets("rot45-spiked-W"), m = named_sets("rot45-spiked-M");
  auto entry = catalog_entry("rot45-spiked-W");
  auto cert = minimality_witnesses(w, m, Window::parse("-3..3"), SearchRadius::certified(*entry.bound));
  EXPECT_TRUE(cert.all_found);
  auto others = m.enumerate(Window::cube(2, -120, 120));
  for (const auto& e : cert.entries) {
    ASSERT_TRUE(e.witness.has_value());
    const GroupElement& x0 = *e.witness;
    EXPECT_TRUE(w.contains(x0 - e.c));
    for (const auto& c : others)
      if (!(c == e.c)) EXPECT_FALSE(w.contains(x0 - c)) << x0.to_string() << " via " << c.to_string();
  }
}

TEST(Shrink, HalfPlaneColumn) {
  SymbolicSet w = named_sets("halfplane-lower");
  auto one = shrink_complement_demo(w, column(10), Window::cube(2, -5, 5), 1, {E({0, 3})});
  EXPECT_TRUE(one.coverage_persisted);
  auto three = shrink_complement_demo(w, column(10), Window::cube(2, -5, 5), 3);
  EXPECT_TRUE(three.coverage_persisted);
  EXPECT_EQ(three.remaining.size(), 8u);
  auto single = shrink_complement_demo(w, sets::finite(2, {P({0, 0})}), Window::cube(2, -5, 5), 1);
  EXPECT_FALSE(single.coverage_persisted);
}

// Engine and bit-mask oracle agree on every pair of small subsets of Z_6.
TEST(Sumset, AgreesWithOracleInZ6) {
  GroupSpec z6 = GroupSpec::cyclic(6);
  FiniteGroupTable g(z6);
  Window whole(std::vector<std::pair<Int, Int>>{});
  for (Mask w = 1; w < 64; ++w)
    for (Mask c = 1; c < 64; ++c) {
      if (__builtin_popcount(w) > 3 || __builtin_popcount(c) > 3) continue;
      auto cert = is_complement_on_window(sets::finite(z6, g.elements_of(w)), sets::finite(z6, g.elements_of(c)), whole,
                                          SearchRadius::heuristic(1));
      EXPECT_EQ(cert.status == CoverStatus::Covered, g.is_complement(w, c)) << g.format(w) << " " << g.format(c);
    }
}

// Columns with odd-prime periods: coverage is certified, minimality stays open.
TEST(Sumset, OddPrimeColumnsCovered) {
  auto cert = is_complement_on_window(named_sets("ex6.2-W"), named_sets("ex6.2-M"), Window::cube(2, -8, 8),
                                      SearchRadius::certified(*catalog_entry("ex6.2-W").bound));
  EXPECT_EQ(cert.status, CoverStatus::Covered);
  auto mins = minimality_witnesses(named_sets("ex6.2-W"), named_sets("ex6.2-M"), Window::parse("1..2"),
                                   SearchRadius::certified(*catalog_entry("ex6.2-W").bound));
  EXPECT_FALSE(mins.all_found);
}
