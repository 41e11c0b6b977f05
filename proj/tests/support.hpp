#pragma once

#include <addcomp/constructions.hpp>
#include <addcomp/group.hpp>
#include <addcomp/int_function.hpp>
#include <addcomp/symbolic_set.hpp>

#include <initializer_list>
#include <random>
#include <vector>

namespace testing_support {

using namespace addcomp;

inline Point P(std::initializer_list<long> xs) { return make_point(xs); }
inline GroupElement E(std::initializer_list<long> xs) { return GroupElement::of(make_point(xs)); }
inline IntFunction square() { return fn::univariate({0, 0, 1}); }

inline Window random_window(std::mt19937& rng, std::size_t dim, long reach, long max_side) {
  std::uniform_int_distribution<long> lo(-reach, reach), side(0, max_side);
  std::vector<std::pair<Int, Int>> b;
  for (std::size_t i = 0; i < dim; ++i) {
    long l = lo(rng);
    b.emplace_back(Int(l), Int(l + side(rng)));
  }
  return Window(b);
}

// x in W + C, by trying every c of C in the box x +- reach (membership calls only).
inline bool brute_covered(const SymbolicSet& w, const SymbolicSet& c, const Point& x, long reach) {
  bool hit = false;
  Window::cube(x.size(), -reach, reach).translated(x).for_each([&](const Point& p) {
    if (!hit && c.contains(p) && w.contains(x - p)) hit = true;
  });
  return hit;
}

}  // namespace testing_support
