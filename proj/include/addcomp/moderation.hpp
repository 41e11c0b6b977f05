#pragma once

#include <addcomp/group.hpp>
#include <addcomp/int_function.hpp>

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace addcomp {

// Upper bound m0(x0) for the first coordinate of u(x) + v(x0 - x) over all x.
struct ModerationBound {
  std::string kind;
  std::string description;
  std::function<Int(const Point&)> m0;

  Int operator()(const Point& x0) const { return m0(x0); }
  explicit operator bool() const { return static_cast<bool>(m0); }
};

struct Moderation {
  IntFunction v;
  ModerationBound bound;
};

// v(x) = -lexmax u(B(-x, |x|^2 + 1)); the bound scans the finite set where the
// ball argument does not apply.
Moderation ball_moderation(const IntFunction& u);

// u an integer polynomial in n variables of degree d:
// v = -2K (X_1^D + ... + X_n^D), D = 2 n d, K = max(1, sum of |non-constant coefficients|).
// Constant terms move into the bound. Vector-valued u is handled coordinatewise.
Moderation poly_moderation(const IntFunction& u);

// Exact bound for separable polynomial pairs: first coordinate, maximised
// coordinatewise over the integers. nullopt when some coordinate is unbounded.
std::optional<ModerationBound> analytic_bound(const IntFunction& u, const IntFunction& v);

// max over integers t of t^D - 2 (t0 - t)^D, D even and positive.
Int max_power_gap(const Int& t0, unsigned D);

// v'(x) = v(x) - c_x with c_x the canonical representative of v(x) modulo H.
IntFunction subgroup_valued_moderation(const IntFunction& v, const Subgroup& h);
// Same, carrying the bound across (shifted by the largest -c_1 over representatives).
Moderation subgroup_valued_moderation(const Moderation& m, const Subgroup& h);

// True when every value of v is known to lie in H (reduced functions and
// polynomials whose coefficient vectors lie in H).
bool values_in(const IntFunction& v, const Subgroup& h);

struct ModerationRow {
  Point x0;
  Int empirical_max;  // first coordinate
  Point argmax;
  std::optional<Int> claimed;
  bool violation = false;
  bool boundary_max = false;  // every maximiser sits on the probe boundary
};

struct ModerationReport {
  std::vector<ModerationRow> rows;
  std::size_t violations = 0;
  bool unbounded = false;
  Json to_json() const;
};

ModerationReport check_moderation(const IntFunction& u, const IntFunction& v, const Window& x0_window,
                                  const Window& probe_window,
                                  const std::optional<ModerationBound>& claimed = std::nullopt);

}  // namespace addcomp
