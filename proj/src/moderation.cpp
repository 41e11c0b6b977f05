#include <addcomp/moderation.hpp>

#include <algorithm>
#include <cmath>
#include <memory>

namespace addcomp {

Moderation ball_moderation(const IntFunction& u) {
  IntFunction v = fn::ball_moderation(u);
  ModerationBound b;
  b.kind = "ball";
  b.description = "max(0, max of v(x) + u(x0 - x) over |x|^2 < |x0|^2)";
  b.m0 = [u, v](const Point& x0) {
    Int best = 0;
    Point zero(x0.size(), Int(0));
    for (const auto& x : ball_points(zero, squared_norm(x0))) {
      Int s = v(x)[0] + u(x0 - x)[0];
      if (s > best) best = s;
    }
    return best;
  };
  return {v, b};
}

Int max_power_gap(const Int& t0, unsigned D) {
  if (D == 0 || D % 2) throw Error("power gap needs a positive even exponent");
  auto g = [&](const Int& t) { return Int(pow_int(t, D) - 2 * pow_int(Int(t0 - t), D)); };
  // g is unimodal; its maximiser lies within (1 + (D-1)/ln 2) |t0| of the origin.
  Int reach = Int(2 + static_cast<long>(std::ceil((D - 1) / std::log(2.0)))) * abs(t0) + 2;
  Int lo = -reach, hi = reach;
  // First t in [lo, hi] with g(t + 1) < g(t).
  while (lo < hi) {
    Int mid = floor_div(lo + hi, 2);
    if (g(mid + 1) < g(mid)) hi = mid;
    else lo = mid + 1;
  }
  return g(lo);
}

Moderation poly_moderation(const IntFunction& u) {
  const auto* pf = u.as<PolynomialFn>();
  if (!pf) throw Error("poly moderation needs a polynomial, got " + u.kind());
  const std::size_t n = u.arity();
  std::vector<IntPoly> vs;
  std::vector<Int> ks;
  std::vector<unsigned> ds;
  for (const auto& p : pf->polys()) {
    unsigned d = p.degree();
    if (d == 0) {
      vs.emplace_back(n);
      ks.push_back(0);
      ds.push_back(0);
      continue;
    }
    Int k = 0;
    for (const auto& [e, c] : p.terms())
      if (std::any_of(e.begin(), e.end(), [](unsigned x) { return x > 0; })) k += abs(c);
    k = std::max(k, Int(1));
    const unsigned D = 2 * static_cast<unsigned>(n) * d;
    IntPoly v(n);
    for (std::size_t i = 0; i < n; ++i) {
      Exponents e(n, 0);
      e[i] = D;
      v.add_term(e, Int(-2 * k));
    }
    vs.push_back(v);
    ks.push_back(k);
    ds.push_back(D);
  }
  const Int c0 = pf->polys()[0].constant_term();
  const Int k = ks[0];
  const unsigned D = ds[0];
  ModerationBound b;
  b.kind = "poly";
  b.description = D == 0 ? "constant " + c0.get_str()
                         : c0.get_str() + " + " + k.get_str() + " * sum_j max_t (t^" + std::to_string(D) +
                               " - 2 (t0_j - t)^" + std::to_string(D) + ")";
  b.m0 = [c0, k, D](const Point& x0) {
    Int total = c0;
    if (D == 0) return total;
    for (const auto& t0 : x0) total += k * max_power_gap(t0, D);
    return total;
  };
  return {fn::poly(std::move(vs)), b};
}

namespace {

// Coefficients (ascending) of p(t) + q(t0 - t) for univariate coefficient lists.
std::vector<Int> fibre_poly(const std::vector<Int>& p, const std::vector<Int>& q, const Int& t0) {
  std::size_t deg = std::max(p.size(), q.size());
  std::vector<Int> out(deg, Int(0));
  for (std::size_t i = 0; i < p.size(); ++i) out[i] += p[i];
  // (t0 - t)^k = sum_j C(k, j) t0^(k-j) (-t)^j
  for (std::size_t k = 0; k < q.size(); ++k) {
    if (q[k] == 0) continue;
    Int binom = 1;
    for (std::size_t j = 0; j <= k; ++j) {
      Int term = q[k] * binom * pow_int(t0, k - j);
      out[j] += (j % 2) ? Int(-term) : term;
      binom = binom * Int(k - j) / Int(j + 1);
    }
  }
  while (out.size() > 1 && out.back() == 0) out.pop_back();
  return out;
}

Int eval_coeffs(const std::vector<Int>& c, const Int& t) {
  Int r = 0;
  for (std::size_t i = c.size(); i-- > 0;) r = r * t + c[i];
  return r;
}

std::optional<Int> max_over_integers(const std::vector<Int>& c) {
  if (c.size() <= 1) return c.empty() ? Int(0) : c[0];
  const std::size_t deg = c.size() - 1;
  if (deg % 2 == 1 || c.back() > 0) return std::nullopt;
  // Outside the root bound of p', p is monotone towards -infinity.
  Rational r = 1;
  const Int top = Int(deg) * c[deg];
  for (std::size_t i = 1; i < deg; ++i) r += Rational(abs(Int(Int(i) * c[i])), abs(top));
  Int reach = ceil_of(r) + 1;
  Int best = eval_coeffs(c, -reach);
  for (Int t = -reach + 1; t <= reach; ++t) best = std::max(best, eval_coeffs(c, t));
  return best;
}

// Coefficient of t^j in p(t) + q(t0 - t), as a polynomial in t0 (ascending).
std::vector<std::vector<Int>> fibre_poly_symbolic(const std::vector<Int>& p, const std::vector<Int>& q) {
  std::size_t deg = std::max(p.size(), q.size());
  std::vector<std::vector<Int>> out(deg, std::vector<Int>(q.size() + 1, Int(0)));
  for (std::size_t i = 0; i < p.size(); ++i) out[i][0] += p[i];
  for (std::size_t k = 0; k < q.size(); ++k) {
    Int binom = 1;
    for (std::size_t j = 0; j <= k; ++j) {
      Int term = q[k] * binom;
      out[j][k - j] += (j % 2) ? Int(-term) : term;
      binom = binom * Int(k - j) / Int(j + 1);
    }
  }
  return out;
}

// Bounded above for every t0: the top coefficient that is not identically zero must be
// a constant, of even degree and negative (or the polynomial is constant in t).
bool bounded_for_all_t0(const std::vector<Int>& p, const std::vector<Int>& q) {
  auto c = fibre_poly_symbolic(p, q);
  for (std::size_t j = c.size(); j-- > 0;) {
    bool zero = std::all_of(c[j].begin(), c[j].end(), [](const Int& x) { return x == 0; });
    if (zero) continue;
    if (j == 0) return true;
    bool constant = std::all_of(c[j].begin() + 1, c[j].end(), [](const Int& x) { return x == 0; });
    return constant && j % 2 == 0 && c[j][0] < 0;
  }
  return true;
}

const IntPoly* first_poly(const IntFunction& f) {
  const auto* pf = f.as<PolynomialFn>();
  return pf ? &pf->polys()[0] : nullptr;
}

}  // namespace

std::optional<ModerationBound> analytic_bound(const IntFunction& u, const IntFunction& v) {
  const IntPoly* pu = first_poly(u);
  const IntPoly* pv = first_poly(v);
  if (!pu || !pv || !pu->is_separable() || !pv->is_separable()) return std::nullopt;
  const std::size_t n = u.arity();
  if (v.arity() != n) return std::nullopt;
  for (std::size_t j = 0; j < n; ++j)
    if (!bounded_for_all_t0(pu->pure_part(j), pv->pure_part(j))) return std::nullopt;
  IntPoly a = *pu, b = *pv;
  ModerationBound mb;
  mb.kind = "analytic";
  mb.description = "sum_j max_t [u_j(t) + v_j(x0_j - t)] for u = " + a.to_string() + ", v = " + b.to_string();
  mb.m0 = [a, b, n](const Point& x0) {
    Int total = a.constant_term() + b.constant_term();
    for (std::size_t j = 0; j < n; ++j) total += *max_over_integers(fibre_poly(a.pure_part(j), b.pure_part(j), x0[j]));
    return total;
  };
  return mb;
}

IntFunction subgroup_valued_moderation(const IntFunction& v, const Subgroup& h) {
  if (!h.index()) throw Error("subgroup-valued moderation needs a finite-index subgroup");
  return fn::reduced(v, h);
}

Moderation subgroup_valued_moderation(const Moderation& m, const Subgroup& h) {
  IntFunction v2 = subgroup_valued_moderation(m.v, h);
  Int shift = 0;
  for (const auto& rep : h.coset_representatives()) shift = std::max(shift, Int(-rep.free()[0]));
  ModerationBound b;
  b.kind = m.bound.kind + "+shift";
  b.description = m.bound.description + " + " + shift.get_str();
  auto inner = m.bound.m0;
  b.m0 = [inner, shift](const Point& x0) -> Int { return inner(x0) + shift; };
  return {v2, b};
}

bool values_in(const IntFunction& v, const Subgroup& h) {
  if (const auto* r = v.as<ReducedFn>()) return r->subgroup().is_subgroup_of(h);
  if (const auto* p = v.as<PolynomialFn>()) {
    // Each monomial's coefficient vector must lie in H.
    std::map<Exponents, Point> coeffs;
    for (std::size_t j = 0; j < p->polys().size(); ++j)
      for (const auto& [e, c] : p->polys()[j].terms()) {
        auto& col = coeffs.try_emplace(e, Point(p->polys().size(), Int(0))).first->second;
        col[j] = c;
      }
    for (const auto& [e, col] : coeffs)
      if (!h.contains_coords(col)) return false;
    return true;
  }
  if (const auto* s = v.as<StackFn>()) {
    if (s->parts().size() != 1) return false;
    return values_in(s->parts()[0], h);
  }
  return false;
}

// ---------------------------------------------------------------------------

namespace {

// Dense index of p inside box w (lexicographic, last coordinate fastest).
std::size_t box_index(const Window& w, const Point& p) {
  std::size_t idx = 0;
  for (std::size_t i = 0; i < w.dim(); ++i) {
    auto span = static_cast<std::size_t>(Int(w[i].second - w[i].first + 1).get_ui());
    idx = idx * span + static_cast<std::size_t>(Int(p[i] - w[i].first).get_ui());
  }
  return idx;
}

bool on_boundary(const Window& w, const Point& p) {
  for (std::size_t i = 0; i < w.dim(); ++i)
    if (p[i] == w[i].first || p[i] == w[i].second) return true;
  return false;
}

}  // namespace

ModerationReport check_moderation(const IntFunction& u, const IntFunction& v, const Window& x0_window,
                                  const Window& probe_window, const std::optional<ModerationBound>& claimed) {
  if (u.arity() != v.arity() || x0_window.dim() != u.arity() || probe_window.dim() != u.arity())
    throw Error("moderation check: dimension mismatch");
  // Cache u on the probes and v on every difference x0 - x.
  std::vector<Point> probes = probe_window.points();
  std::vector<Int> u_first;
  u_first.reserve(probes.size());
  for (const auto& x : probes) u_first.push_back(u(x)[0]);
  std::vector<std::pair<Int, Int>> diff;
  for (std::size_t i = 0; i < x0_window.dim(); ++i)
    diff.emplace_back(x0_window[i].first - probe_window[i].second, x0_window[i].second - probe_window[i].first);
  Window diff_box(diff);
  std::vector<Int> v_first;
  v_first.reserve(diff_box.count().get_ui());
  diff_box.for_each([&](const Point& z) { v_first.push_back(v(z)[0]); });

  ModerationReport report;
  x0_window.for_each([&](const Point& x0) {
    ModerationRow row;
    row.x0 = x0;
    bool have = false;
    Int interior_best, boundary_best;
    bool have_interior = false, have_boundary = false;
    for (std::size_t i = 0; i < probes.size(); ++i) {
      Int s = u_first[i] + v_first[box_index(diff_box, x0 - probes[i])];
      if (!have || s > row.empirical_max) {
        row.empirical_max = s;
        row.argmax = probes[i];
        have = true;
      }
      if (on_boundary(probe_window, probes[i])) {
        if (!have_boundary || s > boundary_best) boundary_best = s;
        have_boundary = true;
      } else {
        if (!have_interior || s > interior_best) interior_best = s;
        have_interior = true;
      }
    }
    row.boundary_max = have_boundary && (!have_interior || boundary_best > interior_best);
    if (claimed && *claimed) {
      row.claimed = (*claimed)(x0);
      row.violation = row.empirical_max > *row.claimed;
    }
    report.violations += row.violation;
    report.unbounded = report.unbounded || row.boundary_max;
    report.rows.push_back(std::move(row));
  });
  return report;
}

Json ModerationReport::to_json() const {
  Json r = Json::array();
  for (const auto& row : rows) {
    Json j{{"x0", point_to_json(row.x0)}, {"max", int_to_json(row.empirical_max)}, {"argmax", point_to_json(row.argmax)},
           {"violation", row.violation}, {"boundary_max", row.boundary_max}};
    if (row.claimed) j["bound"] = int_to_json(*row.claimed);
    r.push_back(j);
  }
  return Json{{"violations", violations}, {"unbounded", unbounded}, {"rows", r}};
}

}  // namespace addcomp
