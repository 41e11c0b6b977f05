#include <addcomp/constructions.hpp>

#include <algorithm>
#include <functional>
#include <map>

namespace addcomp {

std::string to_string(RecipeKind k) {
  switch (k) {
    case RecipeKind::GraphOfModeration: return "graph";
    case RecipeKind::CosetLift: return "coset-lift";
    case RecipeKind::SubgroupRestrict: return "subgroup-restrict";
    case RecipeKind::Thm511: return "thm511";
  }
  return "graph";
}

Json MinCompRecipe::to_json() const {
  Json j{{"recipe", to_string(kind)}, {"inputs", inputs}, {"set", result.to_json()}};
  if (bound) j["bound"] = bound->description;
  return j;
}

MinCompRecipe graph_min_complement(const SymbolicSet& base, const SymbolicSet& m, const IntFunction& v,
                                   std::optional<UnimodularBasis> basis, std::optional<ModerationBound> bound) {
  if (base.spec().rank != v.arity() || m.spec().rank != v.arity())
    throw Error("base, domain and v must share the same free rank");
  MinCompRecipe r;
  r.kind = RecipeKind::GraphOfModeration;
  r.inputs = Json{{"base", base.to_json()}, {"m", m.to_json()}, {"v", v.to_json()}};
  if (basis) r.inputs["basis"] = basis_to_json(*basis);
  r.result = sets::graph(m, v, std::move(basis));
  r.bound = std::move(bound);
  return r;
}

SymbolicSet subgroup_restrict(const SymbolicSet& m, const Subgroup& h, const std::optional<Window>& scan) {
  if (!(m.spec() == h.ambient())) throw Error("set and subgroup live in different groups");
  if (const auto* f = m.as<FiniteSet>()) {
    std::vector<GroupElement> keep;
    for (const auto& e : f->elements())
      if (h.contains(e)) keep.push_back(e);
    return sets::finite(m.spec(), keep);
  }
  if (m.as<FullGroupSet>()) return sets::subgroup(h);
  if (const auto* g = m.as<GraphSet>(); g && scan) {
    std::vector<GroupElement> keep;
    for (const auto& d : g->domain().enumerate(*scan)) {
      GroupElement p(m.spec(), g->point_at(d.free()));
      if (h.contains(p)) keep.push_back(p);
    }
    return sets::finite(m.spec(), keep);
  }
  return sets::restricted(m, h);
}

SymbolicSet coset_lift(const SymbolicSet& m, const Subgroup& h, const std::vector<GroupElement>& reps) {
  if (reps.empty()) throw Error("coset lift needs at least one representative");
  if (const auto* f = m.as<FiniteSet>())
    for (const auto& e : f->elements())
      if (!h.contains(e)) throw Error("element " + e.to_string() + " of M is outside the subgroup");
  std::map<GroupElement, GroupElement> seen;
  std::vector<SymbolicSet> parts;
  for (const auto& g : reps) {
    GroupElement key = h.reduce(g);
    auto [it, fresh] = seen.emplace(key, g);
    if (!fresh) throw Error("representatives " + it->second.to_string() + " and " + g.to_string() + " lie in the same coset");
    parts.push_back(sets::translate(m, g));
  }
  return parts.size() == 1 ? parts.front() : sets::set_union(std::move(parts));
}

namespace {

UnimodularBasis rotation_lattice(const RotationHeightFn& r) {
  return UnimodularBasis::from_columns({{r.d(), r.c()}, {r.a(), r.b()}});
}

}  // namespace

SymbolicSet rotated_truncated_sets(const RatPoly& f, const Int& a, const Int& b, Side side, bool include_axis) {
  if (gcd(a, b) != 1) throw Error("rotation needs coprime a, b");
  IntFunction u = fn::rotation_height(f, a, b, side == Side::Above ? Rounding::Floor : Rounding::Ceil);
  UnimodularBasis p = rotation_lattice(*u.as<RotationHeightFn>());
  std::vector<Point> base;
  if (include_axis) base.push_back({Int(0)});
  return sets::bounded_spiked(sets::finite(1, base), u, p, FibreOrder::Lex, side);
}

Thm511Result thm511_max_set(const SymbolicSet& base, const IntFunction& u, const Subgroup& h, const Point& g2,
                            const SymbolicSet& m, const Moderation& moderation, std::optional<UnimodularBasis> basis) {
  if (!h.index()) throw Error("the fibre subgroup must have finite index");
  Thm511Result out;
  out.x = sets::coset_gap_spiked(base, u, h, g2, basis);
  out.g2_normalized = out.x.as<CosetGapSpikedSet>()->normalized();
  Moderation reduced = subgroup_valued_moderation(moderation, h);
  out.complement = graph_min_complement(base, m, reduced.v, basis, reduced.bound);
  out.complement.kind = RecipeKind::Thm511;
  out.complement.inputs["u"] = u.to_json();
  out.complement.inputs["h"] = subgroup_to_json(h);
  out.complement.inputs["g2"] = point_to_json(g2);
  return out;
}

// ---------------------------------------------------------------------------
// Catalog

namespace {

GroupSpec z(std::size_t n) { return GroupSpec::free(n); }

IntPoly var_pow(std::size_t n, std::size_t i, unsigned e, long c = 1) {
  Exponents ex(n, 0);
  ex[i] = e;
  IntPoly p(n);
  p.add_term(ex, Int(c));
  return p;
}

IntFunction square1() { return fn::univariate({0, 0, 1}); }

IntFunction sum_of_powers(std::size_t n, unsigned e, long c) {
  IntPoly p(n);
  for (std::size_t i = 0; i < n; ++i) p = p + var_pow(n, i, e, c);
  return fn::poly(p);
}

RatPoly rat_univariate(const std::vector<long>& coeffs) {
  std::vector<Rational> c;
  for (long x : coeffs) c.emplace_back(x);
  return RatPoly::univariate(c);
}

ModerationBound require_analytic(const IntFunction& u, const IntFunction& v) {
  auto b = analytic_bound(u, v);
  if (!b) throw Error("catalog pair has no analytic bound");
  return *b;
}

// First coordinates of u and v as scalar functions.
IntFunction first(const std::vector<IntPoly>& ps) { return fn::poly(ps.front()); }

CatalogEntry make(std::string id, std::string summary, SymbolicSet set, std::string window, std::string complement = "",
                  std::optional<ModerationBound> bound = std::nullopt) {
  return CatalogEntry{std::move(id), std::move(summary), std::move(set), std::move(complement), std::move(bound),
                      std::move(window)};
}

IntFunction odd_prime_table(long reach) {
  std::vector<long> primes;
  for (long p = 3; static_cast<long>(primes.size()) < reach; p += 2) {
    bool prime = true;
    for (long q = 3; q * q <= p; q += 2)
      if (p % q == 0) prime = false;
    if (prime) primes.push_back(p);
  }
  std::map<Point, Point> entries;
  for (long m = -reach; m <= reach; ++m)
    if (m != 0) entries[{Int(m)}] = {Int(primes[static_cast<std::size_t>(std::abs(m) - 1)])};
  return fn::table(1, 1, entries);
}

const std::map<std::string, std::function<CatalogEntry()>>& builders() {
  static const std::map<std::string, std::function<CatalogEntry()>> table = [] {
    std::map<std::string, std::function<CatalogEntry()>> t;
    const std::string w2 = "-10..10,-10..10";

    t["lemma2.3-W"] = [=] {
      return make("lemma2.3-W", "Z^2 minus the ray {(0,n) : n >= 1}", sets::ray_complement({Int(0), Int(0)}, 1, Int(1)), w2,
                  "lemma2.3-S");
    };
    t["lemma2.3-S"] = [=] {
      return make("lemma2.3-S", "{(0,0), (1,0)}", sets::finite(2, {{Int(0), Int(0)}, {Int(1), Int(0)}}), w2);
    };
    t["halfplane-lower"] = [=] {
      return make("halfplane-lower", "Z x Z_{<0}", sets::truncated(sets::full(z(1)), fn::constant(1, 1, 0), Side::Below), w2);
    };
    t["cor3.2-W+"] = [=] {
      return make("cor3.2-W+", "y > x^2", sets::truncated(sets::full(z(1)), square1(), Side::Above), w2);
    };
    t["cor3.2-W-"] = [=] {
      return make("cor3.2-W-", "y < x^2", sets::truncated(sets::full(z(1)), square1(), Side::Below), w2);
    };
    const UnimodularBasis swap({{0, 1}, {1, 0}});
    t["sideparabola-W+"] = [=] {
      return make("sideparabola-W+", "x > y^2",
                  sets::basis_image(sets::truncated(sets::full(z(1)), square1(), Side::Above), swap), w2);
    };
    t["sideparabola-W-"] = [=] {
      return make("sideparabola-W-", "x < y^2",
                  sets::basis_image(sets::truncated(sets::full(z(1)), square1(), Side::Below), swap), w2);
    };
    for (int e : {1, 2}) {
      for (Side side : {Side::Above, Side::Below}) {
        std::string id = std::string(e == 1 ? "recip" : "recip2") + (side == Side::Above ? "-W+" : "-W-");
        t[id] = [=] {
          RatPoly num = rat_univariate({1});
          RatPoly den = e == 1 ? rat_univariate({0, 1}) : rat_univariate({0, 0, 1});
          Rounding mode = side == Side::Above ? Rounding::Floor : Rounding::Ceil;
          IntFunction u = fn::rational_floor(num, den, mode, {{{Int(0)}, Int(0)}});
          std::string rel = side == Side::Above ? "y > " : "y < ";
          return make(id, rel + (e == 1 ? "1/x" : "1/x^2") + ", f(0) = 0", sets::truncated(sets::full(z(1)), u, side), w2);
        };
      }
    }
    for (Side side : {Side::Above, Side::Below}) {
      std::string s = side == Side::Above ? "+" : "-";
      t["rot45-W" + s] = [=] {
        return make("rot45-W" + s, "y " + std::string(side == Side::Above ? ">" : "<") + " x^2 rotated by 45 degrees",
                    rotated_truncated_sets(rat_univariate({0, 0, 1}), 1, 1, side, false), w2);
      };
      t["paraboloid-W" + s] = [=] {
        return make("paraboloid-W" + s,
                    "x3 " + std::string(side == Side::Above ? ">" : "<") + " x1^2 + x2^2",
                    sets::truncated(sets::full(z(2)), sum_of_powers(2, 2, 1), side), "-6..6,-6..6,-6..6");
      };
    }

    t["cor4.8-W"] = [=] {
      auto b = require_analytic(square1(), fn::univariate({0, 0, -2}));
      return make("cor4.8-W", "{y < x^2} u ({0} x Z)", sets::spiked(sets::finite(1, {{Int(0)}}), square1()),
                  "-15..15,-15..15", "cor4.8-M", b);
    };
    t["cor4.8-M"] = [=] {
      IntFunction v = fn::univariate({0, 0, -2});
      auto b = require_analytic(square1(), v);
      return make("cor4.8-M", "{(t, -2t^2)}", sets::graph(sets::full(z(1)), v), "-15..15,-15..15", "", b);
    };
    t["cor4.9-W"] = [=] {
      IntFunction u = sum_of_powers(2, 2, 1);
      auto b = require_analytic(u, sum_of_powers(2, 2, -2));
      return make("cor4.9-W", "{z < x^2 + y^2} u ({(0,0)} x Z)", sets::spiked(sets::finite(2, {{Int(0), Int(0)}}), u),
                  "-8..8,-8..8,-8..8", "cor4.9-M", b);
    };
    t["cor4.9-M"] = [=] {
      IntFunction v = sum_of_powers(2, 2, -2);
      auto b = require_analytic(sum_of_powers(2, 2, 1), v);
      return make("cor4.9-M", "{(s, t, -2(s^2 + t^2))}", sets::graph(sets::full(z(2)), v), "-8..8,-8..8,-8..8", "", b);
    };

    auto ex59 = [] {
      IntPoly u1 = var_pow(2, 0, 2) + var_pow(2, 1, 2), u2 = var_pow(2, 0, 3) + var_pow(2, 1, 3);
      IntPoly v1 = var_pow(2, 0, 2, -2) + var_pow(2, 1, 2, -2), v2 = var_pow(2, 0, 4, -1) + var_pow(2, 1, 4, -1);
      return std::pair{std::vector<IntPoly>{u1, u2}, std::vector<IntPoly>{v1, v2}};
    };
    t["ex5.9-W"] = [=] {
      auto [u, v] = ex59();
      auto b = require_analytic(first(u), first(v));
      return make("ex5.9-W", "{z < x^2 + y^2, w < x^3 + y^3} u ({(0,0)} x Z^2)",
                  sets::bounded_spiked(sets::finite(2, {{Int(0), Int(0)}}), fn::poly(u), std::nullopt,
                                       FibreOrder::Componentwise, Side::Below),
                  "-4..4,-4..4,-4..4,-4..4", "ex5.9-M", b);
    };
    t["ex5.9-M"] = [=] {
      auto [u, v] = ex59();
      auto b = require_analytic(first(u), first(v));
      return make("ex5.9-M", "{(s, t, -2(s^2 + t^2), -(s^4 + t^4))}", sets::graph(sets::full(z(2)), fn::poly(v)),
                  "-4..4,-4..4,-4..4,-4..4", "", b);
    };

    // Spiked rotated parabola: the line y = x is the base column in the rotated lattice.
    auto rot45_spiked = [] {
      SymbolicSet w = rotated_truncated_sets(rat_univariate({0, 0, 1}), 1, 1, Side::Above, true);
      const auto* bs = w.as<BoundedSpikedSet>();
      // Mirror n -> -n to reach a Below spike, moderate there, and mirror back.
      Moderation mirrored = ball_moderation(fn::negated(bs->u()));
      IntFunction v = fn::negated(mirrored.v);
      SymbolicSet m = sets::graph(sets::full(z(1)), v, bs->basis());
      return std::tuple{w, m, mirrored.bound};
    };
    t["rot45-spiked-W"] = [=] {
      auto [w, m, b] = rot45_spiked();
      return make("rot45-spiked-W", "(y > x^2 rotated by 45 degrees) u {y = x}", w, w2, "rot45-spiked-M", b);
    };
    t["rot45-spiked-M"] = [=] {
      auto [w, m, b] = rot45_spiked();
      return make("rot45-spiked-M", "graph of the ball moderation over the rotated first axis", m, w2, "", b);
    };

    auto thm511 = [] {
      IntFunction v = fn::univariate({0, 0, -2});
      Moderation mod{v, require_analytic(square1(), v)};
      return thm511_max_set(sets::finite(1, {{Int(0)}}), square1(), Subgroup::lattice(1, {{Int(3)}}), {Int(1)},
                            sets::full(z(1)), mod);
    };
    t["thm511-W"] = [=] {
      auto r = thm511();
      return make("thm511-W", "{y < x^2} u ({0} x Z) u {y not in 1 + 3Z}", r.x, w2, "thm511-M", r.complement.bound);
    };
    t["thm511-M"] = [=] {
      auto r = thm511();
      return make("thm511-M", "{(t, v'(t))} with v' the 3Z-valued reduction of -2t^2", r.complement.result, w2, "",
                  r.complement.bound);
    };

    auto nonzero = [] { return sets::cofinite(z(1), {GroupElement::of({Int(0)})}); };
    t["ex6.1-W"] = [=] {
      auto b = require_analytic(square1(), fn::univariate({0, 0, -3}));
      SymbolicSet w = sets::set_union({sets::spiked(sets::finite(1, {{Int(0)}}), square1()),
                                       sets::column_progressions(nonzero(), fn::abs_power(1, {Int(3)}), Point{Int(3)})});
      return make("ex6.1-W", "{y < x^2} u ({0} x Z) u {(m, 3^|m| n)}", w, "-8..8,-8..8", "ex6.1-M", b);
    };
    t["ex6.1-M"] = [=] {
      IntFunction v = fn::univariate({0, 0, -3});
      return make("ex6.1-M", "{(t, -3t^2)}", sets::graph(sets::full(z(1)), v), "-8..8,-8..8", "",
                  require_analytic(square1(), v));
    };
    t["ex6.2-W"] = [=] {
      auto b = require_analytic(square1(), fn::univariate({0, 0, -2}));
      SymbolicSet w = sets::set_union({sets::spiked(sets::finite(1, {{Int(0)}}), square1()),
                                       sets::column_progressions(nonzero(), odd_prime_table(64))});
      return make("ex6.2-W", "{y < x^2} u ({0} x Z) u {(m, p_|m| n) : m != 0}, p_k the k-th odd prime, |m| <= 64", w,
                  "-8..8,-8..8", "ex6.2-M", b);
    };
    t["ex6.2-M"] = [=] {
      IntFunction v = fn::univariate({0, 0, -2});
      return make("ex6.2-M", "{(t, -2t^2)}", sets::graph(sets::full(z(1)), v), "-8..8,-8..8", "",
                  require_analytic(square1(), v));
    };
    auto ex63 = [] {
      std::vector<IntPoly> u{IntPoly::univariate({0, 0, 1}), IntPoly::univariate({0, 0, 0, 1})};
      std::vector<IntPoly> v{IntPoly::univariate({0, 0, -3}), IntPoly::univariate({0, 0, 0, 0, -4})};
      return std::pair{u, v};
    };
    t["ex6.3-W"] = [=] {
      auto [u, v] = ex63();
      SymbolicSet w = sets::set_union(
          {sets::bounded_spiked(sets::finite(1, {{Int(0)}}), fn::poly(u), std::nullopt, FibreOrder::Componentwise),
           sets::column_progressions(nonzero(), fn::abs_power(1, {Int(3), Int(4)}), Point{Int(3), Int(4)})});
      return make("ex6.3-W", "{y < x^2, z < x^3} u ({0} x Z^2) u {(i, 3^|i| j, 4^|i| k)}", w, "-5..5,-5..5,-5..5",
                  "ex6.3-M", require_analytic(first(u), first(v)));
    };
    t["ex6.3-M"] = [=] {
      auto [u, v] = ex63();
      return make("ex6.3-M", "{(t, -3t^2, -4t^4)}", sets::graph(sets::full(z(1)), fn::poly(v)), "-5..5,-5..5,-5..5", "",
                  require_analytic(first(u), first(v)));
    };
    return t;
  }();
  return table;
}

}  // namespace

const std::vector<std::string>& catalog_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> out;
    for (const auto& [id, _] : builders()) out.push_back(id);
    return out;
  }();
  return ids;
}

CatalogEntry catalog_entry(const std::string& id) {
  auto it = builders().find(id);
  if (it == builders().end()) throw Error("unknown catalog id '" + id + "'");
  return it->second();
}

SymbolicSet named_sets(const std::string& id) { return catalog_entry(id).set; }

}  // namespace addcomp
