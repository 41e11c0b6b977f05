#include <addcomp/int_function.hpp>

namespace addcomp {

Point IntFunction::operator()(const Point& x) const {
  if (!impl_) throw Error("evaluating an empty function");
  if (x.size() != impl_->arity())
    throw Error("function of arity " + std::to_string(impl_->arity()) + " applied to " + addcomp::to_string(x));
  return impl_->eval(x);
}

Int IntFunction::eval1(const Point& x) const {
  if (outdim() != 1) throw Error("scalar evaluation of a vector-valued function");
  return (*this)(x)[0];
}

std::string to_string(Rounding r) {
  switch (r) {
    case Rounding::Floor: return "floor";
    case Rounding::Ceil: return "ceil";
    case Rounding::FloorCeil: return "floor_ceil";
  }
  return "floor";
}

Rounding parse_rounding(const std::string& s) {
  if (s == "floor") return Rounding::Floor;
  if (s == "ceil") return Rounding::Ceil;
  if (s == "floor_ceil") return Rounding::FloorCeil;
  throw Error("unknown rounding mode '" + s + "'");
}

Int round_rational(const Rational& q, Rounding r) {
  switch (r) {
    case Rounding::Floor: return floor_of(q);
    case Rounding::Ceil: return ceil_of(q);
    case Rounding::FloorCeil: {
      Int f = floor_of(q);
      return f + ceil_of(Rational(q - f));
    }
  }
  return floor_of(q);
}

Json int_to_json(const Int& x) {
  if (x.fits_slong_p()) return Json(static_cast<std::int64_t>(x.get_si()));
  return Json(x.get_str());
}

Json point_to_json(const Point& p) {
  Json a = Json::array();
  for (const auto& x : p) a.push_back(int_to_json(x));
  return a;
}

Json poly_to_json(const IntPoly& p) {
  Json a = Json::array();
  for (const auto& [e, c] : p.terms()) a.push_back(Json::array({Json(e), int_to_json(c)}));
  return a;
}

Json ratpoly_to_json(const RatPoly& p) {
  Json a = Json::array();
  for (const auto& [e, c] : p.terms()) {
    Json cj = c.get_den() == 1 ? int_to_json(c.get_num()) : Json(c.get_str());
    a.push_back(Json::array({Json(e), cj}));
  }
  return a;
}

// ---------------------------------------------------------------------------

namespace {

std::size_t common_arity(const std::vector<IntPoly>& ps) {
  if (ps.empty()) throw Error("polynomial function needs at least one component");
  for (const auto& p : ps)
    if (p.nvars() != ps[0].nvars()) throw Error("polynomial components have different arities");
  return ps[0].nvars();
}

}  // namespace

PolynomialFn::PolynomialFn(std::vector<IntPoly> polys)
    : FunctionImpl(common_arity(polys), polys.size()), polys_(std::move(polys)) {}

Point PolynomialFn::eval(const Point& x) const {
  Point out;
  out.reserve(polys_.size());
  for (const auto& p : polys_) out.push_back(p.eval(x));
  return out;
}

Json PolynomialFn::to_json() const {
  if (polys_.size() == 1) return Json{{"poly", poly_to_json(polys_[0])}, {"arity", arity()}};
  Json parts = Json::array();
  for (const auto& p : polys_) parts.push_back(Json{{"poly", poly_to_json(p)}, {"arity", arity()}});
  return Json{{"components", parts}};
}

RationalFloorFn::RationalFloorFn(RatPoly num, RatPoly den, Rounding mode, std::map<Point, Int> poles)
    : FunctionImpl(num.nvars(), 1), num_(std::move(num)), den_(std::move(den)), mode_(mode),
      poles_(std::move(poles)) {
  if (den_.nvars() != num_.nvars()) throw Error("numerator and denominator arities differ");
  if (den_.is_zero()) throw Error("zero denominator polynomial");
}

Point RationalFloorFn::eval(const Point& x) const {
  std::vector<Rational> xr(x.begin(), x.end());
  Rational d = den_.eval(xr);
  if (d == 0) {
    auto it = poles_.find(x);
    if (it == poles_.end()) throw Error("rational function has a pole at " + addcomp::to_string(x));
    return {it->second};
  }
  Rational q = num_.eval(xr) / d;
  return {round_rational(q, mode_)};
}

Json RationalFloorFn::to_json() const {
  Json poles = Json::array();
  for (const auto& [p, v] : poles_) poles.push_back(Json::array({point_to_json(p), int_to_json(v)}));
  return Json{{"ratfloor",
               {{"arity", arity()},
                {"num", ratpoly_to_json(num_)},
                {"den", ratpoly_to_json(den_)},
                {"mode", to_string(mode_)},
                {"poles", poles}}}};
}

TableFn::TableFn(std::size_t arity, std::size_t outdim, std::map<Point, Point> entries,
                 std::optional<Point> fallback)
    : FunctionImpl(arity, outdim), entries_(std::move(entries)), fallback_(std::move(fallback)) {
  for (const auto& [k, v] : entries_)
    if (k.size() != arity || v.size() != outdim) throw Error("table entry has wrong shape");
  if (fallback_ && fallback_->size() != outdim) throw Error("table default has wrong length");
}

Point TableFn::eval(const Point& x) const {
  auto it = entries_.find(x);
  if (it != entries_.end()) return it->second;
  if (fallback_) return *fallback_;
  throw Error("table has no entry for " + addcomp::to_string(x));
}

Json TableFn::to_json() const {
  Json e = Json::array();
  for (const auto& [k, v] : entries_) e.push_back(Json::array({point_to_json(k), point_to_json(v)}));
  Json j{{"arity", arity()}, {"outdim", outdim()}, {"entries", e}};
  if (fallback_) j["default"] = point_to_json(*fallback_);
  return Json{{"table", j}};
}

AbsPowerFn::AbsPowerFn(std::size_t arity, std::vector<Int> bases)
    : FunctionImpl(arity, bases.size()), bases_(std::move(bases)) {}

Point AbsPowerFn::eval(const Point& x) const {
  Int e = 0;
  for (const auto& xi : x) e += abs(xi);
  if (!e.fits_ulong_p()) throw Error("exponent too large");
  Point out;
  for (const auto& b : bases_) out.push_back(pow_int(b, e.get_ui()));
  return out;
}

Json AbsPowerFn::to_json() const {
  Json b = Json::array();
  for (const auto& x : bases_) b.push_back(int_to_json(x));
  return Json{{"abspow", {{"arity", arity()}, {"bases", b}}}};
}

RotationHeightFn::RotationHeightFn(RatPoly f, Int a, Int b, Rounding mode)
    : FunctionImpl(1, 1), f_(std::move(f)), a_(std::move(a)), b_(std::move(b)), mode_(mode) {
  if (f_.nvars() != 1) throw Error("rotated curve must be a polynomial in one variable");
  auto r = rational_rotation_basis(b_, a_);
  c_ = r.c;
  d_ = r.d;
}

QuadSurd RotationHeightFn::alpha(const Int& t) const {
  const Int n = a_ * a_ + b_ * b_;
  // x = -t / s = -t sqrt(N) / N
  QuadSurd x(0, Rational(-t, n), n);
  QuadSurd fx(0, 0, n);
  for (unsigned k = f_.degree_in(0) + 1; k-- > 0;) {
    auto it = f_.terms().find(Exponents{k});
    Rational coef = it == f_.terms().end() ? Rational(0) : it->second;
    fx = fx * x + coef;
  }
  Int k = a_ * d_ + b_ * c_;
  QuadSurd lin(0, Rational(k * t, n), n);
  return (fx - lin).times_root() * Rational(1, n);
}

Point RotationHeightFn::eval(const Point& x) const {
  QuadSurd al = alpha(x[0]);
  switch (mode_) {
    case Rounding::Floor: return {al.floor()};
    case Rounding::Ceil: return {al.ceil()};
    case Rounding::FloorCeil: {
      Int f = al.floor();
      return {f + (al + Rational(-f)).ceil()};
    }
  }
  return {al.floor()};
}

Json RotationHeightFn::to_json() const {
  return Json{{"surd",
               {{"f", ratpoly_to_json(f_)}, {"a", int_to_json(a_)}, {"b", int_to_json(b_)},
                {"mode", to_string(mode_)}}}};
}

NegatedFn::NegatedFn(IntFunction inner) : FunctionImpl(inner.arity(), inner.outdim()), inner_(std::move(inner)) {}

Point NegatedFn::eval(const Point& x) const {
  Point y = inner_(x);
  for (auto& v : y) v = -v;
  return y;
}

Json NegatedFn::to_json() const { return Json{{"neg", inner_.to_json()}}; }

TranslatedFn::TranslatedFn(IntFunction inner, Point shift)
    : FunctionImpl(inner.arity(), inner.outdim()), inner_(std::move(inner)), shift_(std::move(shift)) {
  if (shift_.size() != arity()) throw Error("translation vector has wrong length");
}

Point TranslatedFn::eval(const Point& x) const { return inner_(x + shift_); }

Json TranslatedFn::to_json() const {
  return Json{{"translated", {{"inner", inner_.to_json()}, {"shift", point_to_json(shift_)}}}};
}

namespace {

std::size_t stack_arity(const std::vector<IntFunction>& parts) {
  if (parts.empty()) throw Error("stacked function needs at least one part");
  for (const auto& p : parts)
    if (p.arity() != parts[0].arity()) throw Error("stacked parts have different arities");
  return parts[0].arity();
}

std::size_t stack_outdim(const std::vector<IntFunction>& parts) {
  std::size_t m = 0;
  for (const auto& p : parts) m += p.outdim();
  return m;
}

}  // namespace

StackFn::StackFn(std::vector<IntFunction> parts)
    : FunctionImpl(stack_arity(parts), stack_outdim(parts)), parts_(std::move(parts)) {}

Point StackFn::eval(const Point& x) const {
  Point out;
  for (const auto& p : parts_) {
    Point y = p(x);
    out.insert(out.end(), y.begin(), y.end());
  }
  return out;
}

Json StackFn::to_json() const {
  Json parts = Json::array();
  for (const auto& p : parts_) parts.push_back(p.to_json());
  return Json{{"components", parts}};
}

ReducedFn::ReducedFn(IntFunction inner, Subgroup h)
    : FunctionImpl(inner.arity(), inner.outdim()), inner_(std::move(inner)), h_(std::move(h)) {
  if (!h_.ambient().is_free() || h_.ambient().rank != outdim())
    throw Error("reduction subgroup must be a sublattice of the codomain");
  if (!h_.index()) throw Error("reduction subgroup has infinite index");
}

Point ReducedFn::eval(const Point& x) const {
  Point y = inner_(x);
  return y - h_.reduce_coords(y);
}

Json ReducedFn::to_json() const {
  return Json{{"reduced", {{"inner", inner_.to_json()}, {"subgroup", [&] {
                             Json cols = Json::array();
                             for (const auto& c : h_.hnf_columns()) cols.push_back(point_to_json(c));
                             return cols;
                           }()}}}};
}

BallModerationFn::BallModerationFn(IntFunction u) : FunctionImpl(u.arity(), u.outdim()), u_(std::move(u)) {}

Point BallModerationFn::eval(const Point& x) const {
  {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = cache_.find(x);
    if (it != cache_.end()) return it->second;
  }
  Point center(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) center[i] = -x[i];
  std::optional<Point> best;
  for (const auto& y : ball_points(center, squared_norm(x) + 1)) {
    Point val = u_(y);
    if (!best || lex_compare(val, *best) > 0) best = std::move(val);
  }
  Point v = *best;
  for (auto& c : v) c = -c;
  std::lock_guard<std::mutex> lock(mutex_);
  cache_.emplace(x, v);
  return v;
}

Json BallModerationFn::to_json() const { return Json{{"ball", u_.to_json()}}; }

std::vector<Point> ball_points(const Point& center, const Int& n) {
  std::vector<Point> out;
  if (n <= 0) return out;
  Point cur(center.size());
  std::function<void(std::size_t, const Int&)> rec = [&](std::size_t i, const Int& budget) {
    if (i == center.size()) {
      out.push_back(cur);
      return;
    }
    // |d|^2 < budget, i.e. |d|^2 <= budget - 1.
    Int r = sqrt(Int(budget - 1));
    for (Int d = -r; d <= r; ++d) {
      cur[i] = center[i] + d;
      rec(i + 1, budget - d * d);
    }
  };
  rec(0, n);
  return out;
}

namespace fn {

IntFunction poly(const IntPoly& p) { return IntFunction(std::make_shared<PolynomialFn>(std::vector<IntPoly>{p})); }
IntFunction poly(std::vector<IntPoly> ps) { return IntFunction(std::make_shared<PolynomialFn>(std::move(ps))); }

IntFunction univariate(const std::vector<long>& coeffs) {
  std::vector<Int> c(coeffs.begin(), coeffs.end());
  return poly(IntPoly::univariate(c));
}

IntFunction constant(std::size_t arity, std::size_t outdim, const Int& c) {
  return poly(std::vector<IntPoly>(outdim, IntPoly::constant(arity, c)));
}

IntFunction rational_floor(RatPoly num, RatPoly den, Rounding mode, std::map<Point, Int> poles) {
  return IntFunction(std::make_shared<RationalFloorFn>(std::move(num), std::move(den), mode, std::move(poles)));
}

IntFunction table(std::size_t arity, std::size_t outdim, std::map<Point, Point> entries,
                  std::optional<Point> fallback) {
  return IntFunction(std::make_shared<TableFn>(arity, outdim, std::move(entries), std::move(fallback)));
}

IntFunction abs_power(std::size_t arity, std::vector<Int> bases) {
  return IntFunction(std::make_shared<AbsPowerFn>(arity, std::move(bases)));
}

IntFunction rotation_height(RatPoly f, Int a, Int b, Rounding mode) {
  return IntFunction(std::make_shared<RotationHeightFn>(std::move(f), std::move(a), std::move(b), mode));
}

IntFunction negated(IntFunction f) { return IntFunction(std::make_shared<NegatedFn>(std::move(f))); }

IntFunction translated(IntFunction f, Point shift) {
  return IntFunction(std::make_shared<TranslatedFn>(std::move(f), std::move(shift)));
}

IntFunction stack(std::vector<IntFunction> parts) {
  return IntFunction(std::make_shared<StackFn>(std::move(parts)));
}

IntFunction reduced(IntFunction f, Subgroup h) {
  return IntFunction(std::make_shared<ReducedFn>(std::move(f), std::move(h)));
}

IntFunction ball_moderation(IntFunction u) { return IntFunction(std::make_shared<BallModerationFn>(std::move(u))); }

}  // namespace fn

}  // namespace addcomp
