#include <addcomp/symbolic_set.hpp>

#include <algorithm>

namespace addcomp {

std::string to_string(Side s) { return s == Side::Below ? "below" : "above"; }
std::string to_string(Fill f) { return f == Fill::MaxBound ? "max" : "base"; }
std::string to_string(FibreOrder o) { return o == FibreOrder::Lex ? "lex" : "componentwise"; }

Side parse_side(const std::string& s) {
  if (s == "below") return Side::Below;
  if (s == "above") return Side::Above;
  throw Error("unknown side '" + s + "'");
}

Fill parse_fill(const std::string& s) {
  if (s == "max") return Fill::MaxBound;
  if (s == "base") return Fill::BaseOnly;
  throw Error("unknown fill '" + s + "'");
}

FibreOrder parse_order(const std::string& s) {
  if (s == "lex") return FibreOrder::Lex;
  if (s == "componentwise") return FibreOrder::Componentwise;
  throw Error("unknown fibre order '" + s + "'");
}

bool fibre_less(const Point& y, const Point& bound, FibreOrder order) {
  if (order == FibreOrder::Lex) return lex_compare(y, bound) < 0;
  for (std::size_t i = 0; i < y.size(); ++i)
    if (!(y[i] < bound[i])) return false;
  return true;
}

namespace {

Point head(const Point& p, std::size_t k) { return Point(p.begin(), p.begin() + static_cast<long>(k)); }
Point tail(const Point& p, std::size_t k) { return Point(p.begin() + static_cast<long>(k), p.end()); }

Point concat(const Point& a, const Point& b) {
  Point r = a;
  r.insert(r.end(), b.begin(), b.end());
  return r;
}

void require_free(const GroupSpec& g, std::size_t dim, const std::string& what) {
  if (!g.is_free() || g.rank != dim)
    throw Error(what + " must live in Z^" + std::to_string(dim) + ", got " + g.to_string());
}

// Coordinates [first, first + len) of w.
Window fibre_box(const Window& w, std::size_t first, std::size_t len) { return w.slice(first, len); }

Json function_json(const IntFunction& f) { return f.to_json(); }

}  // namespace

bool SymbolicSet::contains(const GroupElement& g) const {
  if (!(g.spec() == spec())) throw Error("element of " + g.spec().to_string() + " tested against a set in " + spec().to_string());
  return node_->contains(g);
}

bool SymbolicSet::contains(const Point& free) const { return contains(GroupElement(spec(), free, {})); }

std::vector<GroupElement> SymbolicSet::enumerate(const Window& w) const {
  if (w.dim() != spec().rank) throw Error("window dimension does not match group rank");
  std::vector<GroupElement> out;
  node_->enumerate(w, out);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Json spec_to_json(const GroupSpec& g) {
  Json t = Json::array();
  for (const auto& n : g.torsion) t.push_back(int_to_json(n));
  return Json{{"rank", g.rank}, {"torsion", t}};
}

Json element_to_json(const GroupElement& g) {
  if (g.tors().empty()) return point_to_json(g.free());
  return Json{{"free", point_to_json(g.free())}, {"tors", point_to_json(g.tors())}};
}

Json basis_to_json(const UnimodularBasis& u) {
  Json rows = Json::array();
  for (const auto& r : u.rows()) rows.push_back(point_to_json(r));
  return rows;
}

Json subgroup_to_json(const Subgroup& h) {
  Json cols = Json::array();
  for (const auto& c : h.hnf_columns()) {
    Point free = head(c, h.ambient().rank);
    Point tors = tail(c, h.ambient().rank);
    cols.push_back(element_to_json(GroupElement(h.ambient(), free, tors)));
  }
  return Json{{"group", spec_to_json(h.ambient())}, {"generators", cols}};
}

Window preimage_box(const UnimodularBasis& u, const Window& w) {
  const auto inv = u.inverse().rows();
  std::vector<std::pair<Int, Int>> b;
  for (const auto& row : inv) {
    Int lo = 0, hi = 0;
    for (std::size_t j = 0; j < row.size(); ++j) {
      Int a = row[j] * w[j].first, c = row[j] * w[j].second;
      lo += std::min(a, c);
      hi += std::max(a, c);
    }
    b.emplace_back(lo, hi);
  }
  return Window(std::move(b));
}

// ---------------------------------------------------------------------------

FiniteSet::FiniteSet(GroupSpec spec, std::vector<GroupElement> elements)
    : SetNode(std::move(spec)), elements_(std::move(elements)) {
  for (const auto& e : elements_)
    if (!(e.spec() == this->spec())) throw Error("finite set element outside " + this->spec().to_string());
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
}

bool FiniteSet::contains(const GroupElement& g) const {
  return std::binary_search(elements_.begin(), elements_.end(), g);
}

void FiniteSet::enumerate(const Window& w, std::vector<GroupElement>& out) const {
  for (const auto& e : elements_)
    if (w.contains(e.free())) out.push_back(e);
}

Json FiniteSet::to_json() const {
  Json el = Json::array();
  for (const auto& e : elements_) el.push_back(element_to_json(e));
  return Json{{"kind", "finite"}, {"group", spec_to_json(spec())}, {"elements", el}};
}

void FullGroupSet::enumerate(const Window& w, std::vector<GroupElement>& out) const {
  for_each_element(spec(), w, [&](const GroupElement& g) { out.push_back(g); });
}

Json FullGroupSet::to_json() const { return Json{{"kind", "full"}, {"group", spec_to_json(spec())}}; }

CoFiniteSet::CoFiniteSet(GroupSpec spec, std::vector<GroupElement> excluded)
    : SetNode(std::move(spec)), excluded_(std::move(excluded)) {
  std::sort(excluded_.begin(), excluded_.end());
  excluded_.erase(std::unique(excluded_.begin(), excluded_.end()), excluded_.end());
}

bool CoFiniteSet::contains(const GroupElement& g) const {
  return !std::binary_search(excluded_.begin(), excluded_.end(), g);
}

void CoFiniteSet::enumerate(const Window& w, std::vector<GroupElement>& out) const {
  std::vector<GroupElement> all;
  for_each_element(spec(), w, [&](const GroupElement& g) { all.push_back(g); });
  std::set_difference(all.begin(), all.end(), excluded_.begin(), excluded_.end(), std::back_inserter(out));
}

Json CoFiniteSet::to_json() const {
  Json el = Json::array();
  for (const auto& e : excluded_) el.push_back(element_to_json(e));
  return Json{{"kind", "cofinite"}, {"group", spec_to_json(spec())}, {"excluded", el}};
}

RayComplementSet::RayComplementSet(Point origin, std::size_t axis, Int start)
    : SetNode(GroupSpec::free(origin.size())), origin_(std::move(origin)), axis_(axis), start_(std::move(start)) {
  if (axis_ >= origin_.size()) throw Error("ray axis out of range");
}

bool RayComplementSet::on_ray(const Point& p) const {
  for (std::size_t i = 0; i < p.size(); ++i)
    if (i != axis_ && p[i] != origin_[i]) return false;
  return p[axis_] - origin_[axis_] >= start_;
}

bool RayComplementSet::contains(const GroupElement& g) const { return !on_ray(g.free()); }

void RayComplementSet::enumerate(const Window& w, std::vector<GroupElement>& out) const {
  // The ray meets the window in one interval of the axis coordinate (possibly empty).
  bool line_hits = true;
  for (std::size_t i = 0; i < origin_.size(); ++i)
    if (i != axis_ && (origin_[i] < w[i].first || origin_[i] > w[i].second)) line_hits = false;
  Int ray_lo = origin_[axis_] + start_;
  w.for_each([&](const Point& p) {
    if (line_hits && p[axis_] >= ray_lo) {
      bool same_line = true;
      for (std::size_t i = 0; i < p.size(); ++i)
        if (i != axis_ && p[i] != origin_[i]) same_line = false;
      if (same_line) return;
    }
    out.emplace_back(spec(), p);
  });
}

Json RayComplementSet::to_json() const {
  return Json{{"kind", "ray_complement"}, {"origin", point_to_json(origin_)}, {"axis", axis_}, {"start", int_to_json(start_)}};
}

TruncatedColumnsSet::TruncatedColumnsSet(SymbolicSet a, IntFunction u, Side side)
    : SetNode(GroupSpec::free(u.arity() + 1)), a_(std::move(a)), u_(std::move(u)), side_(side) {
  if (u_.outdim() != 1) throw Error("truncated columns need a scalar height function");
  require_free(a_.spec(), u_.arity(), "column index set");
}

bool TruncatedColumnsSet::contains(const GroupElement& g) const {
  const std::size_t k = u_.arity();
  Point x = head(g.free(), k);
  if (!a_.contains(x)) return false;
  const Int& y = g.free()[k];
  Int h = u_.eval1(x);
  return side_ == Side::Below ? y < h : y > h;
}

void TruncatedColumnsSet::enumerate(const Window& w, std::vector<GroupElement>& out) const {
  const std::size_t k = u_.arity();
  Int lo = w[k].first, hi = w[k].second;
  for (const auto& a : a_.enumerate(w.slice(0, k))) {
    Int h = u_.eval1(a.free());
    Int from = lo, to = hi;
    if (side_ == Side::Below) to = std::min(hi, Int(h - 1));
    else from = std::max(lo, Int(h + 1));
    for (Int y = from; y <= to; ++y) {
      Point p = a.free();
      p.push_back(y);
      out.emplace_back(spec(), std::move(p));
    }
  }
}

Json TruncatedColumnsSet::to_json() const {
  return Json{{"kind", "truncated"}, {"domain", a_.to_json()}, {"u", function_json(u_)}, {"side", to_string(side_)}};
}

SpikedSet::SpikedSet(SymbolicSet base, IntFunction u, Fill fill)
    : SetNode(GroupSpec::free(u.arity() + 1)), base_(std::move(base)), u_(std::move(u)), fill_(fill) {
  if (u_.outdim() != 1) throw Error("spiked set needs a scalar height function; use bounded_spiked");
  require_free(base_.spec(), u_.arity(), "spike base");
}

bool SpikedSet::contains(const GroupElement& g) const {
  const std::size_t k = u_.arity();
  Point x = head(g.free(), k);
  if (base_.contains(x)) return true;
  return fill_ == Fill::MaxBound && g.free()[k] < u_.eval1(x);
}

void SpikedSet::enumerate(const Window& w, std::vector<GroupElement>& out) const {
  const std::size_t k = u_.arity();
  Window xs = w.slice(0, k);
  std::set<Point> in_base;
  for (const auto& b : base_.enumerate(xs)) in_base.insert(b.free());
  xs.for_each([&](const Point& x) {
    Int to = w[k].second;
    if (!in_base.count(x)) {
      if (fill_ == Fill::BaseOnly) return;
      to = std::min(to, Int(u_.eval1(x) - 1));
    }
    for (Int y = w[k].first; y <= to; ++y) out.emplace_back(spec(), concat(x, Point{y}));
  });
}

Json SpikedSet::to_json() const {
  return Json{{"kind", "spiked"}, {"base", base_.to_json()}, {"u", function_json(u_)}, {"fill", to_string(fill_)}};
}

BoundedSpikedSet::BoundedSpikedSet(SymbolicSet base, IntFunction u, UnimodularBasis basis, FibreOrder order, Side side)
    : SetNode(GroupSpec::free(u.arity() + u.outdim())), base_(std::move(base)), u_(std::move(u)),
      basis_(std::move(basis)), order_(order), side_(side) {
  require_free(base_.spec(), u_.arity(), "spike base");
  if (basis_.dim() != spec().rank) throw Error("basis dimension does not match k1 + k2");
}

bool BoundedSpikedSet::member_coords(const Point& x, const Point& y) const {
  if (base_.contains(x)) return true;
  Point h = u_(x);
  return side_ == Side::Below ? fibre_less(y, h, order_) : fibre_less(h, y, order_);
}

bool BoundedSpikedSet::contains(const GroupElement& g) const {
  Point c = basis_.apply_inverse(g.free());
  return member_coords(head(c, k1()), tail(c, k1()));
}

void BoundedSpikedSet::enumerate(const Window& w, std::vector<GroupElement>& out) const {
  const bool plain = basis_.is_identity();
  Window box = plain ? w : preimage_box(basis_, w);
  Window xs = box.slice(0, k1()), ys = fibre_box(box, k1(), k2());
  std::set<Point> in_base;
  for (const auto& b : base_.enumerate(xs)) in_base.insert(b.free());
  xs.for_each([&](const Point& x) {
    const bool full = in_base.count(x) > 0;
    Point h = full ? Point{} : u_(x);
    auto emit = [&](const Point& y) {
      Point g = plain ? concat(x, y) : basis_.apply(concat(x, y));
      if (plain || w.contains(g)) out.emplace_back(spec(), std::move(g));
    };
    if (!full && order_ == FibreOrder::Componentwise) {
      // Independent ranges per fibre coordinate.
      std::vector<std::pair<Int, Int>> r;
      for (std::size_t i = 0; i < k2(); ++i) {
        Int lo = ys[i].first, hi = ys[i].second;
        if (side_ == Side::Below) hi = std::min(hi, Int(h[i] - 1));
        else lo = std::max(lo, Int(h[i] + 1));
        if (lo > hi) return;
        r.emplace_back(lo, hi);
      }
      Window(std::move(r)).for_each(emit);
      return;
    }
    ys.for_each([&](const Point& y) {
      if (full) return emit(y);
      int c = lex_compare(y, h);
      if ((side_ == Side::Below && c < 0) || (side_ == Side::Above && c > 0)) emit(y);
    });
  });
}

Json BoundedSpikedSet::to_json() const {
  return Json{{"kind", "bounded_spiked"}, {"base", base_.to_json()}, {"u", function_json(u_)},
              {"basis", basis_to_json(basis_)}, {"order", to_string(order_)}, {"side", to_string(side_)}};
}

CosetGapSpikedSet::CosetGapSpikedSet(SymbolicSet base, IntFunction u, UnimodularBasis basis, Subgroup h, Point g2)
    : SetNode(GroupSpec::free(u.arity() + u.outdim())), base_(std::move(base)), u_(std::move(u)),
      basis_(std::move(basis)), h_(std::move(h)) {
  require_free(base_.spec(), u_.arity(), "spike base");
  require_free(h_.ambient(), u_.outdim(), "fibre subgroup");
  if (!h_.index()) throw Error("fibre subgroup must have finite index");
  if (basis_.dim() != spec().rank) throw Error("basis dimension does not match k1 + k2");
  g2_ = h_.reduce_coords(g2);
  normalized_ = g2_ != g2;
}

bool CosetGapSpikedSet::in_gap(const Point& y) const { return !h_.contains_coords(y - g2_); }

bool CosetGapSpikedSet::member_coords(const Point& x, const Point& y) const {
  if (base_.contains(x)) return true;
  if (lex_compare(y, u_(x)) < 0) return true;
  return in_gap(y);
}

bool CosetGapSpikedSet::contains(const GroupElement& g) const {
  Point c = basis_.apply_inverse(g.free());
  return member_coords(head(c, k1()), tail(c, k1()));
}

void CosetGapSpikedSet::enumerate(const Window& w, std::vector<GroupElement>& out) const {
  const bool plain = basis_.is_identity();
  Window box = plain ? w : preimage_box(basis_, w);
  Window xs = box.slice(0, k1()), ys = fibre_box(box, k1(), k2());
  std::set<Point> in_base;
  for (const auto& b : base_.enumerate(xs)) in_base.insert(b.free());
  // Fibre points of the coset g2 + H inside the box: these are the only ones a column can miss.
  std::set<Point> coset;
  {
    Window shifted = ys.translated(Point(g2_.size(), Int(0)) - g2_);
    std::vector<GroupElement> hs;
    SubgroupSet(h_).enumerate(shifted, hs);
    for (const auto& e : hs) coset.insert(e.free() + g2_);
  }
  xs.for_each([&](const Point& x) {
    const bool full = in_base.count(x) > 0;
    Point h = full ? Point{} : u_(x);
    ys.for_each([&](const Point& y) {
      if (!full && lex_compare(y, h) >= 0 && coset.count(y)) return;
      Point g = plain ? concat(x, y) : basis_.apply(concat(x, y));
      if (plain || w.contains(g)) out.emplace_back(spec(), std::move(g));
    });
  });
}

Json CosetGapSpikedSet::to_json() const {
  return Json{{"kind", "coset_gap_spiked"}, {"base", base_.to_json()}, {"u", function_json(u_)},
              {"basis", basis_to_json(basis_)}, {"subgroup", subgroup_to_json(h_)}, {"g2", point_to_json(g2_)}};
}

ColumnProgressionsSet::ColumnProgressionsSet(SymbolicSet domain, IntFunction moduli, std::optional<Point> divisors)
    : SetNode(GroupSpec::free(moduli.arity() + moduli.outdim())), domain_(std::move(domain)),
      q_(std::move(moduli)), divisors_(std::move(divisors)) {
  require_free(domain_.spec(), q_.arity(), "progression domain");
  if (divisors_ && divisors_->size() != q_.outdim()) throw Error("declared divisors have wrong length");
}

Point ColumnProgressionsSet::moduli_at(const Point& x) const {
  Point q = q_(x);
  for (std::size_t j = 0; j < q.size(); ++j) {
    if (q[j] <= 0) throw Error("progression modulus must be positive at " + addcomp::to_string(x));
    if (divisors_ && (*divisors_)[j] != 0 && q[j] % (*divisors_)[j] != 0)
      throw Error("declared divisor " + (*divisors_)[j].get_str() + " does not divide modulus at " + addcomp::to_string(x));
  }
  return q;
}

bool ColumnProgressionsSet::contains(const GroupElement& g) const {
  Point x = head(g.free(), k1());
  if (!domain_.contains(x)) return false;
  Point q = moduli_at(x);
  Point y = tail(g.free(), k1());
  for (std::size_t j = 0; j < q.size(); ++j)
    if (mod_floor(y[j], q[j]) != 0) return false;
  return true;
}

void ColumnProgressionsSet::enumerate(const Window& w, std::vector<GroupElement>& out) const {
  for (const auto& a : domain_.enumerate(w.slice(0, k1()))) {
    Point q = moduli_at(a.free());
    std::vector<std::pair<Int, Int>> steps;
    for (std::size_t j = 0; j < q.size(); ++j) {
      const auto& [lo, hi] = w[k1() + j];
      Int first = -floor_div(-lo, q[j]);  // ceil(lo / q)
      Int last = floor_div(hi, q[j]);
      if (first > last) {
        steps.clear();
        break;
      }
      steps.emplace_back(first, last);
    }
    if (steps.size() != q.size()) continue;
    Window(std::move(steps)).for_each([&](const Point& n) {
      Point y(n.size());
      for (std::size_t j = 0; j < n.size(); ++j) y[j] = n[j] * q[j];
      out.emplace_back(spec(), concat(a.free(), y));
    });
  }
}

Json ColumnProgressionsSet::to_json() const {
  Json j{{"kind", "column_progressions"}, {"domain", domain_.to_json()}, {"moduli", function_json(q_)}};
  if (divisors_) j["divisors"] = point_to_json(*divisors_);
  return j;
}

GraphSet::GraphSet(SymbolicSet m, IntFunction v, UnimodularBasis basis)
    : SetNode(GroupSpec::free(v.arity() + v.outdim())), m_(std::move(m)), v_(std::move(v)), basis_(std::move(basis)) {
  require_free(m_.spec(), v_.arity(), "graph domain");
  if (basis_.dim() != spec().rank) throw Error("basis dimension does not match graph dimension");
}

Point GraphSet::point_at(const Point& m) const {
  Point p = concat(m, v_(m));
  return basis_.is_identity() ? p : basis_.apply(p);
}

bool GraphSet::contains(const GroupElement& g) const {
  Point c = basis_.apply_inverse(g.free());
  Point m = head(c, k1());
  return m_.contains(m) && v_(m) == tail(c, k1());
}

void GraphSet::enumerate(const Window& w, std::vector<GroupElement>& out) const {
  Window box = basis_.is_identity() ? w : preimage_box(basis_, w);
  for (const auto& m : m_.enumerate(box.slice(0, k1()))) {
    Point p = point_at(m.free());
    if (w.contains(p)) out.emplace_back(spec(), std::move(p));
  }
}

Json GraphSet::to_json() const {
  Json j{{"kind", "graph"}, {"domain", m_.to_json()}, {"v", function_json(v_)}};
  if (!basis_.is_identity()) j["basis"] = basis_to_json(basis_);
  return j;
}

TranslateSet::TranslateSet(SymbolicSet inner, GroupElement g)
    : SetNode(inner.spec()), inner_(std::move(inner)), g_(std::move(g)) {
  if (!(g_.spec() == spec())) throw Error("translation vector outside the set's group");
}

bool TranslateSet::contains(const GroupElement& g) const { return inner_.contains(g - g_); }

void TranslateSet::enumerate(const Window& w, std::vector<GroupElement>& out) const {
  Point back(g_.free().size());
  for (std::size_t i = 0; i < back.size(); ++i) back[i] = -g_.free()[i];
  for (const auto& e : inner_.enumerate(w.translated(back))) out.push_back(e + g_);
}

Json TranslateSet::to_json() const {
  return Json{{"kind", "translate"}, {"inner", inner_.to_json()}, {"by", element_to_json(g_)}};
}

namespace {

GroupSpec union_spec(const std::vector<SymbolicSet>& parts) {
  if (parts.empty()) throw Error("union needs at least one part");
  for (const auto& p : parts)
    if (!(p.spec() == parts[0].spec())) throw Error("union parts live in different groups");
  return parts[0].spec();
}

}  // namespace

UnionSet::UnionSet(std::vector<SymbolicSet> parts) : SetNode(union_spec(parts)), parts_(std::move(parts)) {}

bool UnionSet::contains(const GroupElement& g) const {
  return std::any_of(parts_.begin(), parts_.end(), [&](const SymbolicSet& p) { return p.contains(g); });
}

void UnionSet::enumerate(const Window& w, std::vector<GroupElement>& out) const {
  for (const auto& p : parts_) {
    auto e = p.enumerate(w);
    out.insert(out.end(), e.begin(), e.end());
  }
}

Json UnionSet::to_json() const {
  Json parts = Json::array();
  for (const auto& p : parts_) parts.push_back(p.to_json());
  return Json{{"kind", "union"}, {"parts", parts}};
}

BasisImageSet::BasisImageSet(SymbolicSet inner, UnimodularBasis u)
    : SetNode(inner.spec()), inner_(std::move(inner)), u_(std::move(u)) {
  require_free(spec(), u_.dim(), "basis image");
}

bool BasisImageSet::contains(const GroupElement& g) const {
  return inner_.contains(GroupElement(spec(), u_.apply_inverse(g.free())));
}

void BasisImageSet::enumerate(const Window& w, std::vector<GroupElement>& out) const {
  for (const auto& e : inner_.enumerate(preimage_box(u_, w))) {
    Point p = u_.apply(e.free());
    if (w.contains(p)) out.emplace_back(spec(), std::move(p));
  }
}

Json BasisImageSet::to_json() const {
  return Json{{"kind", "basis_image"}, {"inner", inner_.to_json()}, {"matrix", basis_to_json(u_)}};
}

SubgroupSet::SubgroupSet(Subgroup h) : SetNode(h.ambient()), h_(std::move(h)) {}

void SubgroupSet::enumerate(const Window& w, std::vector<GroupElement>& out) const {
  // Walk the echelon columns: coefficient j is pinned down by the range of pivot row p_j.
  const auto& cols = h_.hnf_columns();
  const auto& piv = h_.pivot_rows();
  const GroupSpec& g = spec();
  const std::size_t m = g.dim();
  auto range = [&](std::size_t row) -> std::pair<Int, Int> {
    if (row < g.rank) return w[row];
    return {Int(0), g.torsion[row - g.rank] - 1};
  };
  auto rows_ok = [&](const Point& s, std::size_t from, std::size_t to) {
    for (std::size_t r = from; r < to; ++r) {
      auto [lo, hi] = range(r);
      if (s[r] < lo || s[r] > hi) return false;
    }
    return true;
  };
  std::function<void(std::size_t, const Point&)> rec = [&](std::size_t j, const Point& s) {
    std::size_t first_row = j == 0 ? 0 : piv[j - 1] + 1;
    std::size_t p = j < cols.size() ? piv[j] : m;
    if (!rows_ok(s, first_row, p)) return;
    if (j == cols.size()) {
      out.push_back(GroupElement::from_coords(g, s));
      return;
    }
    auto [lo, hi] = range(p);
    const Int& h = cols[j][p];
    Int k_lo = -floor_div(s[p] - lo, h);  // smallest k with s[p] + k h >= lo
    Int k_hi = floor_div(hi - s[p], h);
    for (Int k = k_lo; k <= k_hi; ++k) {
      Point t = s;
      for (std::size_t i = 0; i < m; ++i) t[i] += k * cols[j][i];
      rec(j + 1, t);
    }
  };
  rec(0, Point(m, Int(0)));
}

Json SubgroupSet::to_json() const { return Json{{"kind", "sublattice"}, {"subgroup", subgroup_to_json(h_)}}; }

RestrictedSet::RestrictedSet(SymbolicSet inner, Subgroup h) : SetNode(inner.spec()), inner_(std::move(inner)), h_(std::move(h)) {
  if (!(h_.ambient() == spec())) throw Error("restriction subgroup lives in a different group");
}

void RestrictedSet::enumerate(const Window& w, std::vector<GroupElement>& out) const {
  std::vector<GroupElement> in_h;
  SubgroupSet(h_).enumerate(w, in_h);
  for (const auto& e : in_h)
    if (inner_.contains(e)) out.push_back(e);
}

Json RestrictedSet::to_json() const {
  return Json{{"kind", "restricted"}, {"inner", inner_.to_json()}, {"subgroup", subgroup_to_json(h_)}};
}

// ---------------------------------------------------------------------------

namespace sets {

SymbolicSet finite(const GroupSpec& spec, std::vector<GroupElement> elements) {
  return SymbolicSet(std::make_shared<FiniteSet>(spec, std::move(elements)));
}

SymbolicSet finite(std::size_t dim, const std::vector<Point>& points) {
  std::vector<GroupElement> el;
  for (const auto& p : points) el.push_back(GroupElement(GroupSpec::free(dim), p));
  return finite(GroupSpec::free(dim), std::move(el));
}

SymbolicSet full(const GroupSpec& spec) { return SymbolicSet(std::make_shared<FullGroupSet>(spec)); }

SymbolicSet cofinite(const GroupSpec& spec, std::vector<GroupElement> excluded) {
  return SymbolicSet(std::make_shared<CoFiniteSet>(spec, std::move(excluded)));
}

SymbolicSet ray_complement(Point origin, std::size_t axis, Int start) {
  return SymbolicSet(std::make_shared<RayComplementSet>(std::move(origin), axis, std::move(start)));
}

SymbolicSet truncated(SymbolicSet a, IntFunction u, Side side) {
  return SymbolicSet(std::make_shared<TruncatedColumnsSet>(std::move(a), std::move(u), side));
}

SymbolicSet spiked(SymbolicSet base, IntFunction u, Fill fill) {
  return SymbolicSet(std::make_shared<SpikedSet>(std::move(base), std::move(u), fill));
}

SymbolicSet bounded_spiked(SymbolicSet base, IntFunction u, std::optional<UnimodularBasis> basis, FibreOrder order,
                           Side side) {
  auto p = basis ? *basis : UnimodularBasis::identity(u.arity() + u.outdim());
  return SymbolicSet(std::make_shared<BoundedSpikedSet>(std::move(base), std::move(u), std::move(p), order, side));
}

SymbolicSet coset_gap_spiked(SymbolicSet base, IntFunction u, Subgroup h, Point g2, std::optional<UnimodularBasis> basis) {
  auto p = basis ? *basis : UnimodularBasis::identity(u.arity() + u.outdim());
  return SymbolicSet(
      std::make_shared<CosetGapSpikedSet>(std::move(base), std::move(u), std::move(p), std::move(h), std::move(g2)));
}

SymbolicSet column_progressions(SymbolicSet domain, IntFunction moduli, std::optional<Point> divisors) {
  return SymbolicSet(std::make_shared<ColumnProgressionsSet>(std::move(domain), std::move(moduli), std::move(divisors)));
}

SymbolicSet graph(SymbolicSet m, IntFunction v, std::optional<UnimodularBasis> basis) {
  auto p = basis ? *basis : UnimodularBasis::identity(v.arity() + v.outdim());
  return SymbolicSet(std::make_shared<GraphSet>(std::move(m), std::move(v), std::move(p)));
}

SymbolicSet translate(SymbolicSet s, GroupElement g) {
  return SymbolicSet(std::make_shared<TranslateSet>(std::move(s), std::move(g)));
}

SymbolicSet set_union(std::vector<SymbolicSet> parts) {
  return SymbolicSet(std::make_shared<UnionSet>(std::move(parts)));
}

SymbolicSet basis_image(SymbolicSet s, UnimodularBasis u) {
  return SymbolicSet(std::make_shared<BasisImageSet>(std::move(s), std::move(u)));
}

SymbolicSet subgroup(Subgroup h) { return SymbolicSet(std::make_shared<SubgroupSet>(std::move(h))); }

SymbolicSet restricted(SymbolicSet s, Subgroup h) {
  return SymbolicSet(std::make_shared<RestrictedSet>(std::move(s), std::move(h)));
}

}  // namespace sets

}  // namespace addcomp
