#include <addcomp/group.hpp>

#include <algorithm>
#include <regex>
#include <sstream>

namespace addcomp {

void GroupSpec::validate() const {
  if (rank + torsion.size() == 0) throw Error("group must have rank + torsion length >= 1");
  for (const auto& n : torsion)
    if (n < 2) throw Error("torsion order must be >= 2, got " + n.get_str());
}

Int GroupSpec::order() const {
  if (rank != 0) throw Error("group " + to_string() + " is infinite");
  Int n = 1;
  for (const auto& t : torsion) n *= t;
  return n;
}

std::string GroupSpec::to_string() const {
  std::string s;
  if (rank == 1) s = "Z";
  else if (rank > 1) s = "Z^" + std::to_string(rank);
  for (const auto& t : torsion) {
    if (!s.empty()) s += "x";
    s += "Z" + t.get_str();
  }
  return s.empty() ? "0" : s;
}

GroupSpec GroupSpec::parse(const std::string& text) {
  GroupSpec g;
  std::stringstream ss(text);
  std::string factor;
  static const std::regex free_re(R"(Z(\^(\d+))?)");
  static const std::regex tors_re(R"(Z/?(\d+))");
  while (std::getline(ss, factor, 'x')) {
    std::smatch m;
    if (std::regex_match(factor, m, tors_re)) {
      g.torsion.push_back(parse_int(m[1].str()));
    } else if (std::regex_match(factor, m, free_re)) {
      g.rank += m[2].matched ? std::stoul(m[2].str()) : 1;
    } else {
      throw Error("cannot parse group factor '" + factor + "' in '" + text + "'");
    }
  }
  g.validate();
  return g;
}

GroupElement::GroupElement(GroupSpec spec, Point free, Point tors)
    : spec_(std::move(spec)), free_(std::move(free)), tors_(std::move(tors)) {
  if (free_.size() != spec_.rank || tors_.size() != spec_.torsion.size())
    throw Error("element shape does not match group " + spec_.to_string());
  for (std::size_t i = 0; i < tors_.size(); ++i) tors_[i] = mod_floor(tors_[i], spec_.torsion[i]);
}

GroupElement GroupElement::of(Point free) {
  auto n = free.size();
  return GroupElement(GroupSpec::free(n), std::move(free), {});
}

GroupElement GroupElement::zero(const GroupSpec& spec) {
  return GroupElement(spec, Point(spec.rank, Int(0)), Point(spec.torsion.size(), Int(0)));
}

GroupElement GroupElement::from_coords(const GroupSpec& spec, const Point& coords) {
  if (coords.size() != spec.dim()) throw Error("coordinate vector has wrong length");
  Point f(coords.begin(), coords.begin() + static_cast<long>(spec.rank));
  Point t(coords.begin() + static_cast<long>(spec.rank), coords.end());
  return GroupElement(spec, std::move(f), std::move(t));
}

Point GroupElement::coords() const {
  Point c = free_;
  c.insert(c.end(), tors_.begin(), tors_.end());
  return c;
}

GroupElement GroupElement::operator-() const {
  Point f(free_.size()), t(tors_.size());
  for (std::size_t i = 0; i < f.size(); ++i) f[i] = -free_[i];
  for (std::size_t i = 0; i < t.size(); ++i) t[i] = -tors_[i];
  return GroupElement(spec_, std::move(f), std::move(t));
}

GroupElement operator+(const GroupElement& a, const GroupElement& b) {
  if (!(a.spec_ == b.spec_))
    throw Error("cannot add elements of " + a.spec_.to_string() + " and " + b.spec_.to_string());
  return GroupElement(a.spec_, a.free_ + b.free_, a.tors_ + b.tors_);
}

GroupElement operator-(const GroupElement& a, const GroupElement& b) { return a + (-b); }

GroupElement add(const GroupElement& a, const GroupElement& b) { return a + b; }

std::string GroupElement::to_string() const {
  if (tors_.empty()) return addcomp::to_string(free_);
  return addcomp::to_string(free_) + "+" + addcomp::to_string(tors_);
}

// ---------------------------------------------------------------------------

Window::Window(std::vector<std::pair<Int, Int>> bounds) : bounds_(std::move(bounds)) {
  for (const auto& [lo, hi] : bounds_)
    if (lo > hi) throw Error("window bound " + lo.get_str() + ".." + hi.get_str() + " is empty");
}

Window Window::cube(std::size_t dim, long lo, long hi) {
  return Window(std::vector<std::pair<Int, Int>>(dim, {Int(lo), Int(hi)}));
}

Window Window::parse(const std::string& text) {
  std::vector<std::pair<Int, Int>> b;
  std::stringstream ss(text);
  std::string part;
  static const std::regex range_re(R"(\s*(-?\d+)\s*\.\.\s*(-?\d+)\s*)");
  while (std::getline(ss, part, ',')) {
    std::smatch m;
    if (!std::regex_match(part, m, range_re)) throw Error("bad window range '" + part + "'");
    b.emplace_back(parse_int(m[1].str()), parse_int(m[2].str()));
  }
  if (b.empty()) throw Error("empty window specification");
  return Window(std::move(b));
}

bool Window::contains(const Point& free) const {
  if (free.size() != bounds_.size()) return false;
  for (std::size_t i = 0; i < free.size(); ++i)
    if (free[i] < bounds_[i].first || free[i] > bounds_[i].second) return false;
  return true;
}

Int Window::count() const {
  Int n = 1;
  for (const auto& [lo, hi] : bounds_) n *= hi - lo + 1;
  return n;
}

Window Window::translated(const Point& by) const {
  auto b = bounds_;
  for (std::size_t i = 0; i < b.size(); ++i) {
    b[i].first += by[i];
    b[i].second += by[i];
  }
  return Window(std::move(b));
}

Window Window::expanded(const Int& margin) const {
  auto b = bounds_;
  for (auto& [lo, hi] : b) {
    lo -= margin;
    hi += margin;
  }
  return Window(std::move(b));
}

Window Window::slice(std::size_t first, std::size_t len) const {
  return Window(std::vector<std::pair<Int, Int>>(bounds_.begin() + static_cast<long>(first),
                                                 bounds_.begin() + static_cast<long>(first + len)));
}

std::string Window::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < bounds_.size(); ++i) {
    if (i) s += ",";
    s += bounds_[i].first.get_str() + ".." + bounds_[i].second.get_str();
  }
  return s;
}

void Window::for_each(const std::function<void(const Point&)>& fn) const {
  Point p(bounds_.size());
  for (std::size_t i = 0; i < p.size(); ++i) p[i] = bounds_[i].first;
  if (p.empty()) {
    fn(p);
    return;
  }
  while (true) {
    fn(p);
    std::size_t i = p.size();
    while (i > 0) {
      --i;
      if (p[i] < bounds_[i].second) {
        ++p[i];
        break;
      }
      p[i] = bounds_[i].first;
      if (i == 0) return;
    }
  }
}

std::vector<Point> Window::points() const {
  std::vector<Point> out;
  for_each([&](const Point& p) { out.push_back(p); });
  return out;
}

void for_each_element(const GroupSpec& spec, const Window& w,
                      const std::function<void(const GroupElement&)>& fn) {
  if (w.dim() != spec.rank) throw Error("window dimension does not match group rank");
  std::vector<std::pair<Int, Int>> tb;
  for (const auto& n : spec.torsion) tb.emplace_back(Int(0), n - 1);
  Window torsion_box(std::move(tb));
  w.for_each([&](const Point& f) {
    torsion_box.for_each([&](const Point& t) { fn(GroupElement(spec, f, t)); });
  });
}

// ---------------------------------------------------------------------------

Int determinant(const std::vector<Point>& rows) {
  // Bareiss fraction-free elimination.
  std::size_t n = rows.size();
  if (n == 0) return 1;
  auto m = rows;
  Int prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t s = k + 1;
      while (s < n && m[s][k] == 0) ++s;
      if (s == n) return 0;
      std::swap(m[k], m[s]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

UnimodularBasis::UnimodularBasis(std::vector<Point> rows) : rows_(std::move(rows)) {
  std::size_t n = rows_.size();
  for (const auto& r : rows_)
    if (r.size() != n) throw Error("basis matrix must be square");
  Int d = addcomp::determinant(rows_);
  if (d != 1 && d != -1) throw Error("matrix is not unimodular (determinant " + d.get_str() + ")");
  det_ = d == 1 ? 1 : -1;

  // Gauss-Jordan over Q; the result is integral because det = +-1.
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = rows_[i][j];
    a[i][n + i] = 1;
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (a[piv][col] == 0) ++piv;
    std::swap(a[piv], a[col]);
    Rational inv = 1 / a[col][col];
    for (auto& x : a[col]) x *= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || a[i][col] == 0) continue;
      Rational f = a[i][col];
      for (std::size_t j = 0; j < 2 * n; ++j) a[i][j] -= f * a[col][j];
    }
  }
  inverse_rows_.assign(n, Point(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inverse_rows_[i][j] = a[i][n + j].get_num();
}

UnimodularBasis UnimodularBasis::identity(std::size_t n) {
  std::vector<Point> r(n, Point(n, Int(0)));
  for (std::size_t i = 0; i < n; ++i) r[i][i] = 1;
  return UnimodularBasis(std::move(r));
}

UnimodularBasis UnimodularBasis::from_columns(const std::vector<Point>& cols) {
  std::size_t n = cols.size();
  std::vector<Point> r(n, Point(n));
  for (std::size_t i = 0; i < n; ++i) {
    if (cols[i].size() != n) throw Error("basis matrix must be square");
    for (std::size_t j = 0; j < n; ++j) r[j][i] = cols[i][j];
  }
  return UnimodularBasis(std::move(r));
}

Point UnimodularBasis::column(std::size_t j) const {
  Point c(rows_.size());
  for (std::size_t i = 0; i < rows_.size(); ++i) c[i] = rows_[i][j];
  return c;
}

bool UnimodularBasis::is_identity() const {
  for (std::size_t i = 0; i < rows_.size(); ++i)
    for (std::size_t j = 0; j < rows_.size(); ++j)
      if (rows_[i][j] != (i == j ? 1 : 0)) return false;
  return true;
}

static Point mat_vec(const std::vector<Point>& m, const Point& x) {
  if (x.size() != m.size()) throw Error("dimension mismatch in basis change");
  Point r(m.size(), Int(0));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < x.size(); ++j) r[i] += m[i][j] * x[j];
  return r;
}

Point UnimodularBasis::apply(const Point& x) const { return mat_vec(rows_, x); }
Point UnimodularBasis::apply_inverse(const Point& x) const { return mat_vec(inverse_rows_, x); }
UnimodularBasis UnimodularBasis::inverse() const { return UnimodularBasis(inverse_rows_); }

// ---------------------------------------------------------------------------

Subgroup::Subgroup(GroupSpec ambient, const std::vector<GroupElement>& generators)
    : ambient_(std::move(ambient)) {
  ambient_.validate();
  std::vector<Point> cols;
  for (const auto& g : generators) {
    if (!(g.spec() == ambient_)) throw Error("generator is not in " + ambient_.to_string());
    cols.push_back(g.coords());
  }
  build(std::move(cols));
}

Subgroup Subgroup::lattice(std::size_t m, const std::vector<Point>& basis) {
  std::vector<GroupElement> gens;
  for (const auto& b : basis) {
    if (b.size() != m) throw Error("lattice vector has wrong length");
    gens.push_back(GroupElement::of(b));
  }
  return Subgroup(GroupSpec::free(m), gens);
}

Subgroup Subgroup::whole(const GroupSpec& g) {
  std::vector<GroupElement> gens;
  for (std::size_t i = 0; i < g.dim(); ++i) {
    Point c(g.dim(), Int(0));
    c[i] = 1;
    gens.push_back(GroupElement::from_coords(g, c));
  }
  return Subgroup(g, gens);
}

void Subgroup::build(std::vector<Point> cols) {
  const std::size_t m = ambient_.dim();
  for (std::size_t i = 0; i < ambient_.torsion.size(); ++i) {
    Point rel(m, Int(0));
    rel[ambient_.rank + i] = ambient_.torsion[i];
    cols.push_back(std::move(rel));
  }
  auto axpy = [](Point& y, const Int& f, const Point& x) {
    for (std::size_t i = 0; i < y.size(); ++i) y[i] -= f * x[i];
  };
  std::size_t c = 0;
  for (std::size_t row = 0; row < m && c < cols.size(); ++row) {
    while (true) {
      std::size_t best = cols.size();
      for (std::size_t k = c; k < cols.size(); ++k)
        if (cols[k][row] != 0 && (best == cols.size() || abs(cols[k][row]) < abs(cols[best][row])))
          best = k;
      if (best == cols.size()) break;
      std::swap(cols[c], cols[best]);
      bool clean = true;
      for (std::size_t k = c + 1; k < cols.size(); ++k) {
        if (cols[k][row] == 0) continue;
        axpy(cols[k], floor_div(cols[k][row], cols[c][row]), cols[c]);
        if (cols[k][row] != 0) clean = false;
      }
      if (clean) break;
    }
    if (cols[c][row] == 0) continue;
    if (cols[c][row] < 0)
      for (auto& x : cols[c]) x = -x;
    for (std::size_t k = 0; k < c; ++k) axpy(cols[k], floor_div(cols[k][row], cols[c][row]), cols[c]);
    pivots_.push_back(row);
    ++c;
  }
  cols.resize(c);
  hnf_ = std::move(cols);
}

std::optional<Int> Subgroup::index() const {
  if (hnf_.size() != ambient_.dim()) return std::nullopt;
  Int idx = 1;
  for (std::size_t j = 0; j < hnf_.size(); ++j) idx *= hnf_[j][pivots_[j]];
  return idx;
}

Point Subgroup::reduce_coords(const Point& coords) const {
  if (coords.size() != ambient_.dim()) throw Error("element not in the ambient group of the subgroup");
  Point x = coords;
  for (std::size_t j = 0; j < hnf_.size(); ++j) {
    const auto& col = hnf_[j];
    Int q = floor_div(x[pivots_[j]], col[pivots_[j]]);
    if (q != 0)
      for (std::size_t i = 0; i < x.size(); ++i) x[i] -= q * col[i];
  }
  return x;
}

GroupElement Subgroup::reduce(const GroupElement& g) const {
  return GroupElement::from_coords(ambient_, reduce_coords(g.coords()));
}

bool Subgroup::contains_coords(const Point& coords) const {
  for (const auto& x : reduce_coords(coords))
    if (x != 0) return false;
  return true;
}

bool Subgroup::contains(const GroupElement& g) const {
  if (!(g.spec() == ambient_)) return false;
  // Torsion coordinates are reduced; reduction is modulo the relation columns.
  return contains_coords(g.coords());
}

bool Subgroup::is_subgroup_of(const Subgroup& other) const {
  if (!(ambient_ == other.ambient_)) return false;
  for (const auto& col : hnf_)
    if (!other.contains_coords(col)) return false;
  return true;
}

namespace {

// 0, 1, -1, 2, -2, ... -> 0, 1, 2, 3, 4, ...
Int zigzag(const Int& z) { return z > 0 ? Int(2 * z - 1) : Int(-2 * z); }

}  // namespace

std::vector<GroupElement> Subgroup::coset_representatives(std::optional<std::size_t> prefix) const {
  const std::size_t m = ambient_.dim();
  std::vector<bool> is_pivot(m, false);
  std::vector<Int> height(m, Int(0));
  for (std::size_t j = 0; j < hnf_.size(); ++j) {
    is_pivot[pivots_[j]] = true;
    height[pivots_[j]] = hnf_[j][pivots_[j]];
  }
  std::vector<std::size_t> free_rows;
  for (std::size_t i = 0; i < m; ++i)
    if (!is_pivot[i]) free_rows.push_back(i);
  if (!free_rows.empty() && !prefix)
    throw Error("subgroup has infinite index; a prefix bound is required");

  std::vector<std::pair<Int, Int>> box;
  for (std::size_t i = 0; i < m; ++i)
    if (is_pivot[i]) box.emplace_back(Int(0), height[i] - 1);
  Window pivot_box(box);

  std::vector<GroupElement> out;
  auto emit = [&](const Point& free_part) -> bool {
    bool done = false;
    pivot_box.for_each([&](const Point& pv) {
      if (done) return;
      Point x(m);
      std::size_t a = 0, b = 0;
      for (std::size_t i = 0; i < m; ++i) x[i] = is_pivot[i] ? pv[a++] : free_part[b++];
      out.push_back(GroupElement::from_coords(ambient_, x));
      if (prefix && out.size() >= *prefix) done = true;
    });
    return done;
  };

  if (free_rows.empty()) {
    emit({});
    return out;
  }
  const std::size_t f = free_rows.size();
  for (long shell = 0;; ++shell) {
    std::vector<Point> tuples;
    Window::cube(f, -shell, shell).for_each([&](const Point& t) {
      for (const auto& z : t)
        if (abs(z) == shell) {
          tuples.push_back(t);
          return;
        }
    });
    std::sort(tuples.begin(), tuples.end(), [](const Point& a, const Point& b) {
      for (std::size_t i = 0; i < a.size(); ++i) {
        Int za = zigzag(a[i]), zb = zigzag(b[i]);
        if (za != zb) return za < zb;
      }
      return false;
    });
    for (const auto& t : tuples)
      if (emit(t)) return out;
  }
}

std::vector<GroupElement> coset_representatives(const Subgroup& h, std::optional<std::size_t> prefix) {
  return h.coset_representatives(prefix);
}

bool membership_in_sublattice(const GroupElement& g, const Subgroup& h) { return h.contains(g); }

RotationBasis rational_rotation_basis(const Int& a, const Int& b) {
  Int g, s, t;
  mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  if (g != 1) throw Error("rotation slope " + a.get_str() + "/" + b.get_str() + " is not in lowest terms");
  // s a + t b = 1, so (c, d) = (t, -s) gives a d - b c = -1.
  const Int c0 = t, d0 = -s;
  std::vector<Int> ks;
  auto near = [&](const Int& num, const Int& den) {
    if (den == 0) return;
    Int q = floor_div(-num, den);
    for (int off = -1; off <= 2; ++off) ks.push_back(q + off);
  };
  near(c0, a);
  near(d0, b);
  if (ks.empty()) ks.push_back(0);
  Int best_c = 0, best_d = 0, best_cost = -1;
  for (const auto& k : ks) {
    Int c = c0 + k * a, d = d0 + k * b;
    Int cost = abs(c) + abs(d);
    bool better = best_cost < 0 || cost < best_cost ||
                  (cost == best_cost && (c > best_c || (c == best_c && d > best_d)));
    if (better) {
      best_c = c;
      best_d = d;
      best_cost = cost;
    }
  }
  RotationBasis r;
  r.c = best_c;
  r.d = best_d;
  r.basis = UnimodularBasis::from_columns({Point{best_d, best_c}, Point{b, a}});
  r.g1 = Subgroup::lattice(2, {Point{best_d, best_c}});
  r.g2 = Subgroup::lattice(2, {Point{b, a}});
  return r;
}

}  // namespace addcomp
