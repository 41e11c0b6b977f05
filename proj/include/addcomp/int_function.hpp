#pragma once

#include <addcomp/group.hpp>
#include <addcomp/polynomial.hpp>
#include <addcomp/quadratic_surd.hpp>

#include <json.hpp>

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

namespace addcomp {

using Json = nlohmann::json;

class FunctionImpl {
 public:
  FunctionImpl(std::size_t arity, std::size_t outdim) : arity_(arity), outdim_(outdim) {}
  virtual ~FunctionImpl() = default;

  std::size_t arity() const { return arity_; }
  std::size_t outdim() const { return outdim_; }
  virtual Point eval(const Point& x) const = 0;
  virtual std::string kind() const = 0;
  virtual Json to_json() const = 0;

 private:
  std::size_t arity_;
  std::size_t outdim_;
};

// Function Z^k -> Z^m. Cheap to copy; evaluation is thread-safe.
class IntFunction {
 public:
  IntFunction() = default;
  explicit IntFunction(std::shared_ptr<const FunctionImpl> impl) : impl_(std::move(impl)) {}

  std::size_t arity() const { return impl_->arity(); }
  std::size_t outdim() const { return impl_->outdim(); }
  std::string kind() const { return impl_->kind(); }
  Json to_json() const { return impl_->to_json(); }
  const FunctionImpl& impl() const { return *impl_; }
  explicit operator bool() const { return impl_ != nullptr; }

  Point operator()(const Point& x) const;
  // Scalar-valued functions only.
  Int eval1(const Point& x) const;
  Int at(long t) const { return eval1(Point{Int(t)}); }

  template <class T>
  const T* as() const {
    return dynamic_cast<const T*>(impl_.get());
  }

  // Same underlying object (used to match graphs against spiked sets).
  bool same_as(const IntFunction& o) const { return impl_ == o.impl_; }

 private:
  std::shared_ptr<const FunctionImpl> impl_;
};

enum class Rounding { Floor, Ceil, FloorCeil };

std::string to_string(Rounding r);
Rounding parse_rounding(const std::string& s);
Int round_rational(const Rational& q, Rounding r);

// Integer polynomial per output coordinate.
class PolynomialFn : public FunctionImpl {
 public:
  explicit PolynomialFn(std::vector<IntPoly> polys);
  const std::vector<IntPoly>& polys() const { return polys_; }
  Point eval(const Point& x) const override;
  std::string kind() const override { return "poly"; }
  Json to_json() const override;

 private:
  std::vector<IntPoly> polys_;
};

// round(num(x) / den(x)) with rational polynomials; `poles` supplies values where den vanishes.
class RationalFloorFn : public FunctionImpl {
 public:
  RationalFloorFn(RatPoly num, RatPoly den, Rounding mode, std::map<Point, Int> poles);
  const RatPoly& num() const { return num_; }
  const RatPoly& den() const { return den_; }
  Rounding mode() const { return mode_; }
  const std::map<Point, Int>& poles() const { return poles_; }
  Point eval(const Point& x) const override;
  std::string kind() const override { return "ratfloor"; }
  Json to_json() const override;

 private:
  RatPoly num_;
  RatPoly den_;
  Rounding mode_;
  std::map<Point, Int> poles_;
};

class TableFn : public FunctionImpl {
 public:
  TableFn(std::size_t arity, std::size_t outdim, std::map<Point, Point> entries,
          std::optional<Point> fallback);
  const std::map<Point, Point>& entries() const { return entries_; }
  const std::optional<Point>& fallback() const { return fallback_; }
  Point eval(const Point& x) const override;
  std::string kind() const override { return "table"; }
  Json to_json() const override;

 private:
  std::map<Point, Point> entries_;
  std::optional<Point> fallback_;
};

// x -> (b_j ^ (|x_1| + ... + |x_k|))_j.
class AbsPowerFn : public FunctionImpl {
 public:
  AbsPowerFn(std::size_t arity, std::vector<Int> bases);
  const std::vector<Int>& bases() const { return bases_; }
  Point eval(const Point& x) const override;
  std::string kind() const override { return "abspow"; }
  Json to_json() const override;

 private:
  std::vector<Int> bases_;
};

// Height of the rotated graph of f over the point t (d, c), measured along (a, b),
// for tan(theta) = a/b: alpha_t = (f(-t/s) - (a d + b c) t / s) / s, s = sqrt(a^2 + b^2).
// Rounded exactly in Q(s).
class RotationHeightFn : public FunctionImpl {
 public:
  RotationHeightFn(RatPoly f, Int a, Int b, Rounding mode);
  const RatPoly& f() const { return f_; }
  const Int& a() const { return a_; }
  const Int& b() const { return b_; }
  // Integers with b d - a c = -1; the rotated lattice is spanned by (d, c) and (a, b).
  const Int& c() const { return c_; }
  const Int& d() const { return d_; }
  Rounding mode() const { return mode_; }
  QuadSurd alpha(const Int& t) const;
  Point eval(const Point& x) const override;
  std::string kind() const override { return "surd"; }
  Json to_json() const override;

 private:
  RatPoly f_;
  Int a_, b_, c_, d_;
  Rounding mode_;
};

class NegatedFn : public FunctionImpl {
 public:
  explicit NegatedFn(IntFunction inner);
  const IntFunction& inner() const { return inner_; }
  Point eval(const Point& x) const override;
  std::string kind() const override { return "neg"; }
  Json to_json() const override;

 private:
  IntFunction inner_;
};

// x -> inner(x + shift).
class TranslatedFn : public FunctionImpl {
 public:
  TranslatedFn(IntFunction inner, Point shift);
  const IntFunction& inner() const { return inner_; }
  const Point& shift() const { return shift_; }
  Point eval(const Point& x) const override;
  std::string kind() const override { return "translated"; }
  Json to_json() const override;

 private:
  IntFunction inner_;
  Point shift_;
};

// Concatenated outputs of several functions of the same arity.
class StackFn : public FunctionImpl {
 public:
  explicit StackFn(std::vector<IntFunction> parts);
  const std::vector<IntFunction>& parts() const { return parts_; }
  Point eval(const Point& x) const override;
  std::string kind() const override { return "components"; }
  Json to_json() const override;

 private:
  std::vector<IntFunction> parts_;
};

// x -> inner(x) - (canonical representative of inner(x) modulo H).
class ReducedFn : public FunctionImpl {
 public:
  ReducedFn(IntFunction inner, Subgroup h);
  const IntFunction& inner() const { return inner_; }
  const Subgroup& subgroup() const { return h_; }
  Point eval(const Point& x) const override;
  std::string kind() const override { return "reduced"; }
  Json to_json() const override;

 private:
  IntFunction inner_;
  Subgroup h_;
};

// v(x) = -max u(B(-x, |x|^2 + 1)), B(c, n) = {y : |c - y|^2 < n}. Memoized.
class BallModerationFn : public FunctionImpl {
 public:
  explicit BallModerationFn(IntFunction u);
  const IntFunction& u() const { return u_; }
  Point eval(const Point& x) const override;
  std::string kind() const override { return "ball"; }
  Json to_json() const override;

 private:
  IntFunction u_;
  mutable std::mutex mutex_;
  mutable std::map<Point, Point> cache_;
};

// Lattice points y with |center - y|^2 < n, lexicographic order.
std::vector<Point> ball_points(const Point& center, const Int& n);

Json int_to_json(const Int& x);
Json point_to_json(const Point& p);
Json poly_to_json(const IntPoly& p);
Json ratpoly_to_json(const RatPoly& p);

namespace fn {

IntFunction poly(const IntPoly& p);
IntFunction poly(std::vector<IntPoly> ps);
// Univariate integer polynomial sum_i c_i t^i.
IntFunction univariate(const std::vector<long>& coeffs);
IntFunction constant(std::size_t arity, std::size_t outdim, const Int& c);
IntFunction rational_floor(RatPoly num, RatPoly den, Rounding mode = Rounding::Floor,
                           std::map<Point, Int> poles = {});
IntFunction table(std::size_t arity, std::size_t outdim, std::map<Point, Point> entries,
                  std::optional<Point> fallback = std::nullopt);
IntFunction abs_power(std::size_t arity, std::vector<Int> bases);
IntFunction rotation_height(RatPoly f, Int a, Int b, Rounding mode);
IntFunction negated(IntFunction f);
IntFunction translated(IntFunction f, Point shift);
IntFunction stack(std::vector<IntFunction> parts);
IntFunction reduced(IntFunction f, Subgroup h);
IntFunction ball_moderation(IntFunction u);

}  // namespace fn

}  // namespace addcomp
