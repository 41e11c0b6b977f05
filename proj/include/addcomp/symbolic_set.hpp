#pragma once

#include <addcomp/group.hpp>
#include <addcomp/int_function.hpp>

#include <functional>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace addcomp {

enum class Side { Below, Above };
enum class Fill { MaxBound, BaseOnly };
// Order used for "y < u(x)" when the fibre has rank > 1.
enum class FibreOrder { Lex, Componentwise };

std::string to_string(Side s);
std::string to_string(Fill f);
std::string to_string(FibreOrder o);
Side parse_side(const std::string& s);
Fill parse_fill(const std::string& s);
FibreOrder parse_order(const std::string& s);

// y < bound in the given order.
bool fibre_less(const Point& y, const Point& bound, FibreOrder order);

class SetNode {
 public:
  explicit SetNode(GroupSpec spec) : spec_(std::move(spec)) {}
  virtual ~SetNode() = default;

  const GroupSpec& spec() const { return spec_; }
  virtual bool contains(const GroupElement& g) const = 0;
  // Members inside the window, any order; the caller sorts.
  virtual void enumerate(const Window& w, std::vector<GroupElement>& out) const = 0;
  virtual std::string kind() const = 0;
  virtual Json to_json() const = 0;

 private:
  GroupSpec spec_;
};

// Immutable, shared description of a subset of a finitely generated abelian group.
class SymbolicSet {
 public:
  SymbolicSet() = default;
  explicit SymbolicSet(std::shared_ptr<const SetNode> node) : node_(std::move(node)) {}

  const GroupSpec& spec() const { return node_->spec(); }
  std::string kind() const { return node_->kind(); }
  Json to_json() const { return node_->to_json(); }
  const SetNode& node() const { return *node_; }
  explicit operator bool() const { return node_ != nullptr; }

  bool contains(const GroupElement& g) const;
  // Free groups only.
  bool contains(const Point& free) const;
  // Exactly the members inside w, sorted lexicographically.
  std::vector<GroupElement> enumerate(const Window& w) const;

  template <class T>
  const T* as() const {
    return dynamic_cast<const T*>(node_.get());
  }

 private:
  std::shared_ptr<const SetNode> node_;
};

class FiniteSet : public SetNode {
 public:
  FiniteSet(GroupSpec spec, std::vector<GroupElement> elements);
  const std::vector<GroupElement>& elements() const { return elements_; }
  bool contains(const GroupElement& g) const override;
  void enumerate(const Window& w, std::vector<GroupElement>& out) const override;
  std::string kind() const override { return "finite"; }
  Json to_json() const override;

 private:
  std::vector<GroupElement> elements_;  // sorted, unique
};

class FullGroupSet : public SetNode {
 public:
  using SetNode::SetNode;
  bool contains(const GroupElement& g) const override { return g.spec() == spec(); }
  void enumerate(const Window& w, std::vector<GroupElement>& out) const override;
  std::string kind() const override { return "full"; }
  Json to_json() const override;
};

class CoFiniteSet : public SetNode {
 public:
  CoFiniteSet(GroupSpec spec, std::vector<GroupElement> excluded);
  const std::vector<GroupElement>& excluded() const { return excluded_; }
  bool contains(const GroupElement& g) const override;
  void enumerate(const Window& w, std::vector<GroupElement>& out) const override;
  std::string kind() const override { return "cofinite"; }
  Json to_json() const override;

 private:
  std::vector<GroupElement> excluded_;
};

// Z^n minus the ray {origin + t e_axis : t >= start}.
class RayComplementSet : public SetNode {
 public:
  RayComplementSet(Point origin, std::size_t axis, Int start);
  const Point& origin() const { return origin_; }
  std::size_t axis() const { return axis_; }
  const Int& start() const { return start_; }
  bool on_ray(const Point& p) const;
  bool contains(const GroupElement& g) const override;
  void enumerate(const Window& w, std::vector<GroupElement>& out) const override;
  std::string kind() const override { return "ray_complement"; }
  Json to_json() const override;

 private:
  Point origin_;
  std::size_t axis_;
  Int start_;
};

// Union over a in A of {a} x (-inf, u(a)) (Below) or {a} x (u(a), inf) (Above), in Z^(k+1).
class TruncatedColumnsSet : public SetNode {
 public:
  TruncatedColumnsSet(SymbolicSet a, IntFunction u, Side side);
  const SymbolicSet& domain() const { return a_; }
  const IntFunction& u() const { return u_; }
  Side side() const { return side_; }
  bool contains(const GroupElement& g) const override;
  void enumerate(const Window& w, std::vector<GroupElement>& out) const override;
  std::string kind() const override { return "truncated"; }
  Json to_json() const override;

 private:
  SymbolicSet a_;
  IntFunction u_;
  Side side_;
};

// B x Z together with (MaxBound) every (x, y) with x outside B and y < u(x).
class SpikedSet : public SetNode {
 public:
  SpikedSet(SymbolicSet base, IntFunction u, Fill fill);
  const SymbolicSet& base() const { return base_; }
  const IntFunction& u() const { return u_; }
  Fill fill() const { return fill_; }
  bool contains(const GroupElement& g) const override;
  void enumerate(const Window& w, std::vector<GroupElement>& out) const override;
  std::string kind() const override { return "spiked"; }
  Json to_json() const override;

 private:
  SymbolicSet base_;
  IntFunction u_;
  Fill fill_;
};

// In coordinates (x, y) = P^-1 g with x in Z^k1, y in Z^k2:
// x in B, or y < u(x) (Below) / y > u(x) (Above) in the chosen fibre order.
class BoundedSpikedSet : public SetNode {
 public:
  BoundedSpikedSet(SymbolicSet base, IntFunction u, UnimodularBasis basis, FibreOrder order, Side side);
  const SymbolicSet& base() const { return base_; }
  const IntFunction& u() const { return u_; }
  const UnimodularBasis& basis() const { return basis_; }
  FibreOrder order() const { return order_; }
  Side side() const { return side_; }
  std::size_t k1() const { return u_.arity(); }
  std::size_t k2() const { return u_.outdim(); }
  bool member_coords(const Point& x, const Point& y) const;
  bool contains(const GroupElement& g) const override;
  void enumerate(const Window& w, std::vector<GroupElement>& out) const override;
  std::string kind() const override { return "bounded_spiked"; }
  Json to_json() const override;

 private:
  SymbolicSet base_;
  IntFunction u_;
  UnimodularBasis basis_;
  FibreOrder order_;
  Side side_;
};

// The largest set allowed for a coset gap g2 + H (H of finite index in the fibre):
// x in B, or y <lex u(x), or y not in g2 + H.
class CosetGapSpikedSet : public SetNode {
 public:
  CosetGapSpikedSet(SymbolicSet base, IntFunction u, UnimodularBasis basis, Subgroup h, Point g2);
  const SymbolicSet& base() const { return base_; }
  const IntFunction& u() const { return u_; }
  const UnimodularBasis& basis() const { return basis_; }
  const Subgroup& fibre_subgroup() const { return h_; }
  const Point& g2() const { return g2_; }
  bool normalized() const { return normalized_; }
  std::size_t k1() const { return u_.arity(); }
  std::size_t k2() const { return u_.outdim(); }
  bool in_gap(const Point& y) const;
  bool member_coords(const Point& x, const Point& y) const;
  bool contains(const GroupElement& g) const override;
  void enumerate(const Window& w, std::vector<GroupElement>& out) const override;
  std::string kind() const override { return "coset_gap_spiked"; }
  Json to_json() const override;

 private:
  SymbolicSet base_;
  IntFunction u_;
  UnimodularBasis basis_;
  Subgroup h_;
  Point g2_;
  bool normalized_ = false;
};

// {(x, y) : x in A, q_j(x) divides y_j for all j}. `divisors` are declared common
// divisors d_j of q_j on A; they are checked lazily on every evaluation.
class ColumnProgressionsSet : public SetNode {
 public:
  ColumnProgressionsSet(SymbolicSet domain, IntFunction moduli, std::optional<Point> divisors);
  const SymbolicSet& domain() const { return domain_; }
  const IntFunction& moduli() const { return q_; }
  const std::optional<Point>& divisors() const { return divisors_; }
  std::size_t k1() const { return q_.arity(); }
  std::size_t k2() const { return q_.outdim(); }
  Point moduli_at(const Point& x) const;
  bool contains(const GroupElement& g) const override;
  void enumerate(const Window& w, std::vector<GroupElement>& out) const override;
  std::string kind() const override { return "column_progressions"; }
  Json to_json() const override;

 private:
  SymbolicSet domain_;
  IntFunction q_;
  std::optional<Point> divisors_;
};

// {P (m, v(m)) : m in M}.
class GraphSet : public SetNode {
 public:
  GraphSet(SymbolicSet m, IntFunction v, UnimodularBasis basis);
  const SymbolicSet& domain() const { return m_; }
  const IntFunction& v() const { return v_; }
  const UnimodularBasis& basis() const { return basis_; }
  std::size_t k1() const { return v_.arity(); }
  std::size_t k2() const { return v_.outdim(); }
  Point point_at(const Point& m) const;
  bool contains(const GroupElement& g) const override;
  void enumerate(const Window& w, std::vector<GroupElement>& out) const override;
  std::string kind() const override { return "graph"; }
  Json to_json() const override;

 private:
  SymbolicSet m_;
  IntFunction v_;
  UnimodularBasis basis_;
};

class TranslateSet : public SetNode {
 public:
  TranslateSet(SymbolicSet inner, GroupElement g);
  const SymbolicSet& inner() const { return inner_; }
  const GroupElement& shift() const { return g_; }
  bool contains(const GroupElement& g) const override;
  void enumerate(const Window& w, std::vector<GroupElement>& out) const override;
  std::string kind() const override { return "translate"; }
  Json to_json() const override;

 private:
  SymbolicSet inner_;
  GroupElement g_;
};

class UnionSet : public SetNode {
 public:
  explicit UnionSet(std::vector<SymbolicSet> parts);
  const std::vector<SymbolicSet>& parts() const { return parts_; }
  bool contains(const GroupElement& g) const override;
  void enumerate(const Window& w, std::vector<GroupElement>& out) const override;
  std::string kind() const override { return "union"; }
  Json to_json() const override;

 private:
  std::vector<SymbolicSet> parts_;
};

// {U x : x in inner} for a free ambient group.
class BasisImageSet : public SetNode {
 public:
  BasisImageSet(SymbolicSet inner, UnimodularBasis u);
  const SymbolicSet& inner() const { return inner_; }
  const UnimodularBasis& matrix() const { return u_; }
  bool contains(const GroupElement& g) const override;
  void enumerate(const Window& w, std::vector<GroupElement>& out) const override;
  std::string kind() const override { return "basis_image"; }
  Json to_json() const override;

 private:
  SymbolicSet inner_;
  UnimodularBasis u_;
};

class SubgroupSet : public SetNode {
 public:
  explicit SubgroupSet(Subgroup h);
  const Subgroup& subgroup() const { return h_; }
  bool contains(const GroupElement& g) const override { return h_.contains(g); }
  void enumerate(const Window& w, std::vector<GroupElement>& out) const override;
  std::string kind() const override { return "sublattice"; }
  Json to_json() const override;

 private:
  Subgroup h_;
};

// inner intersected with a subgroup.
class RestrictedSet : public SetNode {
 public:
  RestrictedSet(SymbolicSet inner, Subgroup h);
  const SymbolicSet& inner() const { return inner_; }
  const Subgroup& subgroup() const { return h_; }
  bool contains(const GroupElement& g) const override { return h_.contains(g) && inner_.contains(g); }
  void enumerate(const Window& w, std::vector<GroupElement>& out) const override;
  std::string kind() const override { return "restricted"; }
  Json to_json() const override;

 private:
  SymbolicSet inner_;
  Subgroup h_;
};

// Smallest box containing U^-1 w.
Window preimage_box(const UnimodularBasis& u, const Window& w);

Json basis_to_json(const UnimodularBasis& u);
Json subgroup_to_json(const Subgroup& h);
Json element_to_json(const GroupElement& g);
Json spec_to_json(const GroupSpec& g);

namespace sets {

SymbolicSet finite(const GroupSpec& spec, std::vector<GroupElement> elements);
SymbolicSet finite(std::size_t dim, const std::vector<Point>& points);
SymbolicSet full(const GroupSpec& spec);
SymbolicSet cofinite(const GroupSpec& spec, std::vector<GroupElement> excluded);
SymbolicSet ray_complement(Point origin, std::size_t axis, Int start);
SymbolicSet truncated(SymbolicSet a, IntFunction u, Side side);
SymbolicSet spiked(SymbolicSet base, IntFunction u, Fill fill = Fill::MaxBound);
SymbolicSet bounded_spiked(SymbolicSet base, IntFunction u, std::optional<UnimodularBasis> basis = std::nullopt,
                           FibreOrder order = FibreOrder::Lex, Side side = Side::Below);
SymbolicSet coset_gap_spiked(SymbolicSet base, IntFunction u, Subgroup h, Point g2,
                             std::optional<UnimodularBasis> basis = std::nullopt);
SymbolicSet column_progressions(SymbolicSet domain, IntFunction moduli, std::optional<Point> divisors = std::nullopt);
SymbolicSet graph(SymbolicSet m, IntFunction v, std::optional<UnimodularBasis> basis = std::nullopt);
SymbolicSet translate(SymbolicSet s, GroupElement g);
SymbolicSet set_union(std::vector<SymbolicSet> parts);
SymbolicSet basis_image(SymbolicSet s, UnimodularBasis u);
SymbolicSet subgroup(Subgroup h);
SymbolicSet restricted(SymbolicSet s, Subgroup h);

}  // namespace sets

}  // namespace addcomp
