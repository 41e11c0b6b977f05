#pragma once

#include <addcomp/integer.hpp>

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace addcomp {

// Z^rank x Z/torsion[0] x ... x Z/torsion[t-1].
struct GroupSpec {
  std::size_t rank = 0;
  std::vector<Int> torsion;

  static GroupSpec free(std::size_t r) { return GroupSpec{r, {}}; }
  static GroupSpec cyclic(long n) { return GroupSpec{0, {Int(n)}}; }

  void validate() const;
  std::size_t dim() const { return rank + torsion.size(); }
  bool is_free() const { return torsion.empty(); }
  bool is_finite() const { return rank == 0; }
  Int order() const;
  std::string to_string() const;

  // "Z4xZ2", "Z^2", "ZxZ/3" (Z alone is the free factor).
  static GroupSpec parse(const std::string& text);

  friend bool operator==(const GroupSpec&, const GroupSpec&) = default;
};

class GroupElement {
 public:
  GroupElement() = default;
  GroupElement(GroupSpec spec, Point free, Point tors = {});

  // Element of Z^n.
  static GroupElement of(Point free);
  static GroupElement zero(const GroupSpec& spec);
  // Inverse of coords(): free coordinates followed by residues.
  static GroupElement from_coords(const GroupSpec& spec, const Point& coords);

  const GroupSpec& spec() const { return spec_; }
  const Point& free() const { return free_; }
  const Point& tors() const { return tors_; }
  Point coords() const;

  GroupElement operator-() const;

  friend GroupElement operator+(const GroupElement& a, const GroupElement& b);
  friend GroupElement operator-(const GroupElement& a, const GroupElement& b);
  friend bool operator==(const GroupElement& a, const GroupElement& b) {
    return a.free_ == b.free_ && a.tors_ == b.tors_ && a.spec_ == b.spec_;
  }
  // Lexicographic on (free, tors); only meaningful within one group.
  friend bool operator<(const GroupElement& a, const GroupElement& b) {
    int c = lex_compare(a.free_, b.free_);
    if (c != 0) return c < 0;
    return lex_compare(a.tors_, b.tors_) < 0;
  }

  std::string to_string() const;

 private:
  GroupSpec spec_;
  Point free_;
  Point tors_;
};

GroupElement add(const GroupElement& a, const GroupElement& b);

// Box of free coordinates; torsion coordinates are always taken in full.
class Window {
 public:
  Window() = default;
  explicit Window(std::vector<std::pair<Int, Int>> bounds);

  static Window cube(std::size_t dim, long lo, long hi);
  // "-10..10,-10..10"
  static Window parse(const std::string& text);

  std::size_t dim() const { return bounds_.size(); }
  const std::pair<Int, Int>& operator[](std::size_t i) const { return bounds_[i]; }
  const std::vector<std::pair<Int, Int>>& bounds() const { return bounds_; }

  bool contains(const Point& free) const;
  Int count() const;
  Window translated(const Point& by) const;
  Window expanded(const Int& margin) const;
  // Keep only coordinates [first, first+len).
  Window slice(std::size_t first, std::size_t len) const;
  std::string to_string() const;

  // Lexicographic order, last coordinate fastest.
  void for_each(const std::function<void(const Point&)>& fn) const;
  std::vector<Point> points() const;

  friend bool operator==(const Window&, const Window&) = default;

 private:
  std::vector<std::pair<Int, Int>> bounds_;
};

// Every element of `spec` whose free part lies in `w`, lexicographic order.
void for_each_element(const GroupSpec& spec, const Window& w,
                      const std::function<void(const GroupElement&)>& fn);

// Square integer matrix with determinant +1 or -1, stored by rows.
class UnimodularBasis {
 public:
  UnimodularBasis() = default;
  explicit UnimodularBasis(std::vector<Point> rows);

  static UnimodularBasis identity(std::size_t n);
  // Columns are the given vectors.
  static UnimodularBasis from_columns(const std::vector<Point>& cols);

  std::size_t dim() const { return rows_.size(); }
  const std::vector<Point>& rows() const { return rows_; }
  Point column(std::size_t j) const;
  int determinant() const { return det_; }
  bool is_identity() const;

  Point apply(const Point& x) const;
  Point apply_inverse(const Point& x) const;
  UnimodularBasis inverse() const;

  friend bool operator==(const UnimodularBasis& a, const UnimodularBasis& b) {
    return a.rows_ == b.rows_;
  }

 private:
  std::vector<Point> rows_;
  std::vector<Point> inverse_rows_;
  int det_ = 1;
};

Int determinant(const std::vector<Point>& rows);

// Subgroup of a finitely generated abelian group, given by generators.
// Internally the lattice L in Z^(r+t) spanned by lifted generators and the
// torsion relations n_i e_(r+i), kept in column Hermite normal form.
class Subgroup {
 public:
  Subgroup() = default;
  Subgroup(GroupSpec ambient, const std::vector<GroupElement>& generators);
  // Sublattice of Z^m spanned by the given vectors.
  static Subgroup lattice(std::size_t m, const std::vector<Point>& basis);
  static Subgroup whole(const GroupSpec& g);

  const GroupSpec& ambient() const { return ambient_; }
  const std::vector<Point>& hnf_columns() const { return hnf_; }
  const std::vector<std::size_t>& pivot_rows() const { return pivots_; }
  std::size_t lattice_rank() const { return hnf_.size(); }
  std::optional<Int> index() const;

  bool contains(const GroupElement& g) const;
  bool contains_coords(const Point& coords) const;
  // Canonical representative of g + H: pivot coordinates reduced into [0, h).
  GroupElement reduce(const GroupElement& g) const;
  Point reduce_coords(const Point& coords) const;
  bool is_subgroup_of(const Subgroup& other) const;

  // One representative per coset. Finite index: the whole fundamental domain
  // in lexicographic order. Infinite index: `prefix` is required and the
  // unconstrained coordinates are enumerated by L-infinity shells, each
  // coordinate ordered 0, 1, -1, 2, -2, ...
  std::vector<GroupElement> coset_representatives(
      std::optional<std::size_t> prefix = std::nullopt) const;

 private:
  void build(std::vector<Point> cols);

  GroupSpec ambient_;
  std::vector<Point> hnf_;
  std::vector<std::size_t> pivots_;
};

struct RotationBasis {
  Int c;
  Int d;
  // Columns (d, c) and (b, a).
  UnimodularBasis basis;
  Subgroup g1;  // {c x = d y}, generated by (d, c)
  Subgroup g2;  // {a x = b y}, generated by (b, a)
};

// Integers c, d with a d - b c = -1, minimal |c| + |d|, ties broken towards
// the lexicographically largest (c, d).
RotationBasis rational_rotation_basis(const Int& a, const Int& b);

std::vector<GroupElement> coset_representatives(const Subgroup& h,
                                                std::optional<std::size_t> prefix = std::nullopt);
bool membership_in_sublattice(const GroupElement& g, const Subgroup& h);

}  // namespace addcomp
