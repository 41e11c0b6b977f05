#pragma once

#include <addcomp/group.hpp>
#include <addcomp/integer.hpp>

#include <json.hpp>

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace addcomp {

using Json = nlohmann::json;
using Mask = std::uint32_t;

// Finite abelian group of order at most 24 with subsets stored as bit masks.
// Element i is the i-th element in lexicographic order of residues.
class FiniteGroupTable {
 public:
  static constexpr std::size_t kMaxOrder = 24;

  explicit FiniteGroupTable(const GroupSpec& spec);

  const GroupSpec& spec() const { return spec_; }
  std::size_t order() const { return n_; }
  Mask full() const { return n_ == 32 ? ~Mask(0) : (Mask(1) << n_) - 1; }

  std::size_t add(std::size_t a, std::size_t b) const { return add_[a * n_ + b]; }
  std::size_t neg(std::size_t a) const { return neg_[a]; }
  GroupElement element(std::size_t i) const;
  std::size_t index(const GroupElement& g) const;

  Mask shift(Mask s, std::size_t g) const;
  Mask sumset(Mask a, Mask b) const;
  bool is_complement(Mask w, Mask c, Mask target) const { return (sumset(w, c) & target) == target; }
  bool is_complement(Mask w, Mask c) const { return is_complement(w, c, full()); }
  // Every element of c is needed to cover `target`.
  bool is_minimal_complement(Mask w, Mask c, Mask target) const;
  bool is_minimal_complement(Mask w, Mask c) const { return is_minimal_complement(w, c, full()); }

  bool is_subgroup(Mask h) const;
  std::vector<Mask> subgroups() const;
  // Smallest element of each coset of h, in increasing order.
  std::vector<std::size_t> coset_representatives(Mask h) const;

  Mask mask_of(const std::vector<GroupElement>& elems) const;
  std::vector<GroupElement> elements_of(Mask m) const;
  std::string format(Mask m) const;

 private:
  GroupSpec spec_;
  std::size_t n_ = 0;
  std::vector<Point> residues_;
  std::vector<std::uint8_t> add_;
  std::vector<std::uint8_t> neg_;
};

// Every C with W + C = G, in increasing mask order.
void for_each_complement(const FiniteGroupTable& g, Mask w, const std::function<void(Mask)>& fn);
std::vector<Mask> all_complements(const FiniteGroupTable& g, Mask w);

// Minimal complements of W inside the subgroup `universe` (default: G), by
// backtracking over the points still uncovered. Sorted by mask.
std::vector<Mask> minimal_complements(const FiniteGroupTable& g, Mask w, Mask universe = 0);
// Reference implementation: filter all 2^N subsets. Only for N <= 16.
std::vector<Mask> minimal_complements_brute(const FiniteGroupTable& g, Mask w);
// Remove elements from G greedily while coverage holds.
Mask greedy_minimal_complement(const FiniteGroupTable& g, Mask w, Mask universe = 0);

struct Thm24Report {
  bool exists_in_h = false;
  bool exists_in_g = false;
  bool lifts_minimal = true;          // coset lifts of minimal complements in H
  bool restrictions_minimal = true;   // coset slices of minimal complements in G
  std::size_t lifts_checked = 0;
  std::size_t restrictions_checked = 0;
  std::string detail;
  bool ok() const { return exists_in_h == exists_in_g && lifts_minimal && restrictions_minimal; }
  Json to_json() const;
};

// W a nonempty subset of the subgroup H. At most `cap` complements are checked in each direction.
Thm24Report thm24_check(const FiniteGroupTable& g, Mask h, Mask w, std::size_t cap = 64);

// Abelian groups of order <= max_order used by the exhaustive checks:
// the cyclic groups of order >= 2 and Z2xZ2, Z2xZ4, Z2xZ2xZ2, Z3xZ3, Z2xZ6.
std::vector<GroupSpec> small_groups(std::size_t max_order);

}  // namespace addcomp
