#pragma once

#include <addcomp/group.hpp>
#include <addcomp/int_function.hpp>
#include <addcomp/moderation.hpp>
#include <addcomp/symbolic_set.hpp>

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace addcomp {

enum class RecipeKind { GraphOfModeration, CosetLift, SubgroupRestrict, Thm511 };
std::string to_string(RecipeKind k);

struct MinCompRecipe {
  RecipeKind kind = RecipeKind::GraphOfModeration;
  Json inputs;
  SymbolicSet result;
  // Certifies the graph complement, when the recipe knows one.
  std::optional<ModerationBound> bound;
  Json to_json() const;
};

// {P (m, v(m)) : m in M}.
MinCompRecipe graph_min_complement(const SymbolicSet& base, const SymbolicSet& m, const IntFunction& v,
                                   std::optional<UnimodularBasis> basis = std::nullopt,
                                   std::optional<ModerationBound> bound = std::nullopt);

// M intersected with H. Finite sets are filtered, the full group becomes H itself,
// and graphs over a finite `scan` window of the domain become finite sets.
SymbolicSet subgroup_restrict(const SymbolicSet& m, const Subgroup& h, const std::optional<Window>& scan = std::nullopt);

// Union of the translates M + g over the given coset representatives of H.
SymbolicSet coset_lift(const SymbolicSet& m, const Subgroup& h, const std::vector<GroupElement>& reps);

// W+ = {n > floor(alpha_t)} (Above) or W- = {n < ceil(alpha_t)} (Below) in the lattice
// basis (d', c'), (a, b). include_axis adds the line through (a, b).
SymbolicSet rotated_truncated_sets(const RatPoly& f, const Int& a, const Int& b, Side side, bool include_axis);

struct Thm511Result {
  SymbolicSet x;
  MinCompRecipe complement;
  bool g2_normalized = false;
};

// X = B x G2  u  {y < u(x)}  u  G1 x (G2 \ (g2 + H)), with the graph of the
// H-valued moderation over M as its complement.
Thm511Result thm511_max_set(const SymbolicSet& base, const IntFunction& u, const Subgroup& h, const Point& g2,
                            const SymbolicSet& m, const Moderation& moderation,
                            std::optional<UnimodularBasis> basis = std::nullopt);

struct CatalogEntry {
  std::string id;
  std::string summary;
  SymbolicSet set;
  std::string complement;  // catalog id of a known complement
  std::optional<ModerationBound> bound;
  std::string window;      // default verification window
};

const std::vector<std::string>& catalog_ids();
CatalogEntry catalog_entry(const std::string& id);
SymbolicSet named_sets(const std::string& id);

}  // namespace addcomp
