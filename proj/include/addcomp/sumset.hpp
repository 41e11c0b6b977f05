#pragma once

#include <addcomp/group.hpp>
#include <addcomp/moderation.hpp>
#include <addcomp/symbolic_set.hpp>

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace addcomp {

enum class RadiusKind { Certified, Heuristic };

// How far from a queried point the engine looks for complement elements.
// For graph complements, half_width bounds |m - x0| in the graph's domain
// coordinates; `bound` is the moderation bound that certifies columns.
struct SearchRadius {
  RadiusKind kind = RadiusKind::Heuristic;
  Int half_width = 8;
  std::optional<ModerationBound> bound;
  // Filled by certified_radius: the only domain points that can serve one column.
  std::vector<Point> candidates;
  std::optional<Int> m0;
  std::string justification;

  static SearchRadius heuristic(long half_width);
  static SearchRadius certified(ModerationBound bound, long half_width = 8);
  bool is_certified() const { return kind == RadiusKind::Certified; }
  Json to_json() const;
};

enum class CoverStatus { Covered, NotCovered, Unverified };
std::string to_string(CoverStatus s);

struct CoverageCertificate {
  Window window;
  CoverStatus status = CoverStatus::Covered;
  std::optional<GroupElement> failure;  // first exact failure, or first unverified point
  std::string reason;
  std::map<GroupElement, GroupElement> witnesses;  // point -> c with point - c in W
  std::size_t points = 0;
  std::size_t unverified = 0;
  Json to_json() const;
};

struct MinimalityEntry {
  GroupElement c;
  std::optional<GroupElement> witness;  // x0 in W + c but not in W + (C \ {c})
  std::string note;
};

struct MinimalityCertificate {
  std::vector<MinimalityEntry> entries;
  bool all_found = false;
  std::string radius;
  Json to_json() const;
};

struct EngineOptions {
  unsigned threads = 1;
  // Maximal search extent for minimality witnesses; default max(|m0| + span, 64).
  std::optional<Int> witness_bound;
};

// Result of covering one point.
struct PointCover {
  CoverStatus status = CoverStatus::Unverified;
  std::optional<GroupElement> c;
  std::string reason;
};

// Is x in W + (C minus `removed`)?
PointCover cover_point(const SymbolicSet& w, const SymbolicSet& c, const GroupElement& x, const SearchRadius& radius,
                       const std::optional<GroupElement>& removed = std::nullopt);

struct SumsetResult {
  std::vector<GroupElement> points;
  bool complete = true;  // false when a Heuristic radius may have missed points
};

SumsetResult sumset_window(const SymbolicSet& a, const SymbolicSet& b, const Window& target, const SearchRadius& radius,
                           const EngineOptions& opts = {});

CoverageCertificate is_complement_on_window(const SymbolicSet& w, const SymbolicSet& c, const Window& target,
                                            const SearchRadius& radius, const EngineOptions& opts = {});

// For graph complements `base_window` ranges over the graph's domain.
MinimalityCertificate minimality_witnesses(const SymbolicSet& w, const SymbolicSet& c, const Window& base_window,
                                           const SearchRadius& radius, const EngineOptions& opts = {});

// Domain points m of the graph C whose column can reach the column over x0
// above the moderation bound.
SearchRadius certified_radius(const SymbolicSet& w, const SymbolicSet& c, const Point& x0, const ModerationBound& m0);

struct ShrinkStep {
  GroupElement removed;
  CoverStatus status = CoverStatus::Covered;
  std::optional<GroupElement> failure;
  // Replacement data for truncated columns: w, n_w, c_w.
  struct Replacement {
    Point w;
    Int n_w;
    std::optional<Point> c_w;
  };
  std::vector<Replacement> replacements;
};

struct ShrinkReport {
  std::vector<ShrinkStep> steps;
  bool coverage_persisted = true;
  std::vector<GroupElement> remaining;
  Json to_json() const;
};

// Removes `rounds` elements from the finite complement C (the given ones first, then
// deterministic interior choices) and re-verifies coverage on the target after each removal.
ShrinkReport shrink_complement_demo(const SymbolicSet& w, const SymbolicSet& c, const Window& target, std::size_t rounds,
                                    const std::vector<GroupElement>& to_remove = {});

}  // namespace addcomp
