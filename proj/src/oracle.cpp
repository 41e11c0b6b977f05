#include <addcomp/oracle.hpp>

#include <algorithm>
#include <bit>
#include <set>

namespace addcomp {

FiniteGroupTable::FiniteGroupTable(const GroupSpec& spec) : spec_(spec) {
  spec.validate();
  if (!spec.is_finite()) throw Error("oracle needs a finite group, got " + spec.to_string());
  Int order = spec.order();
  if (order > Int(kMaxOrder)) throw Error("oracle groups are capped at order 24, got " + order.get_str());
  n_ = order.get_ui();
  for_each_element(spec, Window(std::vector<std::pair<Int, Int>>{}),
                   [&](const GroupElement& g) { residues_.push_back(g.tors()); });
  add_.resize(n_ * n_);
  neg_.resize(n_);
  for (std::size_t a = 0; a < n_; ++a) {
    neg_[a] = static_cast<std::uint8_t>(index(-element(a)));
    for (std::size_t b = 0; b < n_; ++b) add_[a * n_ + b] = static_cast<std::uint8_t>(index(element(a) + element(b)));
  }
}

GroupElement FiniteGroupTable::element(std::size_t i) const { return GroupElement(spec_, {}, residues_.at(i)); }

std::size_t FiniteGroupTable::index(const GroupElement& g) const {
  if (!(g.spec() == spec_)) throw Error("element " + g.to_string() + " is not in " + spec_.to_string());
  std::size_t idx = 0;
  for (std::size_t i = 0; i < spec_.torsion.size(); ++i) idx = idx * spec_.torsion[i].get_ui() + g.tors()[i].get_ui();
  return idx;
}

Mask FiniteGroupTable::shift(Mask s, std::size_t g) const {
  Mask out = 0;
  for (Mask r = s; r; r &= r - 1) out |= Mask(1) << add(static_cast<std::size_t>(std::countr_zero(r)), g);
  return out;
}

Mask FiniteGroupTable::sumset(Mask a, Mask b) const {
  Mask out = 0;
  for (Mask r = b; r; r &= r - 1) out |= shift(a, static_cast<std::size_t>(std::countr_zero(r)));
  return out;
}

bool FiniteGroupTable::is_minimal_complement(Mask w, Mask c, Mask target) const {
  if (!is_complement(w, c, target)) return false;
  for (Mask r = c; r; r &= r - 1)
    if (is_complement(w, c & ~(r & -r), target)) return false;
  return true;
}

bool FiniteGroupTable::is_subgroup(Mask h) const {
  if (!(h & 1)) return false;
  for (Mask r = h; r; r &= r - 1) {
    std::size_t a = static_cast<std::size_t>(std::countr_zero(r));
    if (!(h >> neg(a) & 1)) return false;
    if ((shift(h, a) & ~h) != 0) return false;
  }
  return true;
}

std::vector<Mask> FiniteGroupTable::subgroups() const {
  // Breadth-first over subgroups, adjoining one generator at a time.
  std::set<Mask> found;
  auto closure = [&](Mask gens) {
    Mask h = 1;
    for (;;) {
      Mask next = h | sumset(h, gens);
      if (next == h) return h;
      h = next;
    }
  };
  std::vector<Mask> frontier{1};
  found.insert(1);
  while (!frontier.empty()) {
    std::vector<Mask> next;
    for (Mask h : frontier)
      for (std::size_t g = 0; g < n_; ++g) {
        if (h >> g & 1) continue;
        Mask k = closure(h | Mask(1) << g);
        if (found.insert(k).second) next.push_back(k);
      }
    frontier = std::move(next);
  }
  return {found.begin(), found.end()};
}

std::vector<std::size_t> FiniteGroupTable::coset_representatives(Mask h) const {
  std::vector<std::size_t> reps;
  Mask seen = 0;
  for (std::size_t g = 0; g < n_; ++g) {
    if (seen >> g & 1) continue;
    reps.push_back(g);
    seen |= shift(h, g);
  }
  return reps;
}

Mask FiniteGroupTable::mask_of(const std::vector<GroupElement>& elems) const {
  Mask m = 0;
  for (const auto& e : elems) m |= Mask(1) << index(e);
  return m;
}

std::vector<GroupElement> FiniteGroupTable::elements_of(Mask m) const {
  std::vector<GroupElement> out;
  for (std::size_t i = 0; i < n_; ++i)
    if (m >> i & 1) out.push_back(element(i));
  return out;
}

std::string FiniteGroupTable::format(Mask m) const {
  std::string s = "{";
  bool first = true;
  for (const auto& e : elements_of(m)) {
    if (!first) s += ", ";
    first = false;
    s += to_string(e.tors());
  }
  return s + "}";
}

void for_each_complement(const FiniteGroupTable& g, Mask w, const std::function<void(Mask)>& fn) {
  if (w == 0) throw Error("W must be nonempty");
  const Mask full = g.full();
  for (std::uint64_t c = 1; c <= full; ++c)
    if (g.is_complement(w, static_cast<Mask>(c))) fn(static_cast<Mask>(c));
}

std::vector<Mask> all_complements(const FiniteGroupTable& g, Mask w) {
  std::vector<Mask> out;
  for_each_complement(g, w, [&](Mask c) { out.push_back(c); });
  return out;
}

namespace {

class TransversalSearch {
 public:
  TransversalSearch(const FiniteGroupTable& g, Mask w, Mask universe) : g_(g), w_(w), u_(universe) {
    const std::size_t n = g.order();
    Mask negw = 0;
    for (Mask r = w; r; r &= r - 1) negw |= Mask(1) << g.neg(static_cast<std::size_t>(std::countr_zero(r)));
    cand_.resize(n);
    reach_.resize(n);
    for (std::size_t x = 0; x < n; ++x) {
      cand_[x] = g.shift(negw, x) & u_;
      reach_[x] = g.shift(w, x) & u_;
    }
    count_.assign(n, 0);
  }

  std::vector<Mask> run() {
    recurse(0, 0, 0);
    std::sort(found_.begin(), found_.end());
    return found_;
  }

 private:
  void place(std::size_t c, int d) {
    for (Mask r = reach_[c]; r; r &= r - 1) count_[static_cast<std::size_t>(std::countr_zero(r))] += d;
  }

  bool all_private(Mask chosen) const {
    for (Mask r = chosen; r; r &= r - 1) {
      bool priv = false;
      for (Mask s = reach_[static_cast<std::size_t>(std::countr_zero(r))]; s && !priv; s &= s - 1)
        priv = count_[static_cast<std::size_t>(std::countr_zero(s))] == 1;
      if (!priv) return false;
    }
    return true;
  }

  void recurse(Mask chosen, Mask covered, Mask excluded) {
    Mask open = u_ & ~covered;
    if (!open) {
      found_.push_back(chosen);
      return;
    }
    for (Mask r = open; r; r &= r - 1)
      if (!(cand_[static_cast<std::size_t>(std::countr_zero(r))] & ~excluded)) return;
    std::size_t x = static_cast<std::size_t>(std::countr_zero(open));
    Mask options = cand_[x] & ~excluded;
    Mask tried = 0;
    for (Mask r = options; r; r &= r - 1) {
      std::size_t c = static_cast<std::size_t>(std::countr_zero(r));
      place(c, 1);
      Mask next = chosen | Mask(1) << c;
      if (all_private(next)) recurse(next, covered | reach_[c], excluded | tried);
      place(c, -1);
      tried |= Mask(1) << c;
    }
  }

  const FiniteGroupTable& g_;
  Mask w_, u_;
  std::vector<Mask> cand_, reach_;
  std::vector<int> count_;
  std::vector<Mask> found_;
};

}  // namespace

std::vector<Mask> minimal_complements(const FiniteGroupTable& g, Mask w, Mask universe) {
  if (w == 0) throw Error("W must be nonempty");
  if (universe == 0) universe = g.full();
  return TransversalSearch(g, w, universe).run();
}

std::vector<Mask> minimal_complements_brute(const FiniteGroupTable& g, Mask w) {
  if (g.order() > 16) throw Error("brute-force enumeration is limited to order 16");
  std::vector<Mask> out;
  for_each_complement(g, w, [&](Mask c) {
    if (g.is_minimal_complement(w, c)) out.push_back(c);
  });
  return out;
}

Mask greedy_minimal_complement(const FiniteGroupTable& g, Mask w, Mask universe) {
  if (universe == 0) universe = g.full();
  Mask c = universe;
  if (!g.is_complement(w, c, universe)) throw Error("W does not cover the universe");
  for (std::size_t i = 0; i < g.order(); ++i) {
    Mask bit = Mask(1) << i;
    if ((c & bit) && g.is_complement(w, c & ~bit, universe)) c &= ~bit;
  }
  return c;
}

Json Thm24Report::to_json() const {
  return Json{{"exists_in_h", exists_in_h},
              {"exists_in_g", exists_in_g},
              {"lifts_minimal", lifts_minimal},
              {"restrictions_minimal", restrictions_minimal},
              {"lifts_checked", lifts_checked},
              {"restrictions_checked", restrictions_checked},
              {"ok", ok()},
              {"detail", detail}};
}

Thm24Report thm24_check(const FiniteGroupTable& g, Mask h, Mask w, std::size_t cap) {
  if (!g.is_subgroup(h)) throw Error("H = " + g.format(h) + " is not a subgroup");
  if (w == 0 || (w & ~h)) throw Error("W must be a nonempty subset of H");
  Thm24Report r;
  Mask mh = greedy_minimal_complement(g, w, h);
  r.exists_in_h = g.is_minimal_complement(w, mh, h);
  Mask mg = greedy_minimal_complement(g, w);
  r.exists_in_g = g.is_minimal_complement(w, mg);

  auto reps = g.coset_representatives(h);
  auto in_h = minimal_complements(g, w, h);
  for (std::size_t i = 0; i < in_h.size() && i < cap; ++i) {
    Mask lift = 0;
    for (std::size_t rep : reps) lift |= g.shift(in_h[i], rep);
    ++r.lifts_checked;
    if (!g.is_minimal_complement(w, lift)) {
      r.lifts_minimal = false;
      r.detail = "lift of " + g.format(in_h[i]) + " is not minimal";
      break;
    }
  }
  auto in_g = minimal_complements(g, w);
  for (std::size_t i = 0; i < in_g.size() && i < cap && r.restrictions_minimal; ++i) {
    for (std::size_t rep : reps) {
      Mask slice = g.shift(in_g[i] & g.shift(h, rep), g.neg(rep));
      ++r.restrictions_checked;
      if (!g.is_minimal_complement(w, slice, h)) {
        r.restrictions_minimal = false;
        r.detail = "slice of " + g.format(in_g[i]) + " at coset " + to_string(g.element(rep).tors()) + " is not minimal in H";
        break;
      }
    }
  }
  return r;
}

std::vector<GroupSpec> small_groups(std::size_t max_order) {
  std::vector<GroupSpec> out;
  for (std::size_t n = 2; n <= max_order; ++n) out.push_back(GroupSpec::cyclic(static_cast<long>(n)));
  const std::vector<std::vector<long>> extra{{2, 2}, {2, 4}, {2, 2, 2}, {3, 3}, {2, 6}};
  for (const auto& t : extra) {
    GroupSpec s;
    for (long x : t) s.torsion.emplace_back(x);
    if (s.order() <= Int(static_cast<long>(max_order))) out.push_back(s);
  }
  return out;
}

}  // namespace addcomp
