#include <addcomp/sumset.hpp>

#include <algorithm>
#include <exception>
#include <set>
#include <thread>

namespace addcomp {

SearchRadius SearchRadius::heuristic(long half_width) {
  SearchRadius r;
  r.kind = RadiusKind::Heuristic;
  r.half_width = half_width;
  r.justification = "user-supplied half width";
  return r;
}

SearchRadius SearchRadius::certified(ModerationBound bound, long half_width) {
  SearchRadius r;
  r.kind = RadiusKind::Certified;
  r.half_width = half_width;
  r.justification = "moderation bound: " + bound.description;
  r.bound = std::move(bound);
  return r;
}

Json SearchRadius::to_json() const {
  Json j{{"kind", kind == RadiusKind::Certified ? "certified" : "heuristic"},
         {"half_width", int_to_json(half_width)},
         {"justification", justification}};
  if (m0) j["m0"] = int_to_json(*m0);
  if (!candidates.empty()) {
    Json c = Json::array();
    for (const auto& p : candidates) c.push_back(point_to_json(p));
    j["candidates"] = c;
  }
  return j;
}

std::string to_string(CoverStatus s) {
  switch (s) {
    case CoverStatus::Covered: return "covered";
    case CoverStatus::NotCovered: return "not_covered";
    case CoverStatus::Unverified: return "unverified";
  }
  return "unverified";
}

Json CoverageCertificate::to_json() const {
  Json w = Json::array();
  for (const auto& [x, c] : witnesses) w.push_back(Json::array({element_to_json(x), element_to_json(c)}));
  Json j{{"window", window.to_string()}, {"status", to_string(status)}, {"points", points},
         {"unverified", unverified}, {"witnesses", w}};
  if (failure) j["at"] = element_to_json(*failure);
  if (!reason.empty()) j["reason"] = reason;
  return j;
}

Json MinimalityCertificate::to_json() const {
  Json e = Json::array();
  for (const auto& m : entries) {
    Json j{{"c", element_to_json(m.c)}};
    if (m.witness) j["witness"] = element_to_json(*m.witness);
    if (!m.note.empty()) j["note"] = m.note;
    e.push_back(j);
  }
  return Json{{"all_found", all_found}, {"radius", radius}, {"entries", e}};
}

namespace {

Point head(const Point& p, std::size_t k) { return Point(p.begin(), p.begin() + static_cast<long>(k)); }
Point tail(const Point& p, std::size_t k) { return Point(p.begin() + static_cast<long>(k), p.end()); }

Point concat(const Point& a, const Point& b) {
  Point r = a;
  r.insert(r.end(), b.begin(), b.end());
  return r;
}

Int linf(const Point& p) {
  Int m = 0;
  for (const auto& x : p) m = std::max(m, Int(abs(x)));
  return m;
}

void flatten(const SymbolicSet& s, std::vector<SymbolicSet>& out) {
  if (const auto* u = s.as<UnionSet>()) {
    for (const auto& p : u->parts()) flatten(p, out);
    return;
  }
  out.push_back(s);
}

std::vector<SymbolicSet> parts_of(const SymbolicSet& s) {
  std::vector<SymbolicSet> out;
  flatten(s, out);
  return out;
}

// Spike geometry of a part relative to the graph basis, if it has one.
struct SpikeView {
  const FiniteSet* base = nullptr;  // null when the base is not a finite list
  bool has_base = false;
  bool bounded = true;              // false for BaseOnly fills (no tail above the base)
  Side side = Side::Below;
  std::size_t k2 = 1;
};

std::optional<SpikeView> spike_view(const SymbolicSet& part, const UnimodularBasis& basis) {
  SpikeView v;
  if (const auto* s = part.as<SpikedSet>()) {
    if (!basis.is_identity()) return std::nullopt;
    v.base = s->base().as<FiniteSet>();
    v.has_base = true;
    v.bounded = s->fill() == Fill::MaxBound;
    return v;
  }
  if (const auto* s = part.as<BoundedSpikedSet>()) {
    if (!(s->basis() == basis)) return std::nullopt;
    v.base = s->base().as<FiniteSet>();
    v.has_base = true;
    v.side = s->side();
    v.k2 = s->k2();
    return v;
  }
  if (const auto* s = part.as<CosetGapSpikedSet>()) {
    if (!(s->basis() == basis)) return std::nullopt;
    v.base = s->base().as<FiniteSet>();
    v.has_base = true;
    v.k2 = s->k2();
    return v;
  }
  if (const auto* s = part.as<TruncatedColumnsSet>()) {
    if (!basis.is_identity()) return std::nullopt;
    v.side = s->side();
    return v;
  }
  return std::nullopt;
}

// Whether (x0, y) sits where no graph point outside the base columns can reach it.
bool past_threshold(const SymbolicSet& part, const GraphSet& g, const Point& y,
                    const std::optional<Int>& m0, std::string& why) {
  if (part.as<FiniteSet>()) return true;
  auto spike_ok = [&](const SpikeView& sv) {
    if (sv.has_base && !sv.base) {
      why = "spike base is not a finite list";
      return false;
    }
    if (!sv.bounded) return true;
    if (!m0) {
      why = "no moderation bound";
      return false;
    }
    Int h = sv.side == Side::Below ? y[0] : Int(-y[0]);
    bool ok = sv.k2 == 1 ? h >= *m0 : h > *m0;
    if (!ok) why = "point below the moderation bound";
    return ok;
  };
  if (const auto* cg = part.as<CosetGapSpikedSet>()) {
    auto sv = spike_view(part, g.basis());
    if (!sv) {
      why = "coset-gap part uses a different basis";
      return false;
    }
    if (cg->in_gap(y)) {
      why = "fibre point lies in the coset gap";
      return false;
    }
    if (!values_in(g.v(), cg->fibre_subgroup())) {
      why = "graph values not known to lie in the gap subgroup";
      return false;
    }
    return spike_ok(*sv);
  }
  if (auto sv = spike_view(part, g.basis())) return spike_ok(*sv);
  if (const auto* cp = part.as<ColumnProgressionsSet>()) {
    if (!g.basis().is_identity() || !cp->divisors()) {
      why = "progression part without declared divisors";
      return false;
    }
    const Point& d = *cp->divisors();
    std::vector<Point> diag;
    for (std::size_t j = 0; j < d.size(); ++j) {
      Point col(d.size(), Int(0));
      col[j] = d[j];
      diag.push_back(col);
    }
    if (!values_in(g.v(), Subgroup::lattice(d.size(), diag))) {
      why = "graph values not known to lie in the divisor lattice";
      return false;
    }
    for (std::size_t j = 0; j < d.size(); ++j)
      if (d[j] != 0 && mod_floor(y[j], d[j]) != 0) return true;
    why = "fibre point lies in the divisor lattice";
    return false;
  }
  why = "no certificate for a " + part.kind() + " part";
  return false;
}

PointCover cover_by_graph(const std::vector<SymbolicSet>& parts, const SymbolicSet& w, const GraphSet& g,
                          const GroupElement& x, const SearchRadius& radius, const std::optional<GroupElement>& removed) {
  const std::size_t k1 = g.k1();
  Point coords = g.basis().apply_inverse(x.free());
  Point x0 = head(coords, k1), y = tail(coords, k1);
  std::optional<Point> removed_m;
  if (removed) removed_m = head(g.basis().apply_inverse(removed->free()), k1);
  std::set<Point> tried;
  auto try_m = [&](const Point& m) -> std::optional<GroupElement> {
    if (removed_m && m == *removed_m) return std::nullopt;
    if (!tried.insert(m).second) return std::nullopt;
    if (!g.domain().contains(m)) return std::nullopt;
    GroupElement c(x.spec(), g.point_at(m));
    if (w.contains(x - c)) return c;
    return std::nullopt;
  };
  // Structural candidates: finite parts and finite spike bases.
  for (const auto& part : parts) {
    if (const auto* f = part.as<FiniteSet>()) {
      for (const auto& e : f->elements()) {
        GroupElement c = x - e;
        Point m = head(g.basis().apply_inverse(c.free()), k1);
        if (g.contains(c))
          if (auto hit = try_m(m)) return {CoverStatus::Covered, hit, "finite part"};
      }
      continue;
    }
    if (auto sv = spike_view(part, g.basis()); sv && sv->base)
      for (const auto& b : sv->base->elements())
        if (auto hit = try_m(x0 - b.free())) return {CoverStatus::Covered, hit, "base column"};
  }
  if (const auto* fd = g.domain().as<FiniteSet>()) {
    for (const auto& m : fd->elements())
      if (auto hit = try_m(m.free())) return {CoverStatus::Covered, hit, "finite domain"};
    return {CoverStatus::NotCovered, std::nullopt, "finite graph exhausted"};
  }
  for (const auto& m : radius.candidates)
    if (auto hit = try_m(m)) return {CoverStatus::Covered, hit, "certified candidate"};
  std::vector<std::pair<Int, Int>> box;
  for (const auto& t : x0) box.emplace_back(t - radius.half_width, t + radius.half_width);
  for (const auto& m : g.domain().enumerate(Window(box)))
    if (auto hit = try_m(m.free())) return {CoverStatus::Covered, hit, "search box"};

  if (!radius.is_certified()) return {CoverStatus::Unverified, std::nullopt, "heuristic radius exhausted"};
  std::optional<Int> m0 = radius.m0;
  if (!m0 && radius.bound) m0 = (*radius.bound)(x0);
  for (const auto& part : parts) {
    std::string why;
    if (!past_threshold(part, g, y, m0, why)) return {CoverStatus::Unverified, std::nullopt, why};
  }
  return {CoverStatus::NotCovered, std::nullopt, "certified: no graph point reaches this point"};
}

}  // namespace

PointCover cover_point(const SymbolicSet& w, const SymbolicSet& c, const GroupElement& x, const SearchRadius& radius,
                       const std::optional<GroupElement>& removed) {
  if (!(w.spec() == c.spec()) || !(x.spec() == w.spec())) throw Error("sets and point live in different groups");
  auto allowed = [&](const GroupElement& e) { return !removed || !(e == *removed); };
  if (const auto* fc = c.as<FiniteSet>()) {
    for (const auto& e : fc->elements())
      if (allowed(e) && w.contains(x - e)) return {CoverStatus::Covered, e, ""};
    return {CoverStatus::NotCovered, std::nullopt, "finite complement exhausted"};
  }
  if (const auto* fw = w.as<FiniteSet>()) {
    for (const auto& f : fw->elements()) {
      GroupElement e = x - f;
      if (allowed(e) && c.contains(e)) return {CoverStatus::Covered, e, ""};
    }
    return {CoverStatus::NotCovered, std::nullopt, "finite set exhausted"};
  }
  if (const auto* g = c.as<GraphSet>()) return cover_by_graph(parts_of(w), w, *g, x, radius, removed);

  // Generic: finite parts of W exactly, then a box of C around x.
  for (const auto& part : parts_of(w))
    if (const auto* f = part.as<FiniteSet>())
      for (const auto& e : f->elements()) {
        GroupElement cand = x - e;
        if (allowed(cand) && c.contains(cand)) return {CoverStatus::Covered, cand, "finite part"};
      }
  Window box = Window::cube(x.spec().rank, 0, 0).translated(x.free()).expanded(radius.half_width);
  for (const auto& e : c.enumerate(box))
    if (allowed(e) && w.contains(x - e)) return {CoverStatus::Covered, e, "search box"};
  if (x.spec().is_finite()) return {CoverStatus::NotCovered, std::nullopt, "finite group exhausted"};
  return {CoverStatus::Unverified, std::nullopt, "no witness within the search box"};
}

namespace {

std::vector<PointCover> cover_all(const SymbolicSet& w, const SymbolicSet& c, const std::vector<GroupElement>& pts,
                                  const SearchRadius& radius, unsigned threads) {
  std::vector<PointCover> out(pts.size());
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(pts.size())));
  if (threads <= 1) {
    for (std::size_t i = 0; i < pts.size(); ++i) out[i] = cover_point(w, c, pts[i], radius);
    return out;
  }
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(threads);
  for (unsigned t = 0; t < threads; ++t)
    pool.emplace_back([&, t] {
      try {
        for (std::size_t i = t; i < pts.size(); i += threads) out[i] = cover_point(w, c, pts[i], radius);
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
  for (auto& th : pool) th.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

std::vector<GroupElement> window_points(const GroupSpec& spec, const Window& target) {
  std::vector<GroupElement> pts;
  for_each_element(spec, target, [&](const GroupElement& g) { pts.push_back(g); });
  return pts;
}

}  // namespace

SumsetResult sumset_window(const SymbolicSet& a, const SymbolicSet& b, const Window& target, const SearchRadius& radius,
                           const EngineOptions& opts) {
  auto pts = window_points(a.spec(), target);
  auto res = cover_all(a, b, pts, radius, opts.threads);
  SumsetResult out;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (res[i].status == CoverStatus::Covered) out.points.push_back(pts[i]);
    if (res[i].status == CoverStatus::Unverified) out.complete = false;
  }
  return out;
}

CoverageCertificate is_complement_on_window(const SymbolicSet& w, const SymbolicSet& c, const Window& target,
                                            const SearchRadius& radius, const EngineOptions& opts) {
  auto pts = window_points(w.spec(), target);
  auto res = cover_all(w, c, pts, radius, opts.threads);
  CoverageCertificate cert;
  cert.window = target;
  cert.points = pts.size();
  std::optional<std::size_t> first_fail, first_unverified;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    switch (res[i].status) {
      case CoverStatus::Covered: cert.witnesses.emplace(pts[i], *res[i].c); break;
      case CoverStatus::NotCovered:
        if (!first_fail) first_fail = i;
        break;
      case CoverStatus::Unverified:
        ++cert.unverified;
        if (!first_unverified) first_unverified = i;
        break;
    }
  }
  if (first_fail) {
    cert.status = CoverStatus::NotCovered;
    cert.failure = pts[*first_fail];
    cert.reason = res[*first_fail].reason;
  } else if (first_unverified) {
    cert.status = CoverStatus::Unverified;
    cert.failure = pts[*first_unverified];
    cert.reason = res[*first_unverified].reason;
  }
  return cert;
}

SearchRadius certified_radius(const SymbolicSet& w, const SymbolicSet& c, const Point& x0, const ModerationBound& m0) {
  const auto* g = c.as<GraphSet>();
  if (!g) throw Error("certified radius needs a graph complement");
  SearchRadius r = SearchRadius::certified(m0);
  r.m0 = m0(x0);
  std::set<Point> cands;
  for (const auto& part : parts_of(w)) {
    auto sv = spike_view(part, g->basis());
    if (!sv || !sv->has_base) continue;
    if (!sv->base) {
      SearchRadius u = SearchRadius::heuristic(8);
      u.justification = "spike base is not a finite list; no finite candidate set";
      return u;
    }
    for (const auto& b : sv->base->elements()) {
      Point m = x0 - b.free();
      if (g->domain().contains(m)) cands.insert(m);
    }
  }
  r.candidates.assign(cands.begin(), cands.end());
  r.justification = "points (x0, y) with y >= " + r.m0->get_str() + " are reached only through base columns";
  return r;
}

// ---------------------------------------------------------------------------

namespace {

Int window_span(const Window& w) {
  Int s = 0;
  for (const auto& [lo, hi] : w.bounds()) s = std::max(s, Int(hi - lo));
  return s;
}

MinimalityEntry graph_witness(const std::vector<SymbolicSet>& parts, const SymbolicSet& w, const SymbolicSet& cset,
                              const GraphSet& g, const GroupElement& c, const SearchRadius& radius,
                              const Window& base_window, const EngineOptions& opts) {
  MinimalityEntry entry{c, std::nullopt, ""};
  const std::size_t k1 = g.k1(), k2 = g.k2();
  Point mc = head(g.basis().apply_inverse(c.free()), k1);

  std::vector<Point> base;
  std::optional<Side> side;
  Int modulus = 1;
  for (const auto& part : parts) {
    if (const auto* cg = part.as<CosetGapSpikedSet>())
      for (const auto& col : cg->fibre_subgroup().hnf_columns())
        for (const auto& x : col) modulus = std::max(modulus, Int(abs(x)));
    if (const auto* cp = part.as<ColumnProgressionsSet>(); cp && cp->divisors())
      for (const auto& d : *cp->divisors()) modulus = std::max(modulus, Int(abs(d)));
    auto sv = spike_view(part, g.basis());
    if (!sv) continue;
    if (sv->has_base && !sv->base) {
      entry.note = "spike base is not a finite list";
      return entry;
    }
    if (sv->base)
      for (const auto& b : sv->base->elements()) base.push_back(b.free());
    if (sv->bounded) {
      if (side && *side != sv->side) {
        entry.note = "spikes point in both directions";
        return entry;
      }
      side = sv->side;
    }
  }
  if (base.empty()) {
    entry.note = "no finite spike base";
    return entry;
  }
  if (!radius.is_certified() || !radius.bound) {
    entry.note = "minimality needs a certified radius";
    return entry;
  }
  std::sort(base.begin(), base.end(), [](const Point& a, const Point& b) {
    int c = cmp(linf(a), linf(b));
    return c != 0 ? c < 0 : lex_compare(a, b) < 0;
  });
  base.erase(std::unique(base.begin(), base.end()), base.end());

  for (const auto& b : base) {
    Point x0 = mc + b;
    bool lonely = true;
    for (const auto& b2 : base) {
      Point m = x0 - b2;
      if (m != mc && g.domain().contains(m)) lonely = false;
    }
    if (!lonely) continue;
    Int m0 = (*radius.bound)(x0);
    int dir = side.value_or(Side::Below) == Side::Below ? 1 : -1;
    Int start = dir * m0 + (k2 > 1 ? dir : 0);
    Int limit = opts.witness_bound ? *opts.witness_bound : std::max(Int(abs(m0) + window_span(base_window)), Int(64));
    SearchRadius local = radius;
    local.m0 = m0;
    std::vector<std::pair<Int, Int>> rest(k2 - 1, {Int(0), modulus - 1});
    Window rest_box(rest);
    for (Int j = 0; j <= limit; ++j) {
      Int y0 = start + dir * j;
      std::optional<GroupElement> found;
      rest_box.for_each([&](const Point& r) {
        if (found) return;
        Point y = concat(Point{y0}, r);
        GroupElement x(c.spec(), g.basis().apply(concat(x0, y)));
        if (!w.contains(x - c)) return;
        auto pc = cover_point(w, cset, x, local, c);
        if (pc.status == CoverStatus::NotCovered) found = x;
      });
      if (found) {
        entry.witness = found;
        entry.note = "column " + to_string(x0) + ", m0 = " + m0.get_str();
        return entry;
      }
    }
    entry.note = "no certified point found up to bound " + limit.get_str();
    return entry;
  }
  entry.note = "every failure column is shared with another graph point";
  return entry;
}

MinimalityEntry finite_witness(const SymbolicSet& w, const FiniteSet& fc, const GroupElement& c, const Window& base_window,
                               const EngineOptions& opts) {
  MinimalityEntry entry{c, std::nullopt, ""};
  const GroupSpec& spec = c.spec();
  auto essential = [&](const GroupElement& x) {
    if (!w.contains(x - c)) return false;
    for (const auto& e : fc.elements())
      if (!(e == c) && w.contains(x - e)) return false;
    return true;
  };
  if (spec.is_finite()) {
    std::optional<GroupElement> found;
    for_each_element(spec, Window(std::vector<std::pair<Int, Int>>{}), [&](const GroupElement& x) {
      if (!found && essential(x)) found = x;
    });
    entry.witness = found;
    if (!found) entry.note = "every group element stays covered";
    return entry;
  }
  Int limit = opts.witness_bound ? *opts.witness_bound : std::max(window_span(base_window), Int(64));
  // Keep the total number of probes manageable in higher rank.
  long cap = 1;
  while (cap < limit.get_si()) {
    double pts = 1;
    for (std::size_t i = 0; i < spec.rank; ++i) pts *= 2.0 * (cap + 1) + 1;
    if (pts > 250000) break;
    ++cap;
  }
  if (Int(cap) < limit) limit = cap;
  for (long r = 0; r <= limit.get_si(); ++r) {
    std::optional<GroupElement> found;
    Window shell = Window::cube(spec.rank, -r, r).translated(c.free());
    for_each_element(spec, shell, [&](const GroupElement& x) {
      if (found || linf(x.free() - c.free()) != r) return;
      if (essential(x)) found = x;
    });
    if (found) {
      entry.witness = found;
      return entry;
    }
  }
  entry.note = "no essential point within L-infinity distance " + limit.get_str();
  return entry;
}

// With W finite every candidate lies in c + W, and the other elements of C that could
// reach x lie in x - W.
MinimalityEntry finite_w_witness(const FiniteSet& fw, const SymbolicSet& cset, const GroupElement& c) {
  MinimalityEntry entry{c, std::nullopt, ""};
  for (const auto& a : fw.elements()) {
    GroupElement x = c + a;
    bool essential = true;
    for (const auto& b : fw.elements()) {
      GroupElement other = x - b;
      if (!(other == c) && cset.contains(other)) {
        essential = false;
        break;
      }
    }
    if (essential) {
      entry.witness = x;
      return entry;
    }
  }
  entry.note = "every point of c + W is reached by another element";
  return entry;
}

}  // namespace

MinimalityCertificate minimality_witnesses(const SymbolicSet& w, const SymbolicSet& c, const Window& base_window,
                                           const SearchRadius& radius, const EngineOptions& opts) {
  MinimalityCertificate cert;
  cert.radius = radius.is_certified() ? "certified" : "heuristic";
  // Graph complements are indexed by their domain; other sets by ambient coordinates.
  std::vector<GroupElement> elements;
  if (const auto* g = c.as<GraphSet>()) {
    for (const auto& m : g->domain().enumerate(base_window)) elements.emplace_back(c.spec(), g->point_at(m.free()));
  } else {
    elements = c.enumerate(base_window);
  }
  auto parts = parts_of(w);
  for (const auto& e : elements) {
    if (const auto* g = c.as<GraphSet>()) cert.entries.push_back(graph_witness(parts, w, c, *g, e, radius, base_window, opts));
    else if (const auto* f = c.as<FiniteSet>()) cert.entries.push_back(finite_witness(w, *f, e, base_window, opts));
    else if (const auto* fw = w.as<FiniteSet>()) cert.entries.push_back(finite_w_witness(*fw, c, e));
    else cert.entries.push_back({e, std::nullopt, "complement kind " + c.kind() + " not supported"});
  }
  cert.all_found = !cert.entries.empty() &&
                   std::all_of(cert.entries.begin(), cert.entries.end(), [](const MinimalityEntry& m) { return m.witness.has_value(); });
  return cert;
}

// ---------------------------------------------------------------------------

Json ShrinkReport::to_json() const {
  Json s = Json::array();
  for (const auto& st : steps) {
    Json r = Json::array();
    for (const auto& rep : st.replacements) {
      Json j{{"w", point_to_json(rep.w)}, {"n_w", int_to_json(rep.n_w)}};
      if (rep.c_w) j["c_w"] = point_to_json(*rep.c_w);
      r.push_back(j);
    }
    Json j{{"removed", element_to_json(st.removed)}, {"status", to_string(st.status)}, {"replacements", r}};
    if (st.failure) j["at"] = element_to_json(*st.failure);
    s.push_back(j);
  }
  Json rem = Json::array();
  for (const auto& e : remaining) rem.push_back(element_to_json(e));
  return Json{{"coverage_persisted", coverage_persisted}, {"steps", s}, {"remaining", rem}};
}

ShrinkReport shrink_complement_demo(const SymbolicSet& w, const SymbolicSet& c, const Window& target, std::size_t rounds,
                                    const std::vector<GroupElement>& to_remove) {
  const auto* fc = c.as<FiniteSet>();
  if (!fc) throw Error("shrink demo needs a finite complement");
  std::vector<GroupElement> current = fc->elements();
  const auto* tc = w.as<TruncatedColumnsSet>();
  ShrinkReport report;
  for (std::size_t round = 0; round < rounds; ++round) {
    GroupElement pick;
    if (round < to_remove.size()) {
      pick = to_remove[round];
      if (std::find(current.begin(), current.end(), pick) == current.end())
        throw Error("element " + pick.to_string() + " is not in the complement");
    } else if (current.size() > 2) {
      // Middle of the elements strictly between the extremes.
      pick = current[1 + (current.size() - 2) / 2];
    } else if (!current.empty()) {
      pick = current.back();
    } else {
      break;
    }
    current.erase(std::find(current.begin(), current.end(), pick));
    SymbolicSet reduced = sets::finite(c.spec(), current);
    auto cert = is_complement_on_window(w, reduced, target, SearchRadius::heuristic(0));
    ShrinkStep step;
    step.removed = pick;
    step.status = cert.status;
    step.failure = cert.failure;
    if (tc) {
      // Sample w with pick + w in the target; n_w steps out of W along the last axis.
      const std::size_t k = tc->u().arity();
      Point back(pick.free().size());
      for (std::size_t i = 0; i < back.size(); ++i) back[i] = -pick.free()[i];
      auto ws = w.enumerate(target.translated(back));
      for (std::size_t i = 0; i < ws.size() && step.replacements.size() < 3; i += std::max<std::size_t>(1, ws.size() / 3)) {
        const Point& wp = ws[i].free();
        Int h = tc->u().eval1(head(wp, k));
        Int n_w = tc->side() == Side::Below ? Int(h - wp[k]) : Int(wp[k] - h);
        Point shifted = pick.free() + wp;
        shifted[k] += tc->side() == Side::Below ? n_w : Int(-n_w);
        ShrinkStep::Replacement rep{wp, n_w, std::nullopt};
        for (const auto& e : current)
          if (w.contains(GroupElement(c.spec(), shifted - e.free()))) {
            rep.c_w = e.free();
            break;
          }
        step.replacements.push_back(rep);
      }
    }
    report.coverage_persisted = report.coverage_persisted && cert.status == CoverStatus::Covered;
    report.steps.push_back(std::move(step));
  }
  report.remaining = current;
  return report;
}

}  // namespace addcomp
