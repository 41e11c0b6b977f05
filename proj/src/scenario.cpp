#include <addcomp/scenario.hpp>

#include <addcomp/constructions.hpp>
#include <addcomp/oracle.hpp>
#include <addcomp/render.hpp>

#include <filesystem>
#include <fstream>
#include <map>

namespace addcomp {

ModerationBound parse_bound(const Json& j) {
  if (!j.is_object()) throw SchemaError("bound must be an object");
  if (j.contains("catalog")) {
    auto e = catalog_entry(j.at("catalog").get<std::string>());
    if (!e.bound) throw SchemaError("catalog entry '" + e.id + "' has no moderation bound");
    return *e.bound;
  }
  if (j.contains("analytic")) {
    const Json& a = j.at("analytic");
    auto b = analytic_bound(parse_function(a.at("u")), parse_function(a.at("v")));
    if (!b) throw SchemaError("the pair has no analytic bound");
    return *b;
  }
  if (j.contains("ball")) return ball_moderation(parse_function(j.at("ball"))).bound;
  if (j.contains("poly")) return poly_moderation(parse_function(j.at("poly"))).bound;
  throw SchemaError("unknown bound descriptor " + j.dump());
}

SearchRadius parse_radius(const Json& j) {
  if (!j.is_object()) throw SchemaError("radius must be an object");
  long hw = j.value("half_width", 8L);
  std::string kind = j.value("kind", std::string("heuristic"));
  if (kind == "heuristic") return SearchRadius::heuristic(hw);
  if (kind != "certified") throw SchemaError("radius kind must be certified or heuristic");
  if (!j.contains("bound")) throw SchemaError("certified radius needs a bound");
  return SearchRadius::certified(parse_bound(j.at("bound")), hw);
}

namespace {

int worse(int a, int b) {
  // Failure outranks unverified.
  if (a == kExitFailed || b == kExitFailed) return kExitFailed;
  if (a == kExitUnverified || b == kExitUnverified) return kExitUnverified;
  return kExitOk;
}

int status_code(CoverStatus s) {
  switch (s) {
    case CoverStatus::Covered: return kExitOk;
    case CoverStatus::NotCovered: return kExitFailed;
    case CoverStatus::Unverified: return kExitUnverified;
  }
  return kExitUnverified;
}

struct Context {
  std::map<std::string, SymbolicSet> sets;
  std::optional<Window> window;
  std::optional<SearchRadius> radius;
  std::string base_dir;

  SymbolicSet set(const Json& ref) const {
    if (ref.is_string()) {
      auto it = sets.find(ref.get<std::string>());
      if (it == sets.end()) throw SchemaError("unknown set reference '" + ref.get<std::string>() + "'");
      return it->second;
    }
    return parse_set(ref);
  }
  Window window_of(const Json& check, const char* key = "window") const {
    if (check.contains(key)) return parse_window_json(check.at(key));
    if (!window) throw SchemaError(std::string("check needs a '") + key + "'");
    return *window;
  }
  SearchRadius radius_of(const Json& check) const {
    if (check.contains("radius")) return parse_radius(check.at("radius"));
    return radius.value_or(SearchRadius::heuristic(8));
  }
};

std::pair<Json, int> run_complement(const Context& ctx, const Json& check) {
  auto w = ctx.set(check.at("w")), c = ctx.set(check.at("c"));
  auto cert = is_complement_on_window(w, c, ctx.window_of(check), ctx.radius_of(check));
  Json j = cert.to_json();
  if (!check.value("witnesses", false)) j.erase("witnesses");
  int code = status_code(cert.status);
  if (check.contains("expect")) {
    bool ok = to_string(cert.status) == check.at("expect").get<std::string>();
    j["expected"] = check.at("expect");
    code = ok ? kExitOk : kExitFailed;
  }
  return {j, code};
}

std::pair<Json, int> run_minimality(const Context& ctx, const Json& check) {
  auto w = ctx.set(check.at("w")), c = ctx.set(check.at("c"));
  EngineOptions opts;
  if (check.contains("witness_bound")) opts.witness_bound = parse_int_json(check.at("witness_bound"));
  auto cert = minimality_witnesses(w, c, ctx.window_of(check, "base_window"), ctx.radius_of(check), opts);
  return {cert.to_json(), cert.all_found ? kExitOk : kExitUnverified};
}

std::pair<Json, int> run_moderation(const Json& check) {
  IntFunction u = parse_function(check.at("u"));
  IntFunction v;
  std::optional<ModerationBound> claimed;
  const Json& vj = check.at("v");
  if (vj.is_string()) {
    Moderation m = vj == "ball" ? ball_moderation(u) : vj == "poly" ? poly_moderation(u) : throw SchemaError("v must be ball, poly or a function");
    v = m.v;
    claimed = m.bound;
  } else {
    v = parse_function(vj);
  }
  if (check.contains("claimed")) {
    const Json& cl = check.at("claimed");
    if (cl == "analytic") {
      claimed = analytic_bound(u, v);
      if (!claimed) throw SchemaError("the pair has no analytic bound");
    } else {
      claimed = parse_bound(cl);
    }
  }
  auto rep = check_moderation(u, v, parse_window_json(check.at("x0_window")), parse_window_json(check.at("probe_window")),
                              claimed);
  Json j = rep.to_json();
  bool expect_unbounded = check.value("expect_unbounded", false);
  int code = (rep.violations == 0 && rep.unbounded == expect_unbounded) ? kExitOk : kExitFailed;
  return {j, code};
}

std::pair<Json, int> run_shrink(const Context& ctx, const Json& check) {
  auto w = ctx.set(check.at("w")), c = ctx.set(check.at("c"));
  std::vector<GroupElement> remove;
  if (check.contains("remove"))
    for (const auto& e : check.at("remove")) remove.push_back(parse_element_json(e, c.spec()));
  auto rep = shrink_complement_demo(w, c, ctx.window_of(check), check.value("rounds", std::size_t{1}), remove);
  return {rep.to_json(), rep.coverage_persisted == check.value("expect_persist", true) ? kExitOk : kExitFailed};
}

std::pair<Json, int> run_oracle(const Json& check) {
  FiniteGroupTable g(parse_spec_json(check.at("group")));
  std::vector<GroupElement> we;
  for (const auto& e : check.at("w")) we.push_back(parse_element_json(e, g.spec()));
  Mask w = g.mask_of(we);
  if (w == 0) throw SchemaError("oracle W must be nonempty");
  Json j{{"group", g.spec().to_string()}, {"w", g.format(w)}};
  int code = kExitOk;
  auto mins = minimal_complements(g, w);
  j["minimal_count"] = mins.size();
  if (check.value("list_minimal", false)) {
    Json l = Json::array();
    for (Mask m : mins) l.push_back(g.format(m));
    j["minimal"] = l;
  }
  if (mins.empty()) code = kExitFailed;
  if (check.contains("h")) {
    std::vector<GroupElement> gens;
    for (const auto& e : check.at("h")) gens.push_back(parse_element_json(e, g.spec()));
    Mask h = 1;
    for (const auto& e : gens) h |= Mask(1) << g.index(e);
    for (Mask prev = 0; prev != h;) {
      prev = h;
      h |= g.sumset(h, h);
    }
    auto rep = thm24_check(g, h, w);
    j["thm24"] = rep.to_json();
    if (!rep.ok()) code = kExitFailed;
  }
  return {j, code};
}

Json run_render(const Context& ctx, const Json& r) {
  std::vector<RenderLayer> layers;
  for (const auto& name : r.at("layers")) layers.push_back({name.get<std::string>(), ctx.set(name)});
  Window win = ctx.window_of(r);
  std::string format = r.value("format", std::string("svg"));
  std::string text = format == "svg" ? render_svg(layers, win) : format == "ascii" ? render_ascii(layers, win)
                                                                                    : throw SchemaError("unknown render format " + format);
  Json j{{"format", format}, {"window", win.to_string()}};
  if (r.contains("path")) {
    std::filesystem::path p = r.at("path").get<std::string>();
    if (p.is_relative()) p = std::filesystem::path(ctx.base_dir) / p;
    std::ofstream out(p, std::ios::binary);
    if (!out) throw Error("cannot write " + p.string());
    out << text;
    j["path"] = r.at("path");
  } else {
    j["output"] = text;
  }
  return j;
}

}  // namespace

ScenarioOutcome run_scenario(const Json& doc, const std::string& base_dir) {
  if (!doc.is_object() || doc.value("schema", std::string()) != kScenarioSchema)
    throw SchemaError(std::string("scenario must declare \"schema\": \"") + kScenarioSchema + "\"");
  Context ctx;
  ctx.base_dir = base_dir;
  try {
    if (doc.contains("sets"))
      for (const auto& [name, s] : doc.at("sets").items()) ctx.sets.emplace(name, parse_set(s));
    if (doc.contains("window")) ctx.window = parse_window_json(doc.at("window"));
    if (doc.contains("radius")) ctx.radius = parse_radius(doc.at("radius"));
    if (doc.contains("group")) {
      GroupSpec g = parse_spec_json(doc.at("group"));
      for (const auto& [name, s] : ctx.sets)
        if (!(s.spec() == g)) throw SchemaError("set '" + name + "' is not in " + g.to_string());
    }
  } catch (const nlohmann::json::exception& e) {
    throw SchemaError(e.what());
  }

  ScenarioOutcome out;
  out.report = Json{{"schema", kScenarioSchema}, {"name", doc.value("name", std::string())}};
  Json results = Json::array();
  for (const auto& check : doc.value("checks", Json::array())) {
    std::pair<Json, int> r;
    std::string type;
    try {
      type = check.at("type").get<std::string>();
      if (type == "complement") r = run_complement(ctx, check);
      else if (type == "minimality") r = run_minimality(ctx, check);
      else if (type == "moderation") r = run_moderation(check);
      else if (type == "shrink") r = run_shrink(ctx, check);
      else if (type == "oracle") r = run_oracle(check);
      else throw SchemaError("unknown check type '" + type + "'");
    } catch (const nlohmann::json::exception& e) {
      throw SchemaError(e.what());
    }
    r.first["type"] = type;
    r.first["passed"] = r.second == kExitOk;
    results.push_back(r.first);
    out.exit_code = worse(out.exit_code, r.second);
  }
  out.report["checks"] = results;
  if (doc.contains("render")) {
    Json renders = Json::array();
    try {
      for (const auto& r : doc.at("render")) renders.push_back(run_render(ctx, r));
    } catch (const nlohmann::json::exception& e) {
      throw SchemaError(e.what());
    }
    out.report["render"] = renders;
  }
  out.report["exit_code"] = out.exit_code;
  return out;
}

ScenarioOutcome run_scenario_file(const std::string& path) {
  Json doc = read_json_file(path);
  std::string dir = std::filesystem::path(path).parent_path().string();
  return run_scenario(doc, dir.empty() ? "." : dir);
}

}  // namespace addcomp
