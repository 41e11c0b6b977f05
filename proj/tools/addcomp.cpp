#include <addcomp/constructions.hpp>
#include <addcomp/json_io.hpp>
#include <addcomp/moderation.hpp>
#include <addcomp/oracle.hpp>
#include <addcomp/render.hpp>
#include <addcomp/scenario.hpp>
#include <addcomp/sumset.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace addcomp;

namespace {

SymbolicSet load_set(const std::string& arg) { return parse_set(resolve_set_argument(arg)); }

bool is_catalog_id(const std::string& arg) {
  const auto& ids = catalog_ids();
  return std::find(ids.begin(), ids.end(), arg) != ids.end();
}

bool has_catalog_bound(const std::string& arg) { return is_catalog_id(arg) && catalog_entry(arg).bound.has_value(); }

// "certified" uses --bound, or the catalog bound of W; a number is a heuristic half width.
SearchRadius make_radius(const std::string& radius, const std::string& bound, const std::string& w_arg, long half_width) {
  if (radius == "certified") {
    Json b;
    if (!bound.empty()) b = bound[0] == '{' ? Json::parse(bound) : Json{{"catalog", bound}};
    else if (has_catalog_bound(w_arg)) b = Json{{"catalog", w_arg}};
    else throw SchemaError("a certified radius needs --bound");
    return SearchRadius::certified(parse_bound(b), half_width);
  }
  if (!radius.empty()) {
    try {
      return SearchRadius::heuristic(std::stol(radius));
    } catch (const std::exception&) {
      throw SchemaError("--radius must be 'certified' or an integer");
    }
  }
  return SearchRadius::heuristic(half_width);
}

// "0,0;1,0" -> elements of g.
std::vector<GroupElement> parse_element_list(const std::string& text, const GroupSpec& g) {
  std::vector<GroupElement> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ';')) {
    if (item.find_first_not_of(" ") == std::string::npos) continue;
    Point p;
    std::stringstream is(item);
    std::string coord;
    while (std::getline(is, coord, ',')) p.push_back(parse_int(coord));
    if (p.size() != g.dim()) throw SchemaError("element '" + item + "' does not fit " + g.to_string());
    out.push_back(GroupElement::from_coords(g, p));
  }
  return out;
}

void emit(const Json& j, bool json, const std::string& text) {
  if (json) std::cout << j.dump(2) << "\n";
  else std::cout << text;
}

int status_exit(CoverStatus s) {
  return s == CoverStatus::Covered ? kExitOk : s == CoverStatus::NotCovered ? kExitFailed : kExitUnverified;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Minimal additive complements in finitely generated abelian groups"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "Machine-readable JSON on stdout");
  int code = kExitOk;

  // check-complement
  std::string w_arg, c_arg, window_arg, radius_arg, bound_arg;
  long half_width = 8;
  unsigned threads = 1;
  auto* cc = app.add_subcommand("check-complement", "Verify W + C covers a window");
  cc->add_option("--w", w_arg, "Set W: JSON file, inline JSON or catalog id")->required();
  cc->add_option("--c", c_arg, "Set C")->required();
  cc->add_option("--window", window_arg, "Target window, e.g. -10..10,-10..10")->required();
  cc->add_option("--radius", radius_arg, "'certified' or a heuristic half width");
  cc->add_option("--bound", bound_arg, "Moderation bound: catalog id or JSON descriptor");
  cc->add_option("--half-width", half_width, "Search half width");
  cc->add_option("--threads", threads, "Worker threads");
  cc->add_flag("--json", json);
  cc->callback([&] {
    auto w = load_set(w_arg), c = load_set(c_arg);
    EngineOptions opts;
    opts.threads = threads;
    auto cert = is_complement_on_window(w, c, Window::parse(window_arg), make_radius(radius_arg, bound_arg, w_arg, half_width),
                                        opts);
    std::ostringstream text;
    text << to_string(cert.status) << " on " << cert.window.to_string() << " (" << cert.points << " points";
    if (cert.unverified) text << ", " << cert.unverified << " unverified";
    text << ")";
    if (cert.failure) text << " first at " << cert.failure->to_string() << ": " << cert.reason;
    text << "\n";
    Json j = cert.to_json();
    j.erase("witnesses");
    emit(j, json, text.str());
    code = status_exit(cert.status);
  });

  // check-minimal
  std::string base_window_arg;
  std::string witness_bound_arg;
  auto* cm = app.add_subcommand("check-minimal", "Search minimality witnesses for elements of C");
  cm->add_option("--w", w_arg)->required();
  cm->add_option("--c", c_arg)->required();
  cm->add_option("--base-window", base_window_arg, "Elements of C to test (graph domain window for graphs)")->required();
  cm->add_option("--radius", radius_arg);
  cm->add_option("--bound", bound_arg);
  cm->add_option("--half-width", half_width);
  cm->add_option("--witness-bound", witness_bound_arg, "Maximal search extent");
  cm->add_flag("--json", json);
  cm->callback([&] {
    auto w = load_set(w_arg), c = load_set(c_arg);
    EngineOptions opts;
    if (!witness_bound_arg.empty()) opts.witness_bound = parse_int(witness_bound_arg);
    std::string radius = radius_arg.empty() && (!bound_arg.empty() || has_catalog_bound(w_arg)) ? "certified" : radius_arg;
    auto cert = minimality_witnesses(w, c, Window::parse(base_window_arg), make_radius(radius, bound_arg, w_arg, half_width), opts);
    std::ostringstream text;
    for (const auto& e : cert.entries)
      text << e.c.to_string() << " -> " << (e.witness ? e.witness->to_string() : "none") << (e.note.empty() ? "" : "  " + e.note)
           << "\n";
    text << (cert.all_found ? "all witnesses found\n" : "some witnesses missing\n");
    emit(cert.to_json(), json, text.str());
    code = cert.all_found ? kExitOk : kExitUnverified;
  });

  // moderation
  std::string u_arg, v_arg, x0_arg, probe_arg, claimed_arg;
  bool expect_unbounded = false;
  auto* mo = app.add_subcommand("moderation", "Check u(x) + v(x0 - x) bounds on windows");
  mo->add_option("--u", u_arg, "Function JSON (inline or file)")->required();
  mo->add_option("--v", v_arg, "Function JSON, or 'ball' / 'poly' to construct one")->required();
  mo->add_option("--x0-window", x0_arg)->required();
  mo->add_option("--probe-window", probe_arg)->required();
  mo->add_option("--claimed", claimed_arg, "'analytic' or a bound descriptor");
  mo->add_flag("--expect-unbounded", expect_unbounded);
  mo->add_flag("--json", json);
  mo->callback([&] {
    auto load = [](const std::string& s) { return s[0] == '{' ? Json::parse(s) : read_json_file(s[0] == '@' ? s.substr(1) : s); };
    Json check{{"u", load(u_arg)}, {"x0_window", x0_arg}, {"probe_window", probe_arg}, {"type", "moderation"},
               {"expect_unbounded", expect_unbounded}};
    check["v"] = (v_arg == "ball" || v_arg == "poly") ? Json(v_arg) : load(v_arg);
    if (!claimed_arg.empty()) check["claimed"] = claimed_arg[0] == '{' ? Json::parse(claimed_arg) : Json(claimed_arg);
    Json doc{{"schema", kScenarioSchema}, {"checks", Json::array({check})}};
    auto out = run_scenario(doc);
    const Json& r = out.report["checks"][0];
    std::ostringstream text;
    text << "violations: " << r["violations"] << ", unbounded: " << r["unbounded"] << "\n";
    emit(r, json, text.str());
    code = out.exit_code;
  });

  // build
  std::string recipe, input_arg;
  auto* bu = app.add_subcommand("build", "Build a minimal complement from a recipe");
  bu->add_option("--recipe", recipe, "graph | coset-lift | thm511")->required()->check(CLI::IsMember({"graph", "coset-lift", "thm511"}));
  bu->add_option("--input", input_arg, "Recipe inputs (JSON file or inline)")->required();
  bu->add_flag("--json", json);
  bu->callback([&] {
    Json in = input_arg[0] == '{' ? Json::parse(input_arg) : read_json_file(input_arg);
    Json out;
    try {
      if (recipe == "graph") {
        std::optional<UnimodularBasis> basis;
        if (in.contains("basis")) basis = parse_basis_json(in.at("basis"));
        std::optional<ModerationBound> bound;
        if (in.contains("bound")) bound = parse_bound(in.at("bound"));
        out = graph_min_complement(parse_set(in.at("base")), parse_set(in.at("m")), parse_function(in.at("v")), basis, bound)
                  .to_json();
      } else if (recipe == "coset-lift") {
        SymbolicSet m = parse_set(in.at("m"));
        Subgroup h = parse_subgroup_json(in.at("subgroup"));
        std::vector<GroupElement> reps;
        for (const auto& r : in.at("reps")) reps.push_back(parse_element_json(r, m.spec()));
        MinCompRecipe r{RecipeKind::CosetLift, in, coset_lift(m, h, reps), std::nullopt};
        out = r.to_json();
      } else {
        IntFunction u = parse_function(in.at("u"));
        std::optional<UnimodularBasis> basis;
        if (in.contains("basis")) basis = parse_basis_json(in.at("basis"));
        std::vector<Point> cols;
        for (const auto& c : in.at("subgroup")) cols.push_back(parse_point_json(c));
        Moderation mod{parse_function(in.at("v")), parse_bound(in.at("bound"))};
        auto r = thm511_max_set(parse_set(in.at("base")), u, Subgroup::lattice(u.outdim(), cols), parse_point_json(in.at("g2")),
                                parse_set(in.at("m")), mod, basis);
        out = r.complement.to_json();
        out["x"] = r.x.to_json();
        out["g2_normalized"] = r.g2_normalized;
      }
    } catch (const nlohmann::json::exception& e) {
      throw SchemaError(e.what());
    }
    std::cout << out.dump(2) << "\n";
  });

  // catalog
  std::string id_arg;
  auto* ca = app.add_subcommand("catalog", "List or show named sets");
  ca->add_option("--id", id_arg, "Catalog id");
  ca->add_flag("--json", json);
  ca->callback([&] {
    if (id_arg.empty()) {
      Json ids = Json::array();
      std::ostringstream text;
      for (const auto& id : catalog_ids()) {
        auto e = catalog_entry(id);
        ids.push_back(Json{{"id", id}, {"summary", e.summary}});
        text << id << "  " << e.summary << "\n";
      }
      emit(ids, json, text.str());
      return;
    }
    auto e = catalog_entry(id_arg);
    Json j{{"id", e.id}, {"summary", e.summary}, {"set", e.set.to_json()}, {"window", e.window}};
    if (!e.complement.empty()) j["complement"] = e.complement;
    if (e.bound) j["bound"] = e.bound->description;
    emit(j, json, e.id + ": " + e.summary + "\n" + e.set.to_json().dump(2) + "\n");
  });

  // oracle
  std::string group_arg, ow_arg, oh_arg;
  bool list_minimal = false;
  auto* orc = app.add_subcommand("oracle", "Exhaustive minimal complements in a finite group");
  orc->add_option("--group", group_arg, "e.g. Z4xZ2")->required();
  orc->add_option("--w", ow_arg, "Elements as '0,0;1,0'")->required();
  orc->add_option("--subgroup", oh_arg, "Generators of a subgroup H containing W, as '1,0;0,1' (runs the subgroup check)");
  orc->add_flag("--list-minimal", list_minimal);
  orc->add_flag("--json", json);
  orc->callback([&] {
    GroupSpec g = GroupSpec::parse(group_arg);
    Json check{{"type", "oracle"}, {"group", group_arg}, {"list_minimal", list_minimal}};
    Json w = Json::array();
    for (const auto& e : parse_element_list(ow_arg, g)) w.push_back(point_to_json(e.coords()));
    check["w"] = w;
    if (!oh_arg.empty()) {
      Json h = Json::array();
      for (const auto& e : parse_element_list(oh_arg, g)) h.push_back(point_to_json(e.coords()));
      check["h"] = h;
    }
    auto out = run_scenario(Json{{"schema", kScenarioSchema}, {"checks", Json::array({check})}});
    const Json& r = out.report["checks"][0];
    std::ostringstream text;
    text << r["minimal_count"] << " minimal complements of " << r["w"].get<std::string>() << " in " << g.to_string() << "\n";
    if (r.contains("minimal"))
      for (const auto& m : r["minimal"]) text << "  " << m.get<std::string>() << "\n";
    if (r.contains("thm24")) text << "subgroup check: " << (r["thm24"]["ok"].get<bool>() ? "ok" : "FAILED") << "\n";
    emit(r, json, text.str());
    code = out.exit_code;
  });

  // render
  std::vector<std::string> layer_args;
  std::string format = "ascii", out_path, slice_arg;
  auto* re = app.add_subcommand("render", "Draw sets on a 2-D window");
  re->add_option("--set", layer_args, "name=SET or SET; repeatable, later layers on top")->required();
  re->add_option("--window", window_arg)->required();
  re->add_option("--format", format)->check(CLI::IsMember({"ascii", "svg"}));
  re->add_option("--out", out_path, "Output file (default stdout)");
  re->add_option("--slice", slice_arg, "For rank > 2: 'i,j;base' with base the full coordinate vector");
  re->callback([&] {
    std::vector<RenderLayer> layers;
    for (const auto& a : layer_args) {
      auto eq = a.find('=');
      bool named = eq != std::string::npos && a[0] != '{';
      std::string name = named ? a.substr(0, eq) : a;
      layers.push_back({name, load_set(named ? a.substr(eq + 1) : a)});
    }
    std::optional<RenderSlice> slice;
    if (!slice_arg.empty()) {
      auto semi = slice_arg.find(';');
      if (semi == std::string::npos) throw SchemaError("--slice must look like 'i,j;base'");
      RenderSlice s;
      std::string axes = slice_arg.substr(0, semi);
      auto comma = axes.find(',');
      if (comma == std::string::npos) throw SchemaError("--slice axes must be 'i,j'");
      s.x_axis = std::stoul(axes.substr(0, comma));
      s.y_axis = std::stoul(axes.substr(comma + 1));
      std::stringstream ss(slice_arg.substr(semi + 1));
      std::string c;
      while (std::getline(ss, c, ',')) s.base.push_back(parse_int(c));
      slice = s;
    }
    Window win = Window::parse(window_arg);
    std::string text = format == "svg" ? render_svg(layers, win, slice) : render_ascii(layers, win, slice);
    if (out_path.empty()) {
      std::cout << text;
    } else {
      std::ofstream out(out_path, std::ios::binary);
      if (!out) throw Error("cannot write " + out_path);
      out << text;
    }
  });

  // run
  std::string scenario_path;
  auto* ru = app.add_subcommand("run", "Run a scenario file");
  ru->add_option("scenario", scenario_path, "Scenario JSON")->required();
  ru->add_flag("--json", json);
  ru->callback([&] {
    auto out = run_scenario_file(scenario_path);
    std::ostringstream text;
    for (const auto& c : out.report["checks"]) {
      text << c["type"].get<std::string>() << ": " << (c["passed"].get<bool>() ? "passed" : "not passed");
      if (c.contains("status")) text << " (" << c["status"].get<std::string>() << ")";
      text << "\n";
    }
    emit(out.report, json, text.str());
    code = out.exit_code;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kExitSchema;
  } catch (const SchemaError& e) {
    std::cerr << "schema error: " << e.what() << "\n";
    return kExitSchema;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "schema error: " << e.what() << "\n";
    return kExitSchema;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return code;
}
