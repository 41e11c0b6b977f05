#include <addcomp/json_io.hpp>

#include <addcomp/constructions.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

namespace addcomp {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw SchemaError(std::string("missing field '") + key + "'");
  return j.at(key);
}

Rational parse_rational_json(const Json& j) {
  if (j.is_number_integer()) return Rational(parse_int_json(j));
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw SchemaError("expected a rational coefficient, got " + j.dump());
}

template <class C, class ParseCoef>
Poly<C> parse_poly_terms(const Json& terms, std::size_t arity, ParseCoef coef) {
  if (!terms.is_array()) throw SchemaError("polynomial terms must be an array");
  Poly<C> p(arity);
  for (const auto& t : terms) {
    if (!t.is_array() || t.size() != 2) throw SchemaError("polynomial term must be [exponents, coefficient]");
    auto e = t[0].get<Exponents>();
    if (e.size() != arity) throw SchemaError("exponent vector length does not match arity");
    p.add_term(e, coef(t[1]));
  }
  return p;
}

std::size_t arity_of_terms(const Json& terms) {
  if (terms.is_array() && !terms.empty() && terms[0].is_array() && terms[0].size() == 2 && terms[0][0].is_array())
    return terms[0][0].size();
  throw SchemaError("cannot infer polynomial arity; give \"arity\"");
}

IntPoly parse_int_poly(const Json& j) {
  const Json& terms = field(j, "poly");
  std::size_t n = j.contains("arity") ? j.at("arity").get<std::size_t>() : arity_of_terms(terms);
  return parse_poly_terms<Int>(terms, n, parse_int_json);
}

RatPoly parse_rat_poly(const Json& terms, std::size_t arity) {
  return parse_poly_terms<Rational>(terms, arity, parse_rational_json);
}

std::optional<UnimodularBasis> optional_basis(const Json& j) {
  if (!j.contains("basis")) return std::nullopt;
  return parse_basis_json(j.at("basis"));
}

SymbolicSet parse_set_inner(const Json& j);

IntFunction parse_function_inner(const Json& j) {
  if (!j.is_object()) throw SchemaError("function descriptor must be an object");
  if (j.contains("poly")) return fn::poly(parse_int_poly(j));
  if (j.contains("components")) {
    std::vector<IntFunction> parts;
    bool all_poly = true;
    for (const auto& c : j.at("components")) {
      parts.push_back(parse_function_inner(c));
      all_poly = all_poly && parts.back().as<PolynomialFn>() && parts.back().outdim() == 1;
    }
    if (all_poly) {
      std::vector<IntPoly> ps;
      for (const auto& p : parts) ps.push_back(p.as<PolynomialFn>()->polys().front());
      return fn::poly(std::move(ps));
    }
    return fn::stack(std::move(parts));
  }
  if (j.contains("ratfloor")) {
    const Json& r = j.at("ratfloor");
    std::size_t n = field(r, "arity").get<std::size_t>();
    std::map<Point, Int> poles;
    if (r.contains("poles"))
      for (const auto& p : r.at("poles")) poles[parse_point_json(p.at(0))] = parse_int_json(p.at(1));
    Rounding mode = r.contains("mode") ? parse_rounding(r.at("mode").get<std::string>()) : Rounding::Floor;
    RatPoly den = r.contains("den") ? parse_rat_poly(r.at("den"), n) : RatPoly::constant(n, Rational(1));
    return fn::rational_floor(parse_rat_poly(field(r, "num"), n), den, mode, poles);
  }
  if (j.contains("table")) {
    const Json& t = j.at("table");
    std::map<Point, Point> entries;
    for (const auto& e : field(t, "entries")) entries[parse_point_json(e.at(0))] = parse_point_json(e.at(1));
    std::optional<Point> fallback;
    if (t.contains("default")) fallback = parse_point_json(t.at("default"));
    return fn::table(field(t, "arity").get<std::size_t>(), t.value("outdim", std::size_t{1}), entries, fallback);
  }
  if (j.contains("abspow")) {
    const Json& a = j.at("abspow");
    std::vector<Int> bases;
    for (const auto& b : field(a, "bases")) bases.push_back(parse_int_json(b));
    return fn::abs_power(field(a, "arity").get<std::size_t>(), bases);
  }
  if (j.contains("surd")) {
    const Json& s = j.at("surd");
    Rounding mode = s.contains("mode") ? parse_rounding(s.at("mode").get<std::string>()) : Rounding::Floor;
    return fn::rotation_height(parse_rat_poly(field(s, "f"), 1), parse_int_json(field(s, "a")), parse_int_json(field(s, "b")),
                               mode);
  }
  if (j.contains("neg")) return fn::negated(parse_function_inner(j.at("neg")));
  if (j.contains("translated")) {
    const Json& t = j.at("translated");
    return fn::translated(parse_function_inner(field(t, "inner")), parse_point_json(field(t, "shift")));
  }
  if (j.contains("reduced")) {
    const Json& r = j.at("reduced");
    IntFunction inner = parse_function_inner(field(r, "inner"));
    const Json& h = field(r, "subgroup");
    Subgroup sub = h.is_array() ? Subgroup::lattice(inner.outdim(), [&] {
      std::vector<Point> cols;
      for (const auto& c : h) cols.push_back(parse_point_json(c));
      return cols;
    }())
                                : parse_subgroup_json(h);
    return fn::reduced(inner, sub);
  }
  if (j.contains("ball")) return fn::ball_moderation(parse_function_inner(j.at("ball")));
  throw SchemaError("unknown function descriptor " + j.dump());
}

std::vector<GroupElement> parse_elements(const Json& arr, const GroupSpec& spec) {
  std::vector<GroupElement> out;
  for (const auto& e : arr) out.push_back(parse_element_json(e, spec));
  return out;
}

SymbolicSet parse_set_inner(const Json& j) {
  if (!j.is_object()) throw SchemaError("set descriptor must be an object");
  if (j.contains("catalog")) return named_sets(j.at("catalog").get<std::string>());
  const std::string kind = field(j, "kind").get<std::string>();
  if (kind == "catalog") return named_sets(field(j, "id").get<std::string>());
  if (kind == "finite") {
    const Json& el = field(j, "elements");
    GroupSpec spec;
    if (j.contains("group")) spec = parse_spec_json(j.at("group"));
    else if (!el.empty() && el[0].is_array()) spec = GroupSpec::free(el[0].size());
    else throw SchemaError("finite set needs \"group\" when it has no plain elements");
    return sets::finite(spec, parse_elements(el, spec));
  }
  if (kind == "full") return sets::full(parse_spec_json(field(j, "group")));
  if (kind == "cofinite") {
    GroupSpec spec = parse_spec_json(field(j, "group"));
    return sets::cofinite(spec, parse_elements(field(j, "excluded"), spec));
  }
  if (kind == "ray_complement")
    return sets::ray_complement(parse_point_json(field(j, "origin")), field(j, "axis").get<std::size_t>(),
                                parse_int_json(field(j, "start")));
  if (kind == "truncated")
    return sets::truncated(parse_set_inner(field(j, "domain")), parse_function_inner(field(j, "u")),
                           parse_side(j.value("side", std::string("below"))));
  if (kind == "spiked")
    return sets::spiked(parse_set_inner(field(j, "base")), parse_function_inner(field(j, "u")),
                        parse_fill(j.value("fill", std::string("max"))));
  if (kind == "bounded_spiked")
    return sets::bounded_spiked(parse_set_inner(field(j, "base")), parse_function_inner(field(j, "u")), optional_basis(j),
                                parse_order(j.value("order", std::string("lex"))),
                                parse_side(j.value("side", std::string("below"))));
  if (kind == "coset_gap_spiked")
    return sets::coset_gap_spiked(parse_set_inner(field(j, "base")), parse_function_inner(field(j, "u")),
                                  parse_subgroup_json(field(j, "subgroup")), parse_point_json(field(j, "g2")),
                                  optional_basis(j));
  if (kind == "column_progressions") {
    std::optional<Point> d;
    if (j.contains("divisors")) d = parse_point_json(j.at("divisors"));
    return sets::column_progressions(parse_set_inner(field(j, "domain")), parse_function_inner(field(j, "moduli")), d);
  }
  if (kind == "graph")
    return sets::graph(parse_set_inner(field(j, "domain")), parse_function_inner(field(j, "v")), optional_basis(j));
  if (kind == "translate") {
    SymbolicSet inner = parse_set_inner(field(j, "inner"));
    return sets::translate(inner, parse_element_json(field(j, "by"), inner.spec()));
  }
  if (kind == "union") {
    std::vector<SymbolicSet> parts;
    for (const auto& p : field(j, "parts")) parts.push_back(parse_set_inner(p));
    return sets::set_union(std::move(parts));
  }
  if (kind == "basis_image")
    return sets::basis_image(parse_set_inner(field(j, "inner")), parse_basis_json(field(j, "matrix")));
  if (kind == "sublattice") return sets::subgroup(parse_subgroup_json(field(j, "subgroup")));
  if (kind == "restricted")
    return sets::restricted(parse_set_inner(field(j, "inner")), parse_subgroup_json(field(j, "subgroup")));
  throw SchemaError("unknown set kind '" + kind + "'");
}

template <class F>
auto guarded(F f) -> decltype(f()) {
  try {
    return f();
  } catch (const SchemaError&) {
    throw;
  } catch (const Error& e) {
    throw SchemaError(e.what());
  } catch (const nlohmann::json::exception& e) {
    throw SchemaError(e.what());
  }
}

}  // namespace

Int parse_int_json(const Json& j) {
  if (j.is_number_integer()) return j.is_number_unsigned() ? Int(j.get<std::uint64_t>()) : Int(j.get<std::int64_t>());
  if (j.is_string()) return parse_int(j.get<std::string>());
  throw SchemaError("expected an integer, got " + j.dump());
}

Point parse_point_json(const Json& j) {
  if (!j.is_array()) throw SchemaError("expected an array of integers, got " + j.dump());
  Point p;
  for (const auto& x : j) p.push_back(parse_int_json(x));
  return p;
}

GroupSpec parse_spec_json(const Json& j) {
  return guarded([&] {
    if (j.is_string()) return GroupSpec::parse(j.get<std::string>());
    GroupSpec s;
    s.rank = field(j, "rank").get<std::size_t>();
    if (j.contains("torsion"))
      for (const auto& t : j.at("torsion")) s.torsion.push_back(parse_int_json(t));
    s.validate();
    return s;
  });
}

GroupElement parse_element_json(const Json& j, const GroupSpec& spec) {
  return guarded([&] {
    if (j.is_array()) {
      Point p = parse_point_json(j);
      if (p.size() == spec.dim()) return GroupElement::from_coords(spec, p);
      throw SchemaError("element " + j.dump() + " does not fit " + spec.to_string());
    }
    Point free = j.contains("free") ? parse_point_json(j.at("free")) : Point{};
    Point tors = j.contains("tors") ? parse_point_json(j.at("tors")) : Point{};
    return GroupElement(spec, free, tors);
  });
}

UnimodularBasis parse_basis_json(const Json& j) {
  return guarded([&] {
    std::vector<Point> rows;
    for (const auto& r : j) rows.push_back(parse_point_json(r));
    return UnimodularBasis(rows);
  });
}

Subgroup parse_subgroup_json(const Json& j) {
  return guarded([&] {
    GroupSpec spec = parse_spec_json(field(j, "group"));
    return Subgroup(spec, parse_elements(field(j, "generators"), spec));
  });
}

Window parse_window_json(const Json& j) {
  return guarded([&] {
    if (j.is_string()) return Window::parse(j.get<std::string>());
    std::vector<std::pair<Int, Int>> b;
    for (const auto& r : j) b.emplace_back(parse_int_json(r.at(0)), parse_int_json(r.at(1)));
    return Window(b);
  });
}

IntFunction parse_function(const Json& j) {
  return guarded([&] { return parse_function_inner(j); });
}

SymbolicSet parse_set(const Json& j) {
  return guarded([&] { return parse_set_inner(j); });
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return Json::parse(ss.str());
  } catch (const nlohmann::json::exception& e) {
    throw SchemaError(path + ": " + e.what());
  }
}

Json resolve_set_argument(const std::string& arg) {
  if (arg.empty()) throw SchemaError("empty set argument");
  if (arg[0] == '@') return read_json_file(arg.substr(1));
  if (arg[0] == '{') {
    try {
      return Json::parse(arg);
    } catch (const nlohmann::json::exception& e) {
      throw SchemaError(e.what());
    }
  }
  if (std::filesystem::is_regular_file(arg)) return read_json_file(arg);
  return Json{{"kind", "catalog"}, {"id", arg}};
}

}  // namespace addcomp
