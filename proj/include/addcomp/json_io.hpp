#pragma once

#include <addcomp/group.hpp>
#include <addcomp/int_function.hpp>
#include <addcomp/symbolic_set.hpp>

#include <string>

namespace addcomp {

// Malformed input documents; the CLI maps these to exit code 64.
class SchemaError : public Error {
 public:
  using Error::Error;
};

Int parse_int_json(const Json& j);
Point parse_point_json(const Json& j);
// {"rank": r, "torsion": [...]} or a group string such as "Z^2" or "Z4xZ2".
GroupSpec parse_spec_json(const Json& j);
// A plain array of free coordinates, or {"free": [...], "tors": [...]}.
GroupElement parse_element_json(const Json& j, const GroupSpec& spec);
UnimodularBasis parse_basis_json(const Json& j);
// {"group": spec, "generators": [elements]}
Subgroup parse_subgroup_json(const Json& j);
// "-10..10,-10..10" or [[lo, hi], ...]
Window parse_window_json(const Json& j);

IntFunction parse_function(const Json& j);
// Set descriptors as produced by SymbolicSet::to_json, plus {"kind": "catalog", "id": ...}.
SymbolicSet parse_set(const Json& j);

// Reads a JSON document from a file; parse errors become SchemaError.
Json read_json_file(const std::string& path);
// Inline JSON ("{...}"), a file path (optionally prefixed with '@'), or a catalog id.
Json resolve_set_argument(const std::string& arg);

}  // namespace addcomp
