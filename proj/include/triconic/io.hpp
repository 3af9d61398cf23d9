#pragma once

// Arrangement files (.conics.json):
//
//   {"field": {"D": -3},
//    "conics": [[X^2, Y^2, Z^2, XY, XZ, YZ], ...three rows...]}
//
// Entries are rational strings ("-3/4") or {"r": "1/2", "s": "1"} for
// r + s*sqrt(D). Other top-level keys are carried along untouched.

#include "triconic/catalog.hpp"
#include "triconic/conic.hpp"

#include <json.hpp>

#include <filesystem>
#include <string>
#include <string_view>

namespace triconic {

/// Throws Error(Parse) for malformed documents and Error(Validation) for
/// well-formed ones describing an invalid arrangement.
Arrangement arrangement_from_json(const nlohmann::json &doc);
Arrangement read_arrangement_file(const std::filesystem::path &path);

nlohmann::json field_elem_to_json(const FieldElem &x);
FieldElem field_elem_from_json(const nlohmann::json &j, const FieldContext &ctx);
nlohmann::json arrangement_to_json(const Arrangement &arr);

/// "r" or "r:s" for r + s*sqrt(D).
FieldElem parse_field_elem(std::string_view text, const FieldContext &ctx);
/// "u=1/2,m=1:2" style lists.
ParamSet parse_params(std::string_view text, const FieldContext &ctx);

} // namespace triconic
