#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "coxcone/deformation.hpp"

namespace coxcone {

using Json = nlohmann::ordered_json;

Json to_json(const Scalar& x);
Json to_json(const Vector& v);
Json to_json(const Matrix& m);
// A reduced word with 1-based generator indices.
Json word_json(const WeylGroup& W, ElemId w);
Json rootsystem_json(const RootSystemSpec& spec);

// Parses a Scalar from a JSON string ("p/q", "(p+qr5)/s") or integer.
// `where` names the field in error messages.
Scalar scalar_from_json(const Json& j, const std::string& where);
Vector vector_from_json(const Json& j, const std::string& where);

// Parses JSON text, turning syntax errors into ParseError with line/column.
Json parse_json_text(const std::string& text);

Json info_json(const SubmodularCone& cone);
Json facets_json(const SubmodularCone& cone);
Json functional_json(const CoxeterFan& fan, const RayFunctional& f);

// {"rootsystem": {...}, "values": [{"ray": [...], "h": "..."}, ...]}
Json support_function_json(const CoxeterFan& fan, const SupportFunction& h);
// Inverse of support_function_json. The rootsystem field must match the fan;
// every ray must be present exactly once.
SupportFunction support_function_from_json(const CoxeterFan& fan, const Json& j);

// Vertices in simple-root coordinates and, when `ambient` is set and the
// family has one, in ambient coordinates.
Json vertices_json(const RootSystem& rs, const VertexSet& vs, bool ambient);

}  // namespace coxcone
