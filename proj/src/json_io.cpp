#include "coxcone/json_io.hpp"

#include <algorithm>

#include "coxcone/error.hpp"

namespace coxcone {

Json to_json(const Scalar& x) { return x.to_string(); }

Json to_json(const Vector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

Json to_json(const Matrix& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(to_json(m.row(i)));
  return out;
}

Json word_json(const WeylGroup& W, ElemId w) {
  Json out = Json::array();
  for (int i : W.element(w).word) out.push_back(i + 1);
  return out;
}

Json rootsystem_json(const RootSystemSpec& spec) {
  Json out;
  out["family"] = family_name(spec.family);
  out["rank"] = spec.rank;
  if (spec.family == Family::I2) out["m"] = spec.dihedral_m;
  return out;
}

Scalar scalar_from_json(const Json& j, const std::string& where) {
  if (j.is_number_integer()) return Scalar(j.get<long>());
  if (!j.is_string()) {
    throw ParseError(where + ": expected a scalar string such as \"3/2\" or \"(1+1r5)/2\", got " +
                     j.dump());
  }
  try {
    return Scalar::parse(j.get<std::string>());
  } catch (const ParseError& e) {
    throw ParseError(where + ": " + e.what());
  }
}

Vector vector_from_json(const Json& j, const std::string& where) {
  if (!j.is_array()) throw ParseError(where + ": expected an array");
  Vector out;
  for (std::size_t k = 0; k < j.size(); ++k) {
    out.push_back(scalar_from_json(j[k], where + "[" + std::to_string(k) + "]"));
  }
  return out;
}

Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    const std::size_t byte = std::min(e.byte == 0 ? 0 : e.byte - 1, text.size());
    const auto line = 1 + std::count(text.begin(), text.begin() + byte, '\n');
    const auto bol = text.rfind('\n', byte == 0 ? 0 : byte - 1);
    const std::size_t column = bol == std::string::npos || byte == 0 ? byte + 1 : byte - bol;
    throw ParseError("malformed JSON at line " + std::to_string(line) + ", column " +
                     std::to_string(column) + ": " + e.what());
  }
}

Json info_json(const SubmodularCone& cone) {
  const CoxeterFan& fan = cone.fan();
  const RootSystem& rs = fan.root_system();
  Json out = rootsystem_json(rs.spec());
  out["name"] = rs.name();
  out["crystallographic"] = rs.is_crystallographic();
  out["cartan"] = to_json(rs.cartan());
  out["inverse_cartan"] = to_json(rs.inverse_cartan());
  out["gram"] = to_json(rs.gram());
  Json edges = Json::array();
  for (const auto& e : rs.dynkin_edges()) {
    edges.push_back({{"i", e.i + 1}, {"j", e.j + 1}, {"label", e.label}});
  }
  out["dynkin_edges"] = edges;
  Json weights = Json::array();
  Json coweights = Json::array();
  for (int i = 0; i < rs.rank(); ++i) {
    weights.push_back(to_json(rs.fundamental_weight(i)));
    coweights.push_back(to_json(rs.fundamental_coweight(i)));
  }
  out["weights"] = weights;
  out["coweights"] = coweights;
  out["positive_roots"] = rs.positive_roots().size();
  out["weyl_order"] = fan.weyl_group().order();
  out["rays"] = fan.num_rays();
  out["walls"] = fan.walls().size();
  out["facets"] = cone.facets().size();
  Json per_gen = Json::array();
  for (int i = 0; i < rs.rank(); ++i) {
    per_gen.push_back(std::count_if(cone.facets().begin(), cone.facets().end(),
                                    [i](const FacetInequality& f) { return f.gen == i; }));
  }
  out["facets_per_generator"] = per_gen;
  return out;
}

Json functional_json(const CoxeterFan& fan, const RayFunctional& f) {
  Json terms = Json::array();
  for (const auto& [r, c] : f) {
    terms.push_back({{"ray", to_json(fan.ray(r).coords)}, {"coeff", to_json(c)}});
  }
  return terms;
}

Json facets_json(const SubmodularCone& cone) {
  const CoxeterFan& fan = cone.fan();
  Json list = Json::array();
  for (const auto& f : cone.facets()) {
    Json item;
    item["generator"] = f.gen + 1;
    item["coset_rep"] = word_json(fan.weyl_group(), f.coset_key);
    item["terms"] = functional_json(fan, f.functional);
    list.push_back(std::move(item));
  }
  Json out;
  out["rootsystem"] = rootsystem_json(fan.root_system().spec());
  out["count"] = cone.facets().size();
  out["facets"] = std::move(list);
  return out;
}

Json support_function_json(const CoxeterFan& fan, const SupportFunction& h) {
  Json values = Json::array();
  for (RayId r = 0; r < fan.num_rays(); ++r) {
    values.push_back({{"ray", to_json(fan.ray(r).coords)}, {"h", to_json(h[r])}});
  }
  Json out;
  out["rootsystem"] = rootsystem_json(fan.root_system().spec());
  out["values"] = std::move(values);
  return out;
}

SupportFunction support_function_from_json(const CoxeterFan& fan, const Json& j) {
  if (!j.is_object()) throw ParseError("support function: expected a JSON object");
  const RootSystemSpec& spec = fan.root_system().spec();
  if (j.contains("rootsystem")) {
    const Json& rsj = j["rootsystem"];
    if (!rsj.is_object() || !rsj.contains("family") || !rsj.contains("rank") ||
        !rsj["family"].is_string() || !rsj["rank"].is_number_integer()) {
      throw ParseError("rootsystem: expected {\"family\": string, \"rank\": integer}");
    }
    RootSystemSpec file_spec;
    file_spec.family = parse_family(rsj["family"].get<std::string>());
    file_spec.rank = rsj["rank"].get<int>();
    if (rsj.contains("m") && rsj["m"].is_number_integer()) file_spec.dihedral_m = rsj["m"].get<int>();
    if (file_spec.family != spec.family || file_spec.rank != spec.rank ||
        (spec.family == Family::I2 && file_spec.dihedral_m != spec.dihedral_m)) {
      throw InputError("rootsystem: file is for " + file_spec.name() + " but the command names " +
                       spec.name());
    }
  }
  if (!j.contains("values") || !j["values"].is_array()) {
    throw ParseError("values: expected an array of {\"ray\": [...], \"h\": scalar}");
  }
  std::vector<std::pair<Vector, Scalar>> entries;
  std::vector<bool> seen(fan.num_rays());
  const Json& values = j["values"];
  for (std::size_t k = 0; k < values.size(); ++k) {
    const std::string where = "values[" + std::to_string(k) + "]";
    const Json& item = values[k];
    if (!item.is_object() || !item.contains("ray") || !item.contains("h")) {
      throw ParseError(where + ": expected an object with fields \"ray\" and \"h\"");
    }
    Vector ray = vector_from_json(item["ray"], where + ".ray");
    if (ray.size() != static_cast<std::size_t>(spec.rank)) {
      throw InputError(where + ".ray: expected " + std::to_string(spec.rank) + " coordinates");
    }
    if (auto r = fan.find_ray(ray); r && seen[*r]) {
      throw InputError(where + ".ray: duplicate ray");
    } else if (r) {
      seen[*r] = true;
    }
    entries.emplace_back(std::move(ray), scalar_from_json(item["h"], where + ".h"));
  }
  return SupportFunction::from_entries(fan, entries);
}

Json vertices_json(const RootSystem& rs, const VertexSet& vs, bool ambient) {
  Json out;
  out["rootsystem"] = rootsystem_json(rs.spec());
  out["count"] = vs.vertices.size();
  Json list = Json::array();
  for (const auto& v : vs.vertices) list.push_back(to_json(v));
  out["vertices"] = std::move(list);
  if (ambient && rs.has_ambient()) {
    Json amb = Json::array();
    for (const auto& v : vs.vertices) amb.push_back(to_json(rs.to_ambient(v)));
    out["ambient"] = std::move(amb);
  }
  return out;
}

}  // namespace coxcone
