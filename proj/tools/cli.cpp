#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <optional>
#include <sstream>

#include "coxcone/error.hpp"
#include "coxcone/json_io.hpp"
#include "coxcone/selftest.hpp"
#include "coxcone/system.hpp"

namespace coxcone {

namespace {

struct Options {
  std::string verb;
  std::string family;
  std::optional<int> rank;
  int m = 0;
  std::size_t wcap = WeylGroup::kDefaultCap;
  bool global = false;
  bool ambient = false;
  bool h4 = false;
  std::optional<int> fundamental;
  std::string file;
};

class UsageError : public InputError {
 public:
  using InputError::InputError;
};

std::optional<int> implied_rank(const std::string& family) {
  switch (parse_family(family)) {
    case Family::E6: return family.size() > 1 ? std::optional(6) : std::nullopt;
    case Family::F4: return 4;
    case Family::G2: return 2;
    case Family::I2: return 2;
    case Family::H3: return family.size() > 1 ? std::optional(3) : std::nullopt;
    case Family::H4: return 4;
    default: return std::nullopt;
  }
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

SupportFunction load_function(const System& s, const Options& opt) {
  if (opt.fundamental && !opt.file.empty()) {
    throw UsageError("give either -f FILE or --fundamental k, not both");
  }
  if (opt.fundamental) {
    const int k = *opt.fundamental;
    if (k < 1 || k > s.rs.rank()) {
      throw UsageError("--fundamental must be between 1 and " + std::to_string(s.rs.rank()));
    }
    return support_coweight_polytope(s.fan, k - 1);
  }
  if (opt.file.empty()) throw UsageError(opt.verb + " needs -f FILE or --fundamental k");
  std::ifstream in(opt.file);
  if (!in) throw InputError("cannot open " + opt.file);
  std::stringstream buf;
  buf << in.rdbuf();
  return support_function_from_json(s.fan, parse_json_text(buf.str()));
}

// Prints the local (or global) certificate; returns whether h is a member.
bool report_membership(const System& s, const SupportFunction& h, bool global, Json& out) {
  out["oracle"] = global ? "global" : "local";
  if (global) {
    const GlobalVerdict v = s.cone.check_global(h);
    out["member"] = v.member;
    if (!v.member) {
      const auto [r, t] = *v.violated_pair;
      const Vector sum = add(s.fan.ray(r).coords, s.fan.ray(t).coords);
      out["certificate"] = {{"ray_1", to_json(s.fan.ray(r).coords)},
                            {"ray_2", to_json(s.fan.ray(t).coords)},
                            {"lhs", to_json(h[r] + h[t])},
                            {"rhs", to_json(s.fan.eval_pl(h.values(), sum))}};
    }
    return v.member;
  }
  const LocalVerdict v = s.cone.check_local(h);
  out["member"] = v.member;
  if (!v.member) {
    const FacetInequality& f = s.cone.facets()[*v.violated];
    out["certificate"] = {{"facet_index", *v.violated},
                          {"generator", f.gen + 1},
                          {"coset_rep", word_json(s.W, f.coset_key)},
                          {"terms", functional_json(s.fan, f.functional)},
                          {"value", to_json(apply_functional(f.functional, h.values()))}};
  }
  return v.member;
}

int verb_info(const System& s, std::ostream& out) {
  emit(out, info_json(s.cone));
  return 0;
}

int verb_facets(const System& s, std::ostream& out) {
  Json j = facets_json(s.cone);
  const int d = s.rs.rank();
  switch (s.rs.spec().family) {
    case Family::A:
      if (d >= 1) j["formula"] = facet_count_formula(ClassicalType::A, d + 1);
      break;
    case Family::B:
    case Family::C:
      j["formula"] = facet_count_formula(ClassicalType::BC, d);
      break;
    case Family::D:
      j["formula"] = facet_count_formula(ClassicalType::D, d);
      break;
    default:
      break;
  }
  emit(out, j);
  return 0;
}

int verb_check(const System& s, const Options& opt, std::ostream& out) {
  const SupportFunction h = load_function(s, opt);
  Json j;
  const bool member = report_membership(s, h, opt.global, j);
  emit(out, j);
  return member ? 0 : 1;
}

int verb_vertices(const System& s, const Options& opt, std::ostream& out) {
  if (opt.ambient && !s.rs.has_ambient()) {
    throw UsageError("--ambient applies to the classical families A, B, C, D only");
  }
  const SupportFunction h = load_function(s, opt);
  Json j;
  if (!report_membership(s, h, false, j)) {
    emit(out, j);
    return 1;
  }
  emit(out, vertices_json(s.rs, vertices(s.cone, h), opt.ambient));
  return 0;
}

int verb_weightpoly(const System& s, const Options& opt, std::ostream& out) {
  if (!opt.fundamental) throw UsageError("weightpoly needs --fundamental k");
  if (opt.ambient && !s.rs.has_ambient()) {
    throw UsageError("--ambient applies to the classical families A, B, C, D only");
  }
  const SupportFunction h = load_function(s, opt);
  Json j = support_function_json(s.fan, h);
  j["fundamental"] = *opt.fundamental;
  j["coweight"] = to_json(s.rs.fundamental_coweight(*opt.fundamental - 1));
  const Json vs = vertices_json(s.rs, vertices(s.cone, h), opt.ambient);
  j["vertex_count"] = vs["count"];
  j["vertices"] = vs["vertices"];
  if (vs.contains("ambient")) j["ambient"] = vs["ambient"];
  emit(out, j);
  return 0;
}

int verb_indecomposable(const System& s, const Options& opt, std::ostream& out) {
  const SupportFunction h = load_function(s, opt);
  Json j;
  if (!report_membership(s, h, false, j)) {
    emit(out, j);
    return 1;
  }
  j = Json::object();
  const long nef = nef_dimension_at(s.cone, h);
  j["nef_dimension"] = nef;
  j["indecomposable"] = nef == 1;
  j["active_walls"] = active_walls(s.fan, h).size();
  j["walls"] = s.fan.walls().size();
  if (opt.fundamental) {
    const int k = *opt.fundamental - 1;
    j["only_triangular_2faces"] = only_triangular_2faces(s.rs, k);
    if (s.rs.is_crystallographic()) j["predicted"] = predict_indecomposable_weight(s.rs, k);
  }
  emit(out, j);
  return 0;
}

int verb_matroid(const System& s, const Options& opt, std::ostream& out) {
  if (opt.file.empty()) throw UsageError("matroid-check needs -f FILE");
  std::ifstream in(opt.file);
  if (!in) throw InputError("cannot open " + opt.file);
  std::stringstream buf;
  buf << in.rdbuf();
  const Json j = parse_json_text(buf.str());
  if (!j.is_object() || !j.contains("cosets") || !j["cosets"].is_array()) {
    throw ParseError("cosets: expected an array of reduced words, e.g. [[], [1], [2, 1]]");
  }
  NodeSet I = 0;
  if (j.contains("parabolic")) {
    if (!j["parabolic"].is_array()) throw ParseError("parabolic: expected an array of node indices");
    for (std::size_t k = 0; k < j["parabolic"].size(); ++k) {
      const Json& node = j["parabolic"][k];
      if (!node.is_number_integer() || node.get<int>() < 1 || node.get<int>() > s.rs.rank()) {
        throw ParseError("parabolic[" + std::to_string(k) + "]: expected a node in 1.." +
                         std::to_string(s.rs.rank()));
      }
      I |= node_set({node.get<int>() - 1});
    }
  }
  std::vector<ElemId> M;
  for (std::size_t k = 0; k < j["cosets"].size(); ++k) {
    const std::string where = "cosets[" + std::to_string(k) + "]";
    const Json& word = j["cosets"][k];
    if (!word.is_array()) throw ParseError(where + ": expected an array of generator indices");
    std::vector<int> gens;
    for (const Json& g : word) {
      if (!g.is_number_integer() || g.get<int>() < 1 || g.get<int>() > s.rs.rank()) {
        throw ParseError(where + ": generator indices run from 1 to " +
                         std::to_string(s.rs.rank()));
      }
      gens.push_back(g.get<int>() - 1);
    }
    // Words name cosets; use the minimal representative.
    M.push_back(s.W.coset_canonical(s.W.from_word(gens), I));
  }
  const MatroidVerdict v = coxeter_matroid_check(s.rs, s.W, I, M);
  Json res;
  res["matroid"] = v.matroid;
  Json edges = Json::array();
  for (const auto& [a, b] : v.edges) edges.push_back({word_json(s.W, a), word_json(s.W, b)});
  res["edges"] = edges;
  if (v.violating_edge) {
    res["violating_edge"] = {word_json(s.W, v.violating_edge->first),
                             word_json(s.W, v.violating_edge->second)};
  }
  emit(out, res);
  return v.matroid ? 0 : 1;
}

int verb_selftest(const Options& opt, std::ostream& out, std::ostream& err) {
  SelftestOptions so;
  so.h4 = opt.h4;
  const auto results =
      run_selftest(so, [&](const CriterionResult& r) { err << format_result(r) << std::endl; });
  Json j;
  bool all = true;
  Json list = Json::array();
  for (const auto& r : results) {
    all = all && r.passed;
    list.push_back({{"criterion", r.id}, {"title", r.title}, {"passed", r.passed},
                    {"detail", r.detail}});
  }
  j["passed"] = all;
  j["criteria"] = list;
  emit(out, j);
  return all ? 0 : 1;
}

int dispatch(const Options& opt, std::ostream& out, std::ostream& err) {
  if (opt.verb == "selftest") {
    if (!opt.family.empty()) throw UsageError("selftest takes no root system");
    return verb_selftest(opt, out, err);
  }
  if (opt.family.empty()) throw UsageError(opt.verb + " needs <family> <rank>");
  std::optional<int> rank = opt.rank ? opt.rank : implied_rank(opt.family);
  if (!rank) throw UsageError(opt.verb + " needs a rank for family " + opt.family);
  const RootSystemSpec spec = parse_spec(opt.family, *rank, opt.m);
  if (spec.family == Family::I2 && opt.m == 0) throw UsageError("I2 needs --m M");
  const auto system = System::build(spec, opt.wcap);
  const System& s = *system;
  if (opt.verb == "info") return verb_info(s, out);
  if (opt.verb == "facets") return verb_facets(s, out);
  if (opt.verb == "check") return verb_check(s, opt, out);
  if (opt.verb == "vertices") return verb_vertices(s, opt, out);
  if (opt.verb == "weightpoly") return verb_weightpoly(s, opt, out);
  if (opt.verb == "indecomposable") return verb_indecomposable(s, opt, out);
  return verb_matroid(s, opt, out);
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Exact root systems, Coxeter fans and deformation cones"};
  app.name("coxcone");
  app.add_option("verb", opt.verb, "info | facets | check | vertices | weightpoly | "
                                   "indecomposable | matroid-check | selftest")
      ->required()
      ->check(CLI::IsMember({"info", "facets", "check", "vertices", "weightpoly",
                             "indecomposable", "matroid-check", "selftest"}));
  app.add_option("family", opt.family, "A, B, C, D, E6, F4, G2, H3, H4 or I2");
  app.add_option("rank", opt.rank, "rank of the root system");
  app.add_option("--m", opt.m, "dihedral order for I2(m), 3..6");
  app.add_option("--wcap", opt.wcap, "Weyl group enumeration cap")->check(CLI::PositiveNumber);
  app.add_flag("--global", opt.global, "use the pairwise oracle instead of the local one");
  app.add_option("--fundamental", opt.fundamental,
                 "use the k-th fundamental coweight polytope (1-based)");
  app.add_flag("--ambient", opt.ambient, "add ambient coordinates (classical families)");
  app.add_flag("--h4", opt.h4, "selftest: include the H4 computation");
  app.add_option("-f,--file", opt.file, "input JSON file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n" << app.help();
    return 2;
  }

  auto fail = [&](int code, const std::string& kind, const std::string& msg) {
    emit(out, Json{{"error", msg}, {"kind", kind}});
    err << kind << ": " << msg << "\n";
    return code;
  };
  try {
    return dispatch(opt, out, err);
  } catch (const UsageError& e) {
    return fail(2, "usage error", e.what());
  } catch (const ParseError& e) {
    return fail(2, "parse error", e.what());
  } catch (const InputError& e) {
    return fail(2, "input error", e.what());
  } catch (const CapExceeded& e) {
    return fail(2, "input error", std::string(e.what()) + "; raise --wcap to allow more");
  } catch (const DivisionByZero& e) {
    return fail(2, "input error", e.what());
  } catch (const std::exception& e) {
    return fail(3, "internal error", e.what());
  }
}

}  // namespace coxcone
