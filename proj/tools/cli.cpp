// Copyright 2026 The psbe-workbench Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>
#include <optional>
#include <sstream>

#include "psbe/algebra.hpp"
#include "psbe/assignment.hpp"
#include "psbe/axioms.hpp"
#include "psbe/deductive.hpp"
#include "psbe/error.hpp"
#include "psbe/homomorphisms.hpp"
#include "psbe/linalg.hpp"
#include "psbe/meta.hpp"
#include "psbe/model_finder.hpp"
#include "psbe/operators.hpp"
#include "psbe/states.hpp"
#include "psbe/valuations.hpp"

namespace psbe::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Report {
  Json body = Json::object();
  int code = kHolds;
};

// Text mirror of the JSON report: one "key: value" line per scalar, nested
// objects and lists indented by two spaces.
void render(const Json& j, int indent, std::ostream& out);

std::string scalar(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

void render_value(const std::string& prefix, const Json& v, int indent,
                  std::ostream& out) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  if (v.is_object()) {
    out << pad << prefix << ":\n";
    render(v, indent + 2, out);
  } else if (v.is_array()) {
    if (v.empty()) {
      out << pad << prefix << ": (none)\n";
      return;
    }
    out << pad << prefix << ":\n";
    for (const Json& item : v) {
      if (item.is_object()) {
        out << pad << "  -\n";
        render(item, indent + 4, out);
      } else if (item.is_string() &&
                 item.get<std::string>().find('\n') != std::string::npos) {
        out << pad << "  -\n";
        std::istringstream lines(item.get<std::string>());
        for (std::string line; std::getline(lines, line);) {
          out << pad << "    " << line << "\n";
        }
      } else {
        out << pad << "  " << scalar(item) << "\n";
      }
    }
  } else if (v.is_string() &&
             v.get<std::string>().find('\n') != std::string::npos) {
    out << pad << prefix << ":\n";
    std::istringstream lines(v.get<std::string>());
    for (std::string line; std::getline(lines, line);) {
      out << pad << "  " << line << "\n";
    }
  } else {
    out << pad << prefix << ": " << scalar(v) << "\n";
  }
}

void render(const Json& j, int indent, std::ostream& out) {
  for (const auto& [key, value] : j.items()) {
    render_value(key, value, indent, out);
  }
}

Json verdict(const FiniteAlgebra& a, const CheckResult& r) {
  Json j;
  j["holds"] = r.holds;
  if (!r.holds) {
    j["rule"] = r.rule;
    j["witness"] = format_tuple(a, r.witness);
    if (!r.detail.empty()) j["detail"] = r.detail;
  }
  return j;
}

std::string images(const FiniteAlgebra& a, const std::vector<ElementId>& map) {
  std::string out;
  for (ElementId v : map) out += (out.empty() ? "" : " ") + a.token(v);
  return out;
}

std::string arrows(const FiniteAlgebra& src, const FiniteAlgebra& tgt,
                   const std::vector<ElementId>& map) {
  std::string out;
  for (ElementId x = 0; x < map.size(); ++x) {
    out += (out.empty() ? "" : " ") + src.token(x) + "->" + tgt.token(map[x]);
  }
  return out;
}

// Linear term "c1 v(x1) + ..." with the constant first.
std::string linear_term(const FiniteAlgebra& a, const std::string& var,
                        const std::vector<std::pair<ElementId, Rational>>& t,
                        const Rational& constant) {
  std::string out;
  if (!constant.is_zero() || t.empty()) out = constant.str();
  for (const auto& [x, c] : t) {
    Rational mag = c.sign() < 0 ? -c : c;
    std::string coeff = mag == Rational(1) ? "" : mag.str() + " ";
    std::string v = coeff + var + "(" + a.token(x) + ")";
    if (out.empty()) {
      out = (c.sign() < 0 ? "-" : "") + v;
    } else {
      out += (c.sign() < 0 ? " - " : " + ") + v;
    }
  }
  return out;
}

Json equalities(const FiniteAlgebra& a, const std::string& var,
                std::vector<LinearEquation> rows) {
  std::vector<std::size_t> pivots = reduce_rows(rows, a.size());
  Json out = Json::array();
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    std::vector<std::pair<ElementId, Rational>> rest;
    for (ElementId x = 0; x < a.size(); ++x) {
      if (x != pivots[r] && !rows[r].coeffs[x].is_zero()) {
        rest.emplace_back(x, -rows[r].coeffs[x]);
      }
    }
    out.push_back(var + "(" + a.token(static_cast<ElementId>(pivots[r])) +
                  ") = " + linear_term(a, var, rest, rows[r].rhs));
  }
  return out;
}

Json vectors(const std::vector<Vector>& vs) {
  Json out = Json::array();
  for (const Vector& v : vs) out.push_back(format_vector(v));
  return out;
}

Json head(const FiniteAlgebra& a) {
  Json j;
  j["algebra"] = a.name();
  return j;
}

// Subcommands

struct Common {
  std::string format = "text";
  std::size_t workers = 1;
};

Report cmd_check(const std::string& path, const std::string& system_name) {
  FiniteAlgebra a = load_algebra(path);
  auto system = parse_axiom_system(system_name);
  if (!system) {
    throw Error(ErrorKind::kParse, "unknown axiom system '" + system_name + "'");
  }
  AxiomReport r = check_axioms(a, *system);
  Report rep;
  rep.body = head(a);
  rep.body["system"] = std::string(to_string(*system));
  rep.body["holds"] = r.holds;
  Json vs = Json::array();
  for (const Violation& v : r.violations) {
    Json j;
    j["axiom"] = v.axiom;
    j["witness"] = format_tuple(a, v.witness);
    j["count"] = v.count;
    vs.push_back(j);
  }
  rep.body["violations"] = vs;
  rep.code = r.holds ? kHolds : kFails;
  return rep;
}

Report cmd_classify(const std::string& path) {
  FiniteAlgebra a = load_algebra(path);
  ClassificationReport c = classify(a);
  Report rep;
  rep.body = head(a);
  rep.body["pseudo-BE"] = c.pseudo_be;
  rep.body["pseudo-BCK"] = c.pseudo_bck;
  rep.body["BE"] = c.be;
  rep.body["proper"] = c.proper;
  rep.body["condition-A"] = c.condition_a;
  rep.body["distributive"] = c.distributive;
  rep.body["commutative"] = c.commutative;
  rep.body["P-system"] = c.p_system;
  rep.body["Q-system"] = c.q_system;
  rep.body["bounded"] = c.bounded;
  rep.body["linear"] = c.linear;
  if (c.bounded) {
    rep.body["good"] = c.good;
    rep.body["involutive"] = c.involutive;
    rep.body["regular"] = format_subset(a, *c.regular);
    rep.body["dense"] = format_subset(a, *c.dense);
  }
  return rep;
}

Report cmd_ds(const std::string& path, const std::string& filter) {
  FiniteAlgebra a = load_algebra(path);
  DSFamily family = enumerate_ds(a);
  std::vector<DSTags> tags = tag_family(a, family);
  Report rep;
  rep.body = head(a);
  rep.body["filter"] = filter.empty() ? "all" : filter;
  Json systems = Json::array();
  for (std::size_t i = 0; i < family.systems.size(); ++i) {
    const DSTags& t = tags[i];
    const std::string set = format_subset(a, family.systems[i]);
    if (filter.empty()) {
      Json j;
      j["set"] = set;
      j["normal"] = t.normal;
      j["fantastic"] = t.fantastic;
      if (t.involutive) j["involutive"] = *t.involutive;
      j["prime"] = t.prime;
      j["maximal"] = t.maximal;
      systems.push_back(j);
      continue;
    }
    bool keep = (filter == "normal" && t.normal) ||
                (filter == "fantastic" && t.fantastic) ||
                (filter == "prime" && t.prime) ||
                (filter == "maximal" && t.maximal);
    if (filter == "involutive") {
      if (!a.is_bounded()) {
        throw Error(ErrorKind::kUnbounded,
                    "involutive systems need a declared bottom");
      }
      keep = t.involutive.value_or(false);
    }
    if (keep) systems.push_back(set);
  }
  rep.body["count"] = systems.size();
  rep.body["systems"] = systems;
  return rep;
}

Report cmd_quotient(const std::string& path, const std::string& ds) {
  FiniteAlgebra a = load_algebra(path);
  QuotientResult q = quotient(a, parse_subset(a, ds));
  Report rep;
  rep.body = head(a);
  rep.body["ds"] = format_subset(a, parse_subset(a, ds));
  Json classes = Json::array();
  for (const ElementSubset& c : q.classes) classes.push_back(format_subset(a, c));
  rep.body["classes"] = classes;
  rep.body["projection"] = arrows(a, q.quotient, q.projection);
  rep.body["quotient"] = serialize(q.quotient);
  return rep;
}

Json state_block(const FiniteAlgebra& a, const Vector& s) {
  Json j;
  j["values"] = format_vector(s);
  CheckResult bs = is_bosbach_state(a, s);
  j["bosbach"] = verdict(a, bs);
  j["state-morphism"] = verdict(a, is_state_morphism(a, s));
  if (bs) j["kernel"] = format_subset(a, state_kernel(a, s));
  return j;
}

Report cmd_states(const std::string& path, const std::string& verify,
                  bool morphism) {
  FiniteAlgebra a = load_algebra(path);
  Report rep;
  rep.body = head(a);
  if (!verify.empty()) {
    RationalAssignment s = load_assignment(a, verify, AssignmentKind::kState);
    rep.body["state"] = s.name;
    Json block = state_block(a, s.values);
    rep.body.update(block);
    bool ok = morphism ? block["state-morphism"]["holds"].get<bool>()
                       : block["bosbach"]["holds"].get<bool>();
    rep.code = ok ? kHolds : kFails;
    return rep;
  }
  StateSpaceResult space = state_space(a);
  rep.body["dimension"] = space.affine.dimension();
  rep.body["equalities"] = equalities(a, "s", space.affine.equalities);
  std::vector<Vector> vertices = space.polytope.vertices;
  if (morphism) {
    std::erase_if(vertices, [&](const Vector& v) {
      return !is_state_morphism(a, v);
    });
    rep.body["state-morphism vertices"] = vectors(vertices);
  } else {
    rep.body["vertices"] = vectors(vertices);
  }
  return rep;
}

std::vector<LinearEquation> homogeneous(const std::vector<Vector>& rows) {
  std::vector<LinearEquation> out;
  for (const Vector& r : rows) out.push_back({r, Rational(0)});
  return out;
}

Report cmd_measures(const std::string& path, const std::string& verify) {
  FiniteAlgebra a = load_algebra(path);
  Report rep;
  rep.body = head(a);
  if (!verify.empty()) {
    RationalAssignment m = load_assignment(a, verify, AssignmentKind::kMeasure);
    rep.body["measure"] = m.name;
    rep.body["values"] = format_vector(m.values);
    CheckResult is_m = is_measure(a, m.values);
    rep.body["measure check"] = verdict(a, is_m);
    rep.body["measure-morphism"] = verdict(a, is_measure_morphism(a, m.values));
    if (a.is_bounded()) {
      rep.body["state-measure"] = verdict(a, is_state_measure(a, m.values));
    }
    if (is_m) rep.body["kernel"] = format_subset(a, measure_kernel(a, m.values));
    rep.code = is_m ? kHolds : kFails;
    return rep;
  }
  MeasureCone cone = measure_cone(a);
  rep.body["equalities"] = equalities(a, "m", homogeneous(cone.equalities));
  rep.body["rays"] = vectors(cone.rays);
  return rep;
}

Report cmd_internal(const std::string& path, const std::string& kind,
                    const std::string& verify, bool audit,
                    std::size_t workers) {
  FiniteAlgebra a = load_algebra(path);
  std::optional<InternalStateKind> is_kind;
  if (kind == "I") {
    is_kind = InternalStateKind::kTypeI;
  } else if (kind == "II") {
    is_kind = InternalStateKind::kTypeII;
  } else if (kind != "smo") {
    throw Error(ErrorKind::kParse, "unknown operator kind '" + kind + "'");
  }
  Report rep;
  rep.body = head(a);
  rep.body["kind"] = kind;
  if (!verify.empty()) {
    UnaryOperator mu = load_operator(a, verify);
    rep.body["map"] = images(a, mu.map);
    CheckResult r = is_kind ? is_internal_state(a, mu, *is_kind) : is_smo(a, mu);
    rep.body.update(verdict(a, r));
    if (r && (!is_kind || (satisfies(a, AxiomSystem::kPseudoBE) &&
                           satisfies(a, AxiomSystem::kConditionA)))) {
      KernelImage ki = kernel_image(a, mu);
      rep.body["kernel"] = format_subset(a, ki.kernel);
      rep.body["image"] = format_subset(a, ki.image);
    }
    rep.code = r ? kHolds : kFails;
    return rep;
  }
  EnumerationOptions opt;
  opt.workers = workers;
  opt.audit = audit;
  std::vector<UnaryOperator> ops = is_kind
                                       ? enumerate_internal_states(a, *is_kind, opt)
                                       : enumerate_smo(a, opt);
  std::string carrier;
  for (const std::string& t : a.tokens()) carrier += (carrier.empty() ? "" : " ") + t;
  rep.body["carrier"] = carrier;
  rep.body["count"] = ops.size();
  Json list = Json::array();
  for (const UnaryOperator& mu : ops) list.push_back(images(a, mu.map));
  rep.body["operators"] = list;
  return rep;
}

Report cmd_valuations(const std::string& path, const std::string& verify,
                      bool commutative) {
  FiniteAlgebra a = load_algebra(path);
  Report rep;
  rep.body = head(a);
  if (!verify.empty()) {
    RationalAssignment phi =
        load_assignment(a, verify, AssignmentKind::kValuation);
    const Vector& v = phi.values;
    rep.body["valuation"] = phi.name;
    rep.body["values"] = format_vector(v);
    CheckResult pv = is_pseudo_valuation(a, v);
    rep.body["pseudo-valuation"] = verdict(a, pv);
    rep.body["valuation check"] = verdict(a, is_valuation(a, v));
    rep.body["weak pseudo-valuation"] =
        verdict(a, is_weak_pseudo_valuation(a, v));
    std::optional<CheckResult> cpv;
    if (pv) {
      cpv = is_commutative_pv(a, v);
      rep.body["commutative"] = verdict(a, *cpv);
    }
    if (v[a.unit()].is_zero()) {
      CharacterizationReport c = characterization_crosscheck(a, v);
      Json cj;
      cj["pv4"] = verdict(a, c.pv4);
      cj["pv5"] = verdict(a, c.pv5);
      cj["cpv3"] = verdict(a, c.cpv3);
      cj["cpv4"] = verdict(a, c.cpv4);
      cj["pv agreement"] = c.pv_agrees;
      if (pv) cj["cpv agreement"] = c.cpv_agrees;
      rep.body["characterization"] = cj;
    }
    if (pv) rep.body["kernel"] = format_subset(a, valuation_kernel(a, v));
    bool ok = commutative ? cpv.has_value() && cpv->holds : pv.holds;
    rep.code = ok ? kHolds : kFails;
    return rep;
  }
  ValuationCone cone = valuation_cone(a);
  rep.body["equalities"] = equalities(a, "phi", homogeneous(cone.equalities));
  rep.body["inequalities"] = cone.inequalities.size();
  std::vector<Vector> rays = cone.rays;
  if (commutative) {
    std::erase_if(rays, [&](const Vector& r) { return !is_commutative_pv(a, r); });
    rep.body["commutative rays"] = vectors(rays);
  } else {
    rep.body["rays"] = vectors(rays);
  }
  return rep;
}

Report cmd_hom(const std::string& path_a, const std::string& path_b,
               const std::string& verify, bool iso, bool audit,
               std::size_t workers) {
  FiniteAlgebra a = load_algebra(path_a);
  FiniteAlgebra b = load_algebra(path_b);
  Report rep;
  rep.body["source"] = a.name();
  rep.body["target"] = b.name();
  if (!verify.empty()) {
    Homomorphism f = load_homomorphism(a, b, verify);
    HomomorphismReport r = check_homomorphism(a, b, f);
    rep.body["map"] = arrows(a, b, f.map);
    rep.body.update(verdict(a, r.operations));
    rep.body["preserves unit"] = r.preserves_unit;
    rep.body["monotone"] = r.monotone;
    rep.body["bijective"] = is_bijective(a, b, f);
    if (r.operations) rep.body["kernel"] = format_subset(a, hom_kernel(a, b, f));
    rep.code = r.operations ? kHolds : kFails;
    return rep;
  }
  HomSearchOptions opt;
  opt.iso_only = iso;
  opt.workers = workers;
  opt.audit = audit;
  std::vector<Homomorphism> maps = enumerate_homomorphisms(a, b, opt);
  rep.body["mode"] = iso ? "isomorphisms" : "homomorphisms";
  rep.body["count"] = maps.size();
  Json list = Json::array();
  for (const Homomorphism& f : maps) list.push_back(arrows(a, b, f.map));
  rep.body["maps"] = list;
  return rep;
}

Report cmd_find(std::size_t size, const std::string& core_name,
                const std::vector<std::string>& required,
                std::optional<std::size_t> limit, const std::string& emit,
                bool tables, bool audit, std::size_t workers) {
  SearchConstraints c;
  c.size = size;
  auto core = parse_axiom_system(core_name);
  if (!core) {
    throw Error(ErrorKind::kParse, "unknown search core '" + core_name + "'");
  }
  c.core = *core;
  for (const std::string& r : required) {
    auto flag = parse_model_flag(r);
    if (!flag) throw Error(ErrorKind::kParse, "unknown model flag '" + r + "'");
    c.required.push_back(*flag);
  }
  c.limit = limit;
  c.workers = workers;
  c.audit = audit;
  std::vector<FiniteAlgebra> models = enumerate_models(c);
  Report rep;
  rep.body["size"] = size;
  rep.body["core"] = std::string(to_string(c.core));
  Json req = Json::array();
  for (const std::string& r : required) req.push_back(r);
  rep.body["required"] = req;
  rep.body["count"] = models.size();
  Json list = Json::array();
  for (const FiniteAlgebra& m : models) {
    if (tables) {
      list.push_back(serialize(m));
    } else {
      list.push_back(m.name());
    }
  }
  rep.body["models"] = list;
  if (!emit.empty()) {
    Json paths = Json::array();
    for (const std::string& p : emit_models(models, emit)) paths.push_back(p);
    rep.body["written"] = paths;
  }
  return rep;
}

Report cmd_meta(std::size_t max_size, bool allow, std::size_t workers) {
  MetaOptions opt;
  opt.max_size = max_size;
  opt.workers = workers;
  opt.allow_counterexamples = true;
  MetaTheoremReport r = verify_meta_theorems(opt);
  Report rep;
  rep.body["max size"] = r.max_size;
  Json counts = Json::array();
  for (std::size_t c : r.models_per_size) counts.push_back(c);
  rep.body["pseudo-BE models per size"] = counts;
  Json list = Json::array();
  for (const TheoremCheck& t : r.theorems) {
    Json j;
    j["theorem"] = t.name;
    j["models checked"] = t.models_checked;
    j["counterexamples"] = t.counterexamples;
    if (t.first_counterexample) {
      j["detail"] = t.detail;
      j["first counterexample"] = *t.first_counterexample;
    }
    list.push_back(j);
  }
  rep.body["theorems"] = list;
  rep.body["status"] = r.clean() ? "no counterexamples" : "counterexamples found";
  if (!r.clean() && !allow) {
    throw Error(ErrorKind::kConsistencyAlarm,
                "meta sweep found counterexamples; rerun with "
                "--allow-counterexamples for the report");
  }
  rep.code = r.clean() ? kHolds : kFails;
  return rep;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Workbench for finite pseudo-BE algebras", "psbe"};
  app.require_subcommand(1);
  Common common;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", common.format, "Output format")
        ->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--workers", common.workers, "Worker threads")
        ->check(CLI::PositiveNumber);
  };

  std::string alg;
  std::string alg_b;
  std::string verify;
  std::string system = "pseudo-BE";
  std::string ds_literal;
  std::string kind;
  bool flag_normal = false, flag_fantastic = false, flag_involutive = false;
  bool flag_prime = false, flag_maximal = false;
  bool vertices = false, morphism = false, rays = false, enumerate = false;
  bool commutative = false, iso = false, audit = false, tables = false;
  bool allow = false;
  std::size_t size = 0;
  std::size_t max_size = 3;
  std::string core = "pseudo-BE";
  std::vector<std::string> required;
  std::optional<std::size_t> limit;
  std::string emit;

  auto* check = app.add_subcommand("check", "Check an axiom system");
  check->add_option("algebra", alg)->required();
  check->add_option("--system", system, "Axiom system");
  add_common(check);

  auto* cls = app.add_subcommand("classify", "Classify an algebra");
  cls->add_option("algebra", alg)->required();
  add_common(cls);

  auto* ds = app.add_subcommand("ds", "Enumerate deductive systems");
  ds->add_option("algebra", alg)->required();
  auto* g = ds->add_option_group("filter");
  g->add_flag("--normal", flag_normal);
  g->add_flag("--fantastic", flag_fantastic);
  g->add_flag("--involutive", flag_involutive);
  g->add_flag("--prime", flag_prime);
  g->add_flag("--maximal", flag_maximal);
  g->require_option(0, 1);
  add_common(ds);

  auto* quo = app.add_subcommand("quotient", "Quotient by a deductive system");
  quo->add_option("algebra", alg)->required();
  quo->add_option("--ds", ds_literal, "Deductive system, e.g. {1,a,d}")
      ->required();
  add_common(quo);

  auto* st = app.add_subcommand("states", "Bosbach states");
  st->add_option("algebra", alg)->required();
  auto* vv = st->add_flag("--vertices", vertices);
  st->add_option("--verify", verify, "State file")->excludes(vv);
  st->add_flag("--morphism", morphism);
  add_common(st);

  auto* ms = app.add_subcommand("measures", "Measures");
  ms->add_option("algebra", alg)->required();
  auto* mr = ms->add_flag("--rays", rays);
  ms->add_option("--verify", verify, "Measure file")->excludes(mr);
  add_common(ms);

  auto* in = app.add_subcommand("internal", "Internal states and SMOs");
  in->add_option("algebra", alg)->required();
  in->add_option("--kind", kind, "I, II or smo")
      ->required()
      ->check(CLI::IsMember({"I", "II", "smo"}));
  auto* ie = in->add_flag("--enumerate", enumerate);
  in->add_option("--verify", verify, "Operator file")->excludes(ie);
  in->add_flag("--audit", audit, "Disable the unit restriction");
  add_common(in);

  auto* va = app.add_subcommand("valuations", "Pseudo-valuations");
  va->add_option("algebra", alg)->required();
  auto* vr = va->add_flag("--rays", rays);
  va->add_option("--verify", verify, "Valuation file")->excludes(vr);
  va->add_flag("--commutative", commutative);
  add_common(va);

  auto* hom = app.add_subcommand("hom", "Homomorphisms");
  hom->add_option("source", alg)->required();
  hom->add_option("target", alg_b)->required();
  auto* he = hom->add_flag("--enumerate", enumerate);
  auto* hi = hom->add_flag("--iso", iso);
  hom->add_option("--verify", verify, "Map file")->excludes(he)->excludes(hi);
  hom->add_flag("--audit", audit, "Plain generate-and-test");
  add_common(hom);

  auto* find = app.add_subcommand("find", "Enumerate models");
  find->add_option("--size", size)->required()->check(CLI::PositiveNumber);
  find->add_option("--core", core, "pseudo-BE, pseudo-BCK, P-system, Q-system");
  find->add_option("--require", required, "Model flag, repeatable");
  find->add_option("--limit", limit);
  find->add_option("--emit", emit, "Directory for .alg files");
  find->add_flag("--tables", tables, "Print full tables");
  find->add_flag("--audit", audit, "Disable pruning");
  add_common(find);

  auto* meta = app.add_subcommand("meta", "Meta-theorem sweep");
  meta->add_option("--max-size", max_size)->check(CLI::PositiveNumber);
  meta->add_flag("--allow-counterexamples", allow);
  add_common(meta);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kHolds;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kHolds;
  } catch (const CLI::ParseError& e) {
    err << "error: usage: " << e.what() << "\n";
    return kUsage;
  }

  Report rep;
  try {
    if (check->parsed()) {
      rep = cmd_check(alg, system);
    } else if (cls->parsed()) {
      rep = cmd_classify(alg);
    } else if (ds->parsed()) {
      std::string filter = flag_normal       ? "normal"
                           : flag_fantastic  ? "fantastic"
                           : flag_involutive ? "involutive"
                           : flag_prime      ? "prime"
                           : flag_maximal    ? "maximal"
                                             : "";
      rep = cmd_ds(alg, filter);
    } else if (quo->parsed()) {
      rep = cmd_quotient(alg, ds_literal);
    } else if (st->parsed()) {
      rep = cmd_states(alg, verify, morphism);
    } else if (ms->parsed()) {
      rep = cmd_measures(alg, verify);
    } else if (in->parsed()) {
      rep = cmd_internal(alg, kind, verify, audit, common.workers);
    } else if (va->parsed()) {
      rep = cmd_valuations(alg, verify, commutative);
    } else if (hom->parsed()) {
      rep = cmd_hom(alg, alg_b, verify, iso, audit, common.workers);
    } else if (find->parsed()) {
      rep = cmd_find(size, core, required, limit, emit, tables, audit,
                     common.workers);
    } else if (meta->parsed()) {
      rep = cmd_meta(max_size, allow, common.workers);
    }
  } catch (const Error& e) {
    err << "error: " << to_string(e.kind()) << ": " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  if (common.format == "json") {
    out << rep.body.dump(2) << "\n";
  } else {
    render(rep.body, 0, out);
  }
  return rep.code;
}

}  // namespace psbe::cli
