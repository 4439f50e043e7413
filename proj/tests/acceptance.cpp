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


// Acceptance run: one PASS/FAIL line per criterion. All comparisons are exact
// (rational arithmetic, set equality); the only tolerances are the wall-clock
// limits below.
//
//   acceptance [--known-fail N...]
//
// Exit status is 0 when the failing criteria are exactly the known-fail list.

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "psbe/algebra.hpp"
#include "psbe/assignment.hpp"
#include "psbe/axioms.hpp"
#include "psbe/deductive.hpp"
#include "psbe/meta.hpp"
#include "psbe/model_finder.hpp"
#include "psbe/operators.hpp"
#include "psbe/states.hpp"
#include "psbe/valuations.hpp"
#include "support.hpp"

namespace {

using namespace psbe;
using testing::fixture;
using testing::load_fixture;

constexpr double kSweep3Seconds = 60.0;
constexpr double kSweep4Seconds = 600.0;
constexpr int kRandomConePoints = 20;
constexpr std::uint64_t kSeed = 2026;

// Collects failed sub-checks for one criterion.
struct Verdict {
  std::vector<std::string> failures;
  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
};

using Sets = std::set<std::string>;

Sets sets_of(const FiniteAlgebra& a, const std::vector<ElementSubset>& family) {
  Sets out;
  for (const auto& d : family) out.insert(format_subset(a, d));
  return out;
}

Sets tagged(const FiniteAlgebra& a, const DSFamily& f, bool DSTags::*flag) {
  std::vector<DSTags> tags = tag_family(a, f);
  Sets out;
  for (std::size_t i = 0; i < f.systems.size(); ++i) {
    if (tags[i].*flag) out.insert(format_subset(a, f.systems[i]));
  }
  return out;
}

std::string show(const Sets& s) {
  std::string out = "{";
  for (const auto& x : s) out += (out.size() > 1 ? "," : "") + x;
  return out + "}";
}

Vector values(const FiniteAlgebra& a, const std::string& file) {
  return load_assignment(a, fixture(file)).values;
}

std::vector<FiniteAlgebra> fixtures_and_models(std::size_t max_n) {
  std::vector<FiniteAlgebra> pool;
  for (const auto& name : testing::algebra_fixtures()) pool.push_back(load_fixture(name));
  for (std::size_t n = 2; n <= max_n; ++n) {
    SearchConstraints c;
    c.size = n;
    for (auto& m : enumerate_models(c)) pool.push_back(m);
  }
  return pool;
}

void c1(Verdict& v) {
  FiniteAlgebra a = load_fixture("bck4.alg");
  DSFamily f = enumerate_ds(a);
  Sets all = sets_of(a, f.systems);
  v.expect(all == Sets{"{1}", "{1,b}", "{1,a,b,c}"}, "DS = " + show(all));
  Sets maximal = tagged(a, f, &DSTags::maximal);
  v.expect(maximal == Sets{"{1,b}"}, "maximal = " + show(maximal));
  Sets prime = tagged(a, f, &DSTags::prime);
  v.expect(prime == Sets{"{1,b}"}, "prime = " + show(prime));
}

void c2(Verdict& v) {
  FiniteAlgebra a = load_fixture("nonbck6.alg");
  v.expect(satisfies(a, AxiomSystem::kPseudoBE), "pseudo-BE fails");
  AxiomReport r = check_axioms(a, AxiomSystem::kPseudoBCK);
  auto it = std::find_if(r.violations.begin(), r.violations.end(),
                         [](const Violation& x) { return x.axiom == "psBCK6"; });
  v.expect(!r.holds && it != r.violations.end(), "no antisymmetry violation");
  if (it != r.violations.end()) {
    ElementId x = it->witness.at(0), y = it->witness.at(1);
    v.expect(x != y && a.below(x, y) && a.below(y, x),
             "witness " + format_tuple(a, it->witness) + " not mutually below");
  }
  v.expect(satisfies(a, AxiomSystem::kDistributive), "distributivity fails");
}

void c3(Verdict& v) {
  FiniteAlgebra six = load_fixture("nonbck6.alg");
  DSFamily f6 = enumerate_ds(six);
  v.expect(f6.systems.size() == 6, "six-element DS count");
  Sets fant = tagged(six, f6, &DSTags::fantastic);
  v.expect(fant == Sets{"{1,e}", "{1,a,e}", "{1,b,c,d,e}", "{1,a,b,c,d,e}"},
           "fantastic = " + show(fant));
  FiniteAlgebra five = load_fixture("cond_a5.alg");
  DSFamily f5 = enumerate_ds(five);
  const Sets want{"{1}", "{1,a,d}", "{1,b,c}", "{1,a,b,c,d}"};
  v.expect(sets_of(five, f5.systems) == want, "five-element DS");
  v.expect(tagged(five, f5, &DSTags::normal) == want, "five-element normal");
  v.expect(tagged(five, f5, &DSTags::fantastic) == want, "five-element fantastic");
}

void c4(Verdict& v) {
  FiniteAlgebra a = load_fixture("cond_a5.alg");
  StateSpaceResult r = state_space(a);
  v.expect(r.affine.dimension() == 2, "dimension");
  ElementId ea = *a.find("a"), eb = *a.find("b"), ec = *a.find("c"),
            ed = *a.find("d");
  // The implied equalities hold on the whole affine hull exactly when they
  // hold at the particular solution and on every basis vector.
  bool eq = r.affine.particular[ea] == r.affine.particular[ed] &&
            r.affine.particular[eb] == r.affine.particular[ec];
  for (const Vector& b : r.affine.basis) eq = eq && b[ea] == b[ed] && b[eb] == b[ec];
  v.expect(eq, "s(a)=s(d), s(b)=s(c) not implied");
  v.expect(r.polytope.vertices.size() == 4, "vertex count");
  for (const char* f : {"s1_half.state", "s2_third.state", "s3_half_third.state",
                        "s4_one.state"}) {
    v.expect(is_bosbach_state(a, values(a, f)).holds, std::string(f) + " rejected");
  }
}

void c5(Verdict& v) {
  FiniteAlgebra a = load_fixture("cond_a5.alg");
  for (const char* f : {"s1_half.state", "s4_one.state"}) {
    v.expect(is_state_morphism(a, values(a, f)).holds, std::string(f) + " rejected");
  }
  Vector s3 = values(a, "s3_half_third.state");
  CheckResult r = is_state_morphism(a, s3);
  v.expect(!r.holds, "s3 accepted");
  if (!r.holds && r.witness.size() == 2) {
    ElementId x = r.witness[0], y = r.witness[1];
    v.expect(s3[vee1(a, x, y)] == Rational(1) && max(s3[x], s3[y]) < Rational(1),
             "witness " + format_tuple(a, r.witness) + " does not exhibit the gap");
  }
  for (const char* f : {"s1_half.state", "s2_third.state", "s3_half_third.state",
                        "s4_one.state"}) {
    Vector s = values(a, f);
    v.expect(sm_characterization_check(a, s).holds == is_state_morphism(a, s).holds,
             std::string("characterization disagrees on ") + f);
  }
}

void c6(Verdict& v) {
  FiniteAlgebra a = load_fixture("cond_a5.alg");
  for (const char* f : {"m1_one.measure", "m2_one.measure", "m4_zero.measure"}) {
    Vector m = values(a, f);
    v.expect(is_measure(a, m).holds && is_measure_morphism(a, m).holds,
             std::string(f) + " rejected");
  }
  Vector m3 = values(a, "m3_one_two.measure");
  v.expect(is_measure(a, m3).holds, "m3 not a measure");
  v.expect(!is_measure_morphism(a, m3).holds, "m3 accepted as morphism");
  v.expect(measure_cone(a).rays.size() == 2, "ray count");
  Sets kernels;
  for (const char* f : {"m1_one.measure", "m2_one.measure", "m3_one_two.measure",
                        "m4_zero.measure"}) {
    kernels.insert(format_subset(a, measure_kernel(a, values(a, f))));
  }
  v.expect(kernels == Sets{"{1,a,d}", "{1,b,c}", "{1}", "{1,a,b,c,d}"},
           "kernels " + show(kernels));
}

void c7(Verdict& v) {
  FiniteAlgebra a = load_fixture("cond_a5.alg");
  auto rows = [&](const std::vector<UnaryOperator>& ops) {
    Sets out;
    for (const auto& mu : ops) {
      std::string r;
      for (ElementId x : mu.map) r += (r.empty() ? "" : " ") + a.token(x);
      out.insert(r);
    }
    return out;
  };
  const Sets is{"1 a a a a", "1 b b b b", "1 c c c c", "1 d d d d", "1 d c c d",
                "1 1 b b 1", "1 1 c c 1", "1 a 1 1 a", "1 d 1 1 d", "1 1 1 1 1"};
  const Sets smo{"1 d c c d", "1 1 b b 1", "1 1 c c 1", "1 a 1 1 a", "1 d 1 1 d",
                 "1 1 1 1 1", "1 a b c d", "1 a c c d", "1 d b c d"};
  Sets t1 = rows(enumerate_internal_states(a, InternalStateKind::kTypeI));
  Sets t2 = rows(enumerate_internal_states(a, InternalStateKind::kTypeII));
  Sets s = rows(enumerate_smo(a));
  v.expect(t1 == is, "type I set");
  v.expect(t2 == is, "type II set");
  v.expect(s == smo, "SMO set");
  v.expect(std::any_of(s.begin(), s.end(), [&](const auto& r) { return !t1.contains(r); }),
           "SMO minus IS empty");
  const std::vector<std::pair<std::string, std::string>> kernels = {
      {"1 a a a a", "{1}"},       {"1 b b b b", "{1}"},
      {"1 c c c c", "{1}"},       {"1 d d d d", "{1}"},
      {"1 d c c d", "{1}"},       {"1 1 b b 1", "{1,a,d}"},
      {"1 1 c c 1", "{1,a,d}"},   {"1 a 1 1 a", "{1,b,c}"},
      {"1 d 1 1 d", "{1,b,c}"},   {"1 1 1 1 1", "{1,a,b,c,d}"}};
  for (const auto& [images, want] : kernels) {
    std::string got = format_subset(a, kernel_image(a, operator_of(a, images)).kernel);
    v.expect(got == want, "kernel of " + images + " = " + got);
  }
}

void c8(Verdict& v) {
  FiniteAlgebra a = load_fixture("cond_a5.alg");
  Vector phi = values(a, "phi_1_3.valuation");
  v.expect(is_pseudo_valuation(a, phi).holds, "phi not pv");
  v.expect(is_valuation(a, phi).holds, "phi not valuation");
  v.expect(is_commutative_pv(a, phi).holds, "phi not commutative");
  CharacterizationReport c = characterization_crosscheck(a, phi);
  v.expect(c.pv4.holds && c.pv5.holds && c.pv_agrees, "pv characterization");
  v.expect(c.cpv3.holds && c.cpv4.holds && c.cpv_agrees, "cpv characterization");
  Vector weak = values(a, "phi_weak.valuation");
  v.expect(is_weak_pseudo_valuation(a, weak).holds, "weak rejected");
  v.expect(!is_pseudo_valuation(a, weak).holds, "weak accepted as pv");
  ValuationCone cone = valuation_cone(a);
  Sets supports;
  for (const Vector& r : cone.rays) {
    ElementSubset s(a.size());
    for (ElementId x = 0; x < a.size(); ++x) {
      if (!r[x].is_zero()) s.insert(x);
    }
    supports.insert(format_subset(a, s));
  }
  v.expect(cone.rays.size() == 2 && supports == Sets{"{a,d}", "{b,c}"},
           "ray supports " + show(supports));
  std::mt19937_64 rng(kSeed);
  std::uniform_int_distribution<int> num(0, 12), den(1, 6);
  for (int i = 0; i < kRandomConePoints; ++i) {
    Vector p(a.size(), Rational(0));
    for (const Vector& r : cone.rays) {
      Rational t(BigInt(num(rng)), BigInt(den(rng)));
      for (std::size_t k = 0; k < p.size(); ++k) p[k] += t * r[k];
    }
    bool pv = is_pseudo_valuation(a, p).holds;
    v.expect(pv, "cone point " + format_vector(p) + " not pv");
    if (pv) {
      v.expect(is_commutative_pv(a, p).holds, "cone point " + format_vector(p) +
                                                  " not commutative");
    }
  }
}

void c9(Verdict& v) {
  for (const FiniteAlgebra& a : fixtures_and_models(4)) {
    for (const Vector& s : state_space(a).polytope.vertices) {
      ElementSubset k = state_kernel(a, s);
      v.expect(is_deductive_system(a, k) && is_fantastic(a, k).holds,
               a.name() + ": state kernel " + format_subset(a, k));
    }
    for (const Vector& m : measure_cone(a).rays) {
      ElementSubset k = measure_kernel(a, m);
      v.expect(is_deductive_system(a, k) && is_normal(a, k).holds &&
                   is_fantastic(a, k).holds,
               a.name() + ": measure kernel " + format_subset(a, k));
    }
    if (!a.is_bounded()) continue;
    for (const Vector& s : state_space(a).polytope.vertices) {
      if (!s[*a.bottom()].is_zero()) continue;
      ElementSubset k = state_kernel(a, s);
      v.expect(is_involutive_ds(a, k).holds,
               a.name() + ": kernel not involutive " + format_subset(a, k));
    }
  }
}

void c10(Verdict& v) {
  FiniteAlgebra a = load_fixture("cond_a5.alg");
  ElementSubset k = state_kernel(a, values(a, "s1_half.state"));
  v.expect(format_subset(a, k) == "{1,a,d}", "kernel " + format_subset(a, k));
  FiniteAlgebra q = quotient(a, k).quotient;
  v.expect(q.same_operations(), "quotient arrow != squig");
  bool comm = true;
  for (ElementId x = 0; x < q.size(); ++x) {
    for (ElementId y = 0; y < q.size(); ++y) {
      comm = comm && vee1(q, x, y) == vee1(q, y, x);
    }
  }
  v.expect(comm, "quotient join not commutative");
}

void c11(Verdict& v) {
  for (auto [n, limit] : {std::pair{std::size_t{3}, kSweep3Seconds},
                          std::pair{std::size_t{4}, kSweep4Seconds}}) {
    MetaOptions o;
    o.max_size = n;
    o.allow_counterexamples = true;
    auto t0 = std::chrono::steady_clock::now();
    MetaTheoremReport r = verify_meta_theorems(o);
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    for (const auto& t : r.theorems) {
      v.expect(t.counterexamples == 0, "n<=" + std::to_string(n) + ": " + t.name);
    }
    v.expect(secs < limit, "n<=" + std::to_string(n) + " took " + std::to_string(secs) + "s");
  }
}

std::string run_cli(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> args;
  for (std::string tok; in >> tok;) args.push_back(tok);
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return std::to_string(code) + "\n" + out.str() + err.str();
}

void c12(Verdict& v) {
  std::vector<std::filesystem::path> files;
  for (const auto& e : std::filesystem::directory_iterator(PSBE_GOLDEN_DIR)) {
    if (e.path().extension() == ".args") files.push_back(e.path());
  }
  std::sort(files.begin(), files.end());
  auto saved = std::filesystem::current_path();
  std::filesystem::current_path(PSBE_FIXTURE_DIR);
  for (const auto& f : files) {
    std::ifstream in(f);
    std::string line;
    std::getline(in, line);
    std::string first = run_cli(line);
    for (int i = 0; i < 2; ++i) v.expect(run_cli(line) == first, "rerun: " + line);
    if (first.rfind("2\n", 0) == 0) continue;
    v.expect(run_cli(line + " --workers 1") == first, "1 worker: " + line);
    v.expect(run_cli(line + " --workers 8") == first, "8 workers: " + line);
  }
  std::filesystem::current_path(saved);
}

void c13(Verdict& v) {
  struct Core {
    AxiomSystem system;
    std::size_t audit_max;
  };
  // The Q core forces no cells, so unpruned search stops at n = 2.
  for (Core core : {Core{AxiomSystem::kPseudoBE, 3}, Core{AxiomSystem::kPseudoBCK, 3},
                    Core{AxiomSystem::kPSystem, 3}, Core{AxiomSystem::kQSystem, 2}}) {
    for (std::size_t n = 1; n <= core.audit_max; ++n) {
      SearchConstraints c;
      c.size = n;
      c.core = core.system;
      auto pruned = enumerate_models(c);
      c.audit = true;
      v.expect(pruned == enumerate_models(c),
               std::string(to_string(core.system)) + " n=" + std::to_string(n));
    }
  }
  for (std::size_t n = 1; n <= 3; ++n) {
    SearchConstraints c;
    c.size = n;
    std::size_t want = testing::naive_model_count(
        n, testing::Forced::kUnitRowsColumnsDiagonal, testing::naive_pseudo_be);
    v.expect(enumerate_models(c).size() == want, "oracle count n=" + std::to_string(n));
  }
  for (const auto& name : testing::algebra_fixtures()) {
    FiniteAlgebra a = load_fixture(name);
    std::set<std::uint64_t> got;
    for (const auto& d : enumerate_ds(a).systems) got.insert(d.mask());
    v.expect(got == testing::naive_ds_masks(a), "DS oracle on " + name);
  }
}

}  // namespace

int main(int argc, char** argv) {
  std::set<int> known;
  for (int i = 1; i < argc; ++i) {
    std::string arg = argv[i];
    if (arg == "--known-fail") continue;
    known.insert(std::stoi(arg));
  }
  const std::vector<std::pair<std::string, std::function<void(Verdict&)>>> criteria = {
      {"small algebra systems, prime and maximal", c1},
      {"non-antisymmetric algebra axioms", c2},
      {"fantastic and normal systems", c3},
      {"state space", c4},
      {"state-morphisms", c5},
      {"measures", c6},
      {"internal states and SMOs", c7},
      {"pseudo-valuations", c8},
      {"kernel classification", c9},
      {"quotient by a state kernel", c10},
      {"meta-theorem sweep", c11},
      {"determinism", c12},
      {"enumeration audit", c13},
  };
  std::set<int> failed;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Verdict v;
    try {
      criteria[i].second(v);
    } catch (const std::exception& e) {
      v.failures.push_back(std::string("exception: ") + e.what());
    }
    int id = static_cast<int>(i + 1);
    std::cout << "criterion " << id << ": " << (v.failures.empty() ? "PASS" : "FAIL")
              << "  " << criteria[i].first;
    if (!v.failures.empty()) {
      failed.insert(id);
      std::cout << "  [";
      for (std::size_t k = 0; k < v.failures.size(); ++k) {
        std::cout << (k ? "; " : "") << v.failures[k];
      }
      std::cout << "]";
    }
    std::cout << "\n";
  }
  if (failed != known) {
    std::cout << "failing set differs from the known-fail list\n";
    return 1;
  }
  return 0;
}
