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


#include "psbe/meta.hpp"

#include <functional>
#include <map>

#include "psbe/axioms.hpp"
#include "psbe/deductive.hpp"
#include "psbe/error.hpp"
#include "psbe/model_finder.hpp"
#include "psbe/operators.hpp"
#include "psbe/parallel.hpp"
#include "psbe/states.hpp"
#include "psbe/valuations.hpp"

namespace psbe {

namespace {

// nullopt: hypothesis does not apply. Empty string: conclusion holds.
// Otherwise the reason the conclusion fails.
using Verdict = std::optional<std::string>;

struct Theorem {
  std::string name;
  AxiomSystem core;
  std::function<Verdict(const FiniteAlgebra&)> check;
};

const std::string kHolds;

Verdict holds_if(bool ok, const std::string& why) {
  return ok ? kHolds : why;
}

bool be(const FiniteAlgebra& a) { return satisfies(a, AxiomSystem::kPseudoBE); }

bool commutative_be(const FiniteAlgebra& a) {
  return be(a) && satisfies(a, AxiomSystem::kCommutative);
}

Verdict every_ds(const FiniteAlgebra& a,
                 const std::function<CheckResult(const ElementSubset&)>& p,
                 const std::string& what) {
  for (const ElementSubset& d : enumerate_ds(a).systems) {
    if (auto r = p(d); !r) {
      return format_subset(a, d) + " is not " + what + " (" + r.rule + ")";
    }
  }
  return kHolds;
}

Vector sum(const std::vector<Vector>& vs, std::size_t n) {
  Vector out(n);
  for (const Vector& v : vs) {
    for (std::size_t i = 0; i < n; ++i) out[i] += v[i];
  }
  return out;
}

// Cone rays plus their sum.
std::vector<Vector> valuation_samples(const FiniteAlgebra& a) {
  std::vector<Vector> out = valuation_cone(a).rays;
  out.push_back(sum(out, a.size()));
  return out;
}

std::vector<Theorem> theorems() {
  std::vector<Theorem> t;
  t.push_back({"pseudo-BCK algebras are pseudo-BE algebras",
               AxiomSystem::kPseudoBCK, [](const FiniteAlgebra& a) {
                 return holds_if(be(a), "pseudo-BE axioms fail");
               }});
  t.push_back({"commutative pseudo-BE algebras are pseudo-BCK algebras",
               AxiomSystem::kPseudoBE, [](const FiniteAlgebra& a) -> Verdict {
                 if (!commutative_be(a)) return std::nullopt;
                 return holds_if(satisfies(a, AxiomSystem::kPseudoBCK),
                                 "pseudo-BCK axioms fail");
               }});
  t.push_back({"finite commutative pseudo-BE algebras are BE algebras",
               AxiomSystem::kPseudoBE, [](const FiniteAlgebra& a) -> Verdict {
                 if (!commutative_be(a)) return std::nullopt;
                 return holds_if(a.same_operations(), "-> differs from ~>");
               }});
  t.push_back({"commutative pseudo-BE algebras satisfy the P identities",
               AxiomSystem::kPseudoBE, [](const FiniteAlgebra& a) -> Verdict {
                 if (!commutative_be(a)) return std::nullopt;
                 return holds_if(satisfies(a, AxiomSystem::kPSystem),
                                 "P identities fail");
               }});
  t.push_back({"the P identities define commutative pseudo-BE algebras",
               AxiomSystem::kPSystem, [](const FiniteAlgebra& a) {
                 return holds_if(commutative_be(a),
                                 "not a commutative pseudo-BE algebra");
               }});
  t.push_back({"commutative pseudo-BE algebras satisfy the Q identities",
               AxiomSystem::kPseudoBE, [](const FiniteAlgebra& a) -> Verdict {
                 if (!commutative_be(a)) return std::nullopt;
                 return holds_if(satisfies(a, AxiomSystem::kQSystem),
                                 "Q identities fail");
               }});
  t.push_back({"the Q identities define commutative pseudo-BE algebras",
               AxiomSystem::kQSystem, [](const FiniteAlgebra& a) {
                 return holds_if(commutative_be(a),
                                 "not a commutative pseudo-BE algebra");
               }});
  t.push_back({"deductive systems of distributive algebras are normal",
               AxiomSystem::kPseudoBE, [](const FiniteAlgebra& a) -> Verdict {
                 if (!satisfies(a, AxiomSystem::kDistributive)) {
                   return std::nullopt;
                 }
                 return every_ds(
                     a, [&](const ElementSubset& d) { return is_normal(a, d); },
                     "normal");
               }});
  t.push_back({"deductive systems of commutative algebras are fantastic",
               AxiomSystem::kPseudoBE, [](const FiniteAlgebra& a) -> Verdict {
                 if (!commutative_be(a)) return std::nullopt;
                 return every_ds(
                     a,
                     [&](const ElementSubset& d) { return is_fantastic(a, d); },
                     "fantastic");
               }});
  t.push_back({"under condition (A) a system containing a fantastic one is "
               "fantastic",
               AxiomSystem::kPseudoBE, [](const FiniteAlgebra& a) -> Verdict {
                 if (!satisfies(a, AxiomSystem::kConditionA)) {
                   return std::nullopt;
                 }
                 const auto systems = enumerate_ds(a).systems;
                 for (const ElementSubset& d : systems) {
                   if (!is_fantastic(a, d)) continue;
                   for (const ElementSubset& e : systems) {
                     if (d.is_subset_of(e) && !is_fantastic(a, e)) {
                       return format_subset(a, e) + " contains fantastic " +
                              format_subset(a, d) + " but is not fantastic";
                     }
                   }
                 }
                 return kHolds;
               }});
  t.push_back({"fantastic deductive systems of bounded algebras are "
               "involutive",
               AxiomSystem::kPseudoBE, [](const FiniteAlgebra& a) -> Verdict {
                 if (!a.is_bounded()) return std::nullopt;
                 for (const ElementSubset& d : enumerate_ds(a).systems) {
                   if (is_fantastic(a, d) && !is_involutive_ds(a, d)) {
                     return format_subset(a, d) + " is not involutive";
                   }
                 }
                 return kHolds;
               }});
  t.push_back({"Bosbach state kernels are fantastic deductive systems",
               AxiomSystem::kPseudoBE, [](const FiniteAlgebra& a) -> Verdict {
                 std::vector<Vector> states = state_space(a).polytope.vertices;
                 if (states.empty()) return kHolds;
                 Vector mid = sum(states, a.size());
                 for (Rational& v : mid) {
                   v /= Rational(static_cast<std::int64_t>(states.size()));
                 }
                 states.push_back(mid);
                 for (const Vector& s : states) {
                   ElementSubset k = state_kernel(a, s);
                   if (!is_deductive_system(a, k)) {
                     return "kernel of (" + format_vector(s) +
                            ") is not a deductive system";
                   }
                   if (!is_fantastic(a, k)) {
                     return "kernel of (" + format_vector(s) +
                            ") is not fantastic";
                   }
                 }
                 return kHolds;
               }});
  t.push_back({"pseudo-valuations are weak pseudo-valuations",
               AxiomSystem::kPseudoBE, [](const FiniteAlgebra& a) -> Verdict {
                 for (const Vector& phi : valuation_samples(a)) {
                   if (auto r = is_weak_pseudo_valuation(a, phi); !r) {
                     return "(" + format_vector(phi) + ") fails " + r.rule;
                   }
                 }
                 return kHolds;
               }});
  t.push_back({"pseudo-valuations on commutative algebras are commutative",
               AxiomSystem::kPseudoBE, [](const FiniteAlgebra& a) -> Verdict {
                 if (!commutative_be(a)) return std::nullopt;
                 for (const Vector& phi : valuation_samples(a)) {
                   if (auto r = is_commutative_pv(a, phi); !r) {
                     return "(" + format_vector(phi) + ") fails " + r.rule;
                   }
                 }
                 return kHolds;
               }});
  t.push_back({"type II internal states of linearly ordered algebras are "
               "state-morphism operators",
               AxiomSystem::kPseudoBE, [](const FiniteAlgebra& a) -> Verdict {
                 if (!is_linear(a)) return std::nullopt;
                 for (const UnaryOperator& mu :
                      enumerate_internal_states(a, InternalStateKind::kTypeII)) {
                   if (auto r = is_smo(a, mu); !r) {
                     std::string images;
                     for (ElementId v : mu.map) {
                       images += (images.empty() ? "" : " ") + a.token(v);
                     }
                     return "(" + images + ") fails " + r.rule;
                   }
                 }
                 return kHolds;
               }});
  return t;
}

}  // namespace

bool MetaTheoremReport::clean() const {
  for (const TheoremCheck& t : theorems) {
    if (t.counterexamples != 0) return false;
  }
  return true;
}

MetaTheoremReport verify_meta_theorems(const MetaOptions& options) {
  if (options.max_size > kMaxSweepSize) {
    throw Error(ErrorKind::kSizeGuard, "meta sweep is limited to n <= " +
                                           std::to_string(kMaxSweepSize));
  }
  const std::vector<Theorem> list = theorems();
  MetaTheoremReport report;
  report.max_size = options.max_size;
  for (const Theorem& th : list) {
    TheoremCheck check;
    check.name = th.name;
    report.theorems.push_back(std::move(check));
  }

  for (std::size_t n = 1; n <= options.max_size; ++n) {
    std::map<AxiomSystem, std::vector<FiniteAlgebra>> pools;
    for (const Theorem& th : list) {
      if (pools.count(th.core)) continue;
      SearchConstraints c;
      c.size = n;
      c.core = th.core;
      c.workers = options.workers;
      pools.emplace(th.core, enumerate_models(c));
    }
    report.models_per_size.push_back(pools.at(AxiomSystem::kPseudoBE).size());
    for (std::size_t i = 0; i < list.size(); ++i) {
      const auto& models = pools.at(list[i].core);
      auto verdicts = parallel_map(
          models.size(), options.workers,
          [&](std::size_t m) { return list[i].check(models[m]); });
      TheoremCheck& out = report.theorems[i];
      for (std::size_t m = 0; m < models.size(); ++m) {
        if (!verdicts[m]) continue;
        ++out.models_checked;
        if (verdicts[m]->empty()) continue;
        if (++out.counterexamples == 1) {
          out.first_counterexample = serialize(models[m]);
          out.detail = *verdicts[m];
        }
      }
    }
  }
  if (!options.allow_counterexamples) {
    for (const TheoremCheck& t : report.theorems) {
      if (t.counterexamples != 0) {
        throw Error(ErrorKind::kConsistencyAlarm,
                    "counterexample to '" + t.name + "': " + t.detail);
      }
    }
  }
  return report;
}

}  // namespace psbe
