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


#include "psbe/valuations.hpp"

#include <algorithm>

#include "psbe/axioms.hpp"
#include "psbe/deductive.hpp"
#include "psbe/error.hpp"

namespace psbe {

namespace {

void require_width(const FiniteAlgebra& a, const Vector& phi) {
  if (phi.size() != a.size()) {
    throw Error(ErrorKind::kPrecondition, "valuation width mismatch");
  }
}

void require_pv(const FiniteAlgebra& a, const Vector& phi) {
  if (auto r = is_pseudo_valuation(a, phi); !r) {
    throw Error(ErrorKind::kNotAPseudoValuation,
                "not a pseudo-valuation: " + r.rule + " fails");
  }
}

template <typename Pred>
CheckResult check_pairs(const FiniteAlgebra& a, const char* rule, Pred ok) {
  for (ElementId x = 0; x < a.size(); ++x) {
    for (ElementId y = 0; y < a.size(); ++y) {
      if (!ok(x, y)) return CheckResult::fail(rule, {x, y});
    }
  }
  return CheckResult::pass();
}

template <typename Pred>
CheckResult check_triples(const FiniteAlgebra& a, const char* rule, Pred ok) {
  for (ElementId x = 0; x < a.size(); ++x) {
    for (ElementId y = 0; y < a.size(); ++y) {
      for (ElementId z = 0; z < a.size(); ++z) {
        if (!ok(x, y, z)) return CheckResult::fail(rule, {x, y, z});
      }
    }
  }
  return CheckResult::pass();
}

}  // namespace

CheckResult is_pseudo_valuation(const FiniteAlgebra& a, const Vector& phi) {
  require_width(a, phi);
  if (!phi[a.unit()].is_zero()) return CheckResult::fail("pv1", {a.unit()});
  return check_pairs(a, "pv2", [&](ElementId x, ElementId y) {
    Rational d = phi[y] - phi[x];
    return d <= phi[a.arrow(x, y)] && d <= phi[a.squig(x, y)];
  });
}

CheckResult is_valuation(const FiniteAlgebra& a, const Vector& phi) {
  if (auto r = is_pseudo_valuation(a, phi); !r) return r;
  for (ElementId x = 0; x < a.size(); ++x) {
    if (x != a.unit() && phi[x].is_zero()) return CheckResult::fail("pv3", {x});
  }
  return CheckResult::pass();
}

CheckResult is_weak_pseudo_valuation(const FiniteAlgebra& a,
                                     const Vector& phi) {
  require_width(a, phi);
  return check_pairs(a, "pv6", [&](ElementId x, ElementId y) {
    Rational s = phi[x] + phi[y];
    return phi[a.arrow(x, y)] <= s && phi[a.squig(x, y)] <= s;
  });
}

CheckResult is_commutative_pv(const FiniteAlgebra& a, const Vector& phi) {
  require_pv(a, phi);
  if (auto r = check_pairs(a, "cpv1",
                           [&](ElementId x, ElementId y) {
                             return phi[a.arrow(vee1(a, x, y), x)] <=
                                    phi[a.arrow(y, x)];
                           });
      !r) {
    return r;
  }
  return check_pairs(a, "cpv2", [&](ElementId x, ElementId y) {
    return phi[a.squig(vee2(a, x, y), x)] <= phi[a.squig(y, x)];
  });
}

CharacterizationReport characterization_crosscheck(const FiniteAlgebra& a,
                                                   const Vector& phi) {
  require_width(a, phi);
  if (!phi[a.unit()].is_zero()) {
    throw Error(ErrorKind::kPrecondition, "phi(1) = 0 check fails");
  }
  CharacterizationReport r;
  r.pv4 = check_triples(a, "pv4", [&](ElementId x, ElementId y, ElementId z) {
    return phi[a.arrow(x, z)] <= phi[a.arrow(x, a.squig(y, z))] + phi[y];
  });
  r.pv5 = check_triples(a, "pv5", [&](ElementId x, ElementId y, ElementId z) {
    return phi[a.squig(x, z)] <= phi[a.squig(x, a.arrow(y, z))] + phi[y];
  });
  r.cpv3 = check_triples(a, "cpv3", [&](ElementId x, ElementId y, ElementId z) {
    return phi[a.arrow(vee1(a, x, y), x)] <=
           phi[a.arrow(z, a.arrow(y, x))] + phi[z];
  });
  r.cpv4 = check_triples(a, "cpv4", [&](ElementId x, ElementId y, ElementId z) {
    return phi[a.squig(vee2(a, x, y), x)] <=
           phi[a.squig(z, a.squig(y, x))] + phi[z];
  });
  bool pv = is_pseudo_valuation(a, phi).holds;
  r.pv_agrees = (r.pv4.holds && r.pv5.holds) == pv;
  if (pv) {
    r.cpv_agrees =
        (r.cpv3.holds && r.cpv4.holds) == is_commutative_pv(a, phi).holds;
  }
  if ((!r.pv_agrees || !r.cpv_agrees) && satisfies(a, AxiomSystem::kPseudoBE)) {
    throw Error(ErrorKind::kConsistencyAlarm,
                "triple characterization disagrees with the pair conditions");
  }
  return r;
}

ValuationCone valuation_cone(const FiniteAlgebra& a) {
  const std::size_t n = a.size();
  ValuationCone cone;
  Vector unit(n);
  unit[a.unit()] = 1;
  cone.equalities.push_back(unit);
  // phi(x op y) - phi(y) + phi(x) >= 0
  for (ElementId x = 0; x < n; ++x) {
    for (ElementId y = 0; y < n; ++y) {
      for (ElementId v : {a.arrow(x, y), a.squig(x, y)}) {
        Vector g(n);
        g[v] += 1;
        g[y] -= 1;
        g[x] += 1;
        if (std::all_of(g.begin(), g.end(),
                        [](const Rational& c) { return c.is_zero(); })) {
          continue;
        }
        if (std::find(cone.inequalities.begin(), cone.inequalities.end(), g) ==
            cone.inequalities.end()) {
          cone.inequalities.push_back(std::move(g));
        }
      }
    }
  }
  cone.rays = cone_rays(cone.equalities, cone.inequalities, n);
  for (const Vector& ray : cone.rays) {
    if (!is_pseudo_valuation(a, ray)) {
      throw Error(ErrorKind::kConsistencyAlarm,
                  "cone ray " + format_vector(ray) +
                      " is not a pseudo-valuation");
    }
  }
  return cone;
}

ElementSubset valuation_kernel(const FiniteAlgebra& a, const Vector& phi) {
  require_pv(a, phi);
  ElementSubset k(a.size());
  for (ElementId x = 0; x < a.size(); ++x) {
    if (phi[x].is_zero()) k.insert(x);
  }
  if (!satisfies(a, AxiomSystem::kPseudoBE)) return k;
  if (!is_deductive_system(a, k)) {
    throw Error(ErrorKind::kConsistencyAlarm,
                "kernel " + format_subset(a, k) + " is not a deductive system");
  }
  if (is_commutative_pv(a, phi) && !is_fantastic(a, k)) {
    throw Error(ErrorKind::kConsistencyAlarm,
                "kernel " + format_subset(a, k) + " is not fantastic");
  }
  return k;
}

Vector pullback(const FiniteAlgebra& src, const FiniteAlgebra& tgt,
                const Homomorphism& f, const Vector& phi) {
  if (!is_homomorphism(src, tgt, f)) {
    throw Error(ErrorKind::kNotAHomomorphism,
                "map does not preserve both operations");
  }
  require_pv(tgt, phi);
  Vector psi(src.size());
  for (ElementId x = 0; x < src.size(); ++x) psi[x] = phi[f(x)];
  if (!is_pseudo_valuation(src, psi)) {
    throw Error(ErrorKind::kConsistencyAlarm,
                "pullback is not a pseudo-valuation");
  }
  if (satisfies(src, AxiomSystem::kPseudoBE) &&
      satisfies(tgt, AxiomSystem::kPseudoBE)) {
    ElementSubset ker_phi = valuation_kernel(tgt, phi);
    if (valuation_kernel(src, psi) != preimage_ds(src, tgt, f, ker_phi)) {
      throw Error(ErrorKind::kConsistencyAlarm,
                  "pullback kernel differs from the preimage of the kernel");
    }
  }
  return psi;
}

Vector pushforward(const FiniteAlgebra& src, const FiniteAlgebra& tgt,
                   const Homomorphism& f, const Vector& phi) {
  if (!is_homomorphism(src, tgt, f)) {
    throw Error(ErrorKind::kNotAHomomorphism,
                "map does not preserve both operations");
  }
  if (!is_bijective(src, tgt, f)) {
    throw Error(ErrorKind::kNotBijective, "map is not bijective");
  }
  require_pv(src, phi);
  Vector psi(tgt.size());
  for (ElementId x = 0; x < src.size(); ++x) psi[f(x)] = phi[x];
  if (!is_pseudo_valuation(tgt, psi)) {
    throw Error(ErrorKind::kConsistencyAlarm,
                "pushforward is not a pseudo-valuation");
  }
  if (satisfies(src, AxiomSystem::kPseudoBE)) {
    ElementSubset image(tgt.size());
    for (ElementId x : valuation_kernel(src, phi).members()) {
      image.insert(f(x));
    }
    if (valuation_kernel(tgt, psi) != image) {
      throw Error(ErrorKind::kConsistencyAlarm,
                  "pushforward kernel differs from the image of the kernel");
    }
  }
  return psi;
}

}  // namespace psbe
