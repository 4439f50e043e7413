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

#include "psbe/states.hpp"

#include "psbe/axioms.hpp"
#include "psbe/error.hpp"

namespace psbe {

namespace {

void require_width(const FiniteAlgebra& a, const Vector& v) {
  if (v.size() != a.size()) {
    throw Error(ErrorKind::kPrecondition, "assignment width mismatch");
  }
}

CheckResult check_unit_interval(const FiniteAlgebra& a, const Vector& s) {
  for (ElementId x = 0; x < a.size(); ++x) {
    if (s[x] < Rational(0) || s[x] > Rational(1)) {
      return CheckResult::fail("range", {x});
    }
  }
  return CheckResult::pass();
}

CheckResult check_nonnegative(const FiniteAlgebra& a, const Vector& m) {
  for (ElementId x = 0; x < a.size(); ++x) {
    if (m[x].sign() < 0) return CheckResult::fail("range", {x});
  }
  return CheckResult::pass();
}

void require_bounded(const FiniteAlgebra& a) {
  if (!a.is_bounded()) {
    throw Error(ErrorKind::kUnbounded,
                "algebra '" + a.name() + "' has no verified bottom");
  }
}

}  // namespace

Rational lukasiewicz_implication(const Rational& a, const Rational& b) {
  return min(Rational(1) - a + b, Rational(1));
}

CheckResult is_bosbach_state(const FiniteAlgebra& a, const Vector& s) {
  require_width(a, s);
  if (s[a.unit()] != Rational(1)) return CheckResult::fail("bs1", {a.unit()});
  if (auto r = check_unit_interval(a, s); !r) return r;
  const std::size_t n = a.size();
  for (ElementId x = 0; x < n; ++x) {
    for (ElementId y = 0; y < n; ++y) {
      if (s[x] + s[a.arrow(x, y)] != s[y] + s[a.arrow(y, x)]) {
        return CheckResult::fail("bs2", {x, y});
      }
    }
  }
  for (ElementId x = 0; x < n; ++x) {
    for (ElementId y = 0; y < n; ++y) {
      if (s[x] + s[a.squig(x, y)] != s[y] + s[a.squig(y, x)]) {
        return CheckResult::fail("bs3", {x, y});
      }
    }
  }
  return CheckResult::pass();
}

CheckResult is_state_morphism(const FiniteAlgebra& a, const Vector& s) {
  require_width(a, s);
  if (auto r = check_unit_interval(a, s); !r) return r;
  for (ElementId x = 0; x < a.size(); ++x) {
    for (ElementId y = 0; y < a.size(); ++y) {
      Rational target = lukasiewicz_implication(s[x], s[y]);
      if (s[a.arrow(x, y)] != target || s[a.squig(x, y)] != target) {
        return CheckResult::fail("sm", {x, y});
      }
    }
  }
  return CheckResult::pass();
}

CheckResult sm_characterization_check(const FiniteAlgebra& a,
                                      const Vector& s) {
  if (!satisfies(a, AxiomSystem::kConditionA)) {
    throw Error(ErrorKind::kConditionAMissing,
                "max characterization requires condition (A)");
  }
  if (auto r = is_bosbach_state(a, s); !r) {
    throw Error(ErrorKind::kPrecondition,
                "not a Bosbach state: " + r.rule + " fails");
  }
  for (ElementId x = 0; x < a.size(); ++x) {
    for (ElementId y = 0; y < a.size(); ++y) {
      if (s[vee1(a, x, y)] != max(s[x], s[y])) {
        return CheckResult::fail("max1", {x, y});
      }
    }
  }
  for (ElementId x = 0; x < a.size(); ++x) {
    for (ElementId y = 0; y < a.size(); ++y) {
      if (s[vee2(a, x, y)] != max(s[x], s[y])) {
        return CheckResult::fail("max2", {x, y});
      }
    }
  }
  return CheckResult::pass();
}

std::vector<LinearEquation> bosbach_equations(const FiniteAlgebra& a) {
  const std::size_t n = a.size();
  std::vector<LinearEquation> eqs;
  LinearEquation unit{Vector(n), Rational(1)};
  unit.coeffs[a.unit()] = 1;
  eqs.push_back(unit);
  // s(x) + s(x op y) - s(y) - s(y op x) = 0
  auto add = [&](ElementId x, ElementId y, ElementId xy, ElementId yx) {
    LinearEquation e{Vector(n), Rational()};
    e.coeffs[x] += 1;
    e.coeffs[xy] += 1;
    e.coeffs[y] -= 1;
    e.coeffs[yx] -= 1;
    eqs.push_back(std::move(e));
  };
  for (ElementId x = 0; x < n; ++x) {
    for (ElementId y = x + 1; y < n; ++y) {
      add(x, y, a.arrow(x, y), a.arrow(y, x));
      add(x, y, a.squig(x, y), a.squig(y, x));
    }
  }
  return eqs;
}

StateSpaceResult state_space(const FiniteAlgebra& a) {
  auto affine = solve_affine(bosbach_equations(a), a.size());
  if (!affine) {
    // The constant 1 map always solves the system.
    throw Error(ErrorKind::kConsistencyAlarm,
                "Bosbach system is inconsistent");
  }
  Vector lower(a.size(), Rational(0));
  Vector upper(a.size(), Rational(1));
  PolytopeDescription poly = box_vertices(*affine, lower, upper);
  return StateSpaceResult{std::move(*affine), std::move(poly)};
}

CheckResult is_measure(const FiniteAlgebra& a, const Vector& m) {
  require_width(a, m);
  if (auto r = check_nonnegative(a, m); !r) return r;
  for (ElementId x = 0; x < a.size(); ++x) {
    for (ElementId y = 0; y < a.size(); ++y) {
      if (!a.below(y, x)) continue;
      Rational target = m[y] - m[x];
      if (m[a.arrow(x, y)] != target || m[a.squig(x, y)] != target) {
        return CheckResult::fail("m1", {x, y});
      }
    }
  }
  return CheckResult::pass();
}

CheckResult is_measure_morphism(const FiniteAlgebra& a, const Vector& m) {
  require_width(a, m);
  if (auto r = check_nonnegative(a, m); !r) return r;
  for (ElementId x = 0; x < a.size(); ++x) {
    for (ElementId y = 0; y < a.size(); ++y) {
      Rational target = max(Rational(0), m[y] - m[x]);
      if (m[a.arrow(x, y)] != target || m[a.squig(x, y)] != target) {
        return CheckResult::fail("mm", {x, y});
      }
    }
  }
  return CheckResult::pass();
}

CheckResult is_state_measure(const FiniteAlgebra& a, const Vector& m) {
  require_bounded(a);
  if (auto r = is_measure(a, m); !r) return r;
  if (m[*a.bottom()] != Rational(1)) {
    return CheckResult::fail("m0", {*a.bottom()});
  }
  return CheckResult::pass();
}

CheckResult is_state_measure_morphism(const FiniteAlgebra& a,
                                      const Vector& m) {
  require_bounded(a);
  if (auto r = is_measure_morphism(a, m); !r) return r;
  if (m[*a.bottom()] != Rational(1)) {
    return CheckResult::fail("m0", {*a.bottom()});
  }
  return CheckResult::pass();
}

MeasureCone measure_cone(const FiniteAlgebra& a) {
  const std::size_t n = a.size();
  MeasureCone cone;
  Vector unit(n);
  unit[a.unit()] = 1;
  cone.equalities.push_back(unit);
  // m(x op y) - m(y) + m(x) = 0 whenever y <= x
  for (ElementId x = 0; x < n; ++x) {
    for (ElementId y = 0; y < n; ++y) {
      if (!a.below(y, x)) continue;
      for (ElementId v : {a.arrow(x, y), a.squig(x, y)}) {
        Vector e(n);
        e[v] += 1;
        e[y] -= 1;
        e[x] += 1;
        cone.equalities.push_back(std::move(e));
      }
    }
  }
  std::vector<Vector> nonneg;
  for (ElementId x = 0; x < n; ++x) {
    Vector g(n);
    g[x] = 1;
    nonneg.push_back(std::move(g));
  }
  cone.rays = cone_rays(cone.equalities, nonneg, n);
  return cone;
}

namespace {

void require_bounded_condition_a(const FiniteAlgebra& a) {
  require_bounded(a);
  if (!satisfies(a, AxiomSystem::kPseudoBE)) {
    throw Error(ErrorKind::kPrecondition, "pseudo-BE check fails");
  }
  if (!satisfies(a, AxiomSystem::kConditionA)) {
    throw Error(ErrorKind::kPrecondition, "condition (A) check fails");
  }
}

Vector one_minus(const Vector& v) {
  Vector out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(Rational(1) - x);
  return out;
}

}  // namespace

Vector state_to_measure(const FiniteAlgebra& a, const Vector& s) {
  require_bounded_condition_a(a);
  if (auto r = is_bosbach_state(a, s); !r) {
    throw Error(ErrorKind::kPrecondition,
                "Bosbach state check fails: " + r.rule);
  }
  if (!s[*a.bottom()].is_zero()) {
    throw Error(ErrorKind::kPrecondition, "s(0) = 0 check fails");
  }
  Vector m = one_minus(s);
  if (auto r = is_state_measure(a, m); !r) {
    throw Error(ErrorKind::kConsistencyAlarm,
                "1 - s is not a state-measure: " + r.rule);
  }
  return m;
}

Vector measure_to_state(const FiniteAlgebra& a, const Vector& m) {
  require_bounded_condition_a(a);
  if (auto r = is_state_measure(a, m); !r) {
    throw Error(ErrorKind::kPrecondition,
                "state-measure check fails: " + r.rule);
  }
  Vector s = one_minus(m);
  if (auto r = is_bosbach_state(a, s); !r || !s[*a.bottom()].is_zero()) {
    throw Error(ErrorKind::kConsistencyAlarm,
                "1 - m is not a Bosbach state vanishing at 0");
  }
  return s;
}

ElementSubset state_kernel(const FiniteAlgebra& a, const Vector& s) {
  if (auto r = is_bosbach_state(a, s); !r) {
    throw Error(ErrorKind::kPrecondition,
                "Bosbach state check fails: " + r.rule);
  }
  ElementSubset k(a.size());
  for (ElementId x = 0; x < a.size(); ++x) {
    if (s[x] == Rational(1)) k.insert(x);
  }
  return k;
}

ElementSubset measure_kernel(const FiniteAlgebra& a, const Vector& m) {
  if (auto r = is_measure(a, m); !r) {
    throw Error(ErrorKind::kPrecondition, "measure check fails: " + r.rule);
  }
  ElementSubset k(a.size());
  for (ElementId x = 0; x < a.size(); ++x) {
    if (m[x].is_zero()) k.insert(x);
  }
  return k;
}

}  // namespace psbe
