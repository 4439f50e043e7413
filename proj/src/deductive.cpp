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

#include "psbe/deductive.hpp"

#include <algorithm>

#include "psbe/axioms.hpp"
#include "psbe/error.hpp"
#include "psbe/terms.hpp"

namespace psbe {

ClosureVerdict closure_verdict(const FiniteAlgebra& a, const ElementSubset& d) {
  ClosureVerdict v;
  v.contains_unit = d.contains(a.unit());
  v.arrow_closed = true;
  v.squig_closed = true;
  for (ElementId x : d.members()) {
    for (ElementId y = 0; y < a.size(); ++y) {
      if (d.contains(y)) continue;
      if (d.contains(a.arrow(x, y))) v.arrow_closed = false;
      if (d.contains(a.squig(x, y))) v.squig_closed = false;
    }
  }
  return v;
}

bool is_deductive_system(const FiniteAlgebra& a, const ElementSubset& d) {
  if (d.universe() != a.size()) {
    throw Error(ErrorKind::kPrecondition, "subset universe mismatch");
  }
  ClosureVerdict v = closure_verdict(a, d);
  if (!v.contains_unit) return false;
  if (v.arrow_closed != v.squig_closed) {
    throw Error(ErrorKind::kConsistencyAlarm,
                "modus ponens closures for -> and ~> disagree on " +
                    format_subset(a, d));
  }
  return v.arrow_closed;
}

DSFamily enumerate_ds(const FiniteAlgebra& a) {
  const std::size_t n = a.size();
  if (n > 24) {
    throw Error(ErrorKind::kSizeGuard,
                "deductive system enumeration is limited to 24 elements");
  }
  // Enumerate masks over the non-unit elements, then add the unit.
  std::vector<ElementId> others;
  for (ElementId x = 0; x < n; ++x) {
    if (x != a.unit()) others.push_back(x);
  }
  DSFamily family;
  const std::uint64_t limit = std::uint64_t{1} << others.size();
  for (std::uint64_t bits = 0; bits < limit; ++bits) {
    ElementSubset d(n);
    d.insert(a.unit());
    for (std::size_t i = 0; i < others.size(); ++i) {
      if ((bits >> i) & 1U) d.insert(others[i]);
    }
    if (is_deductive_system(a, d)) family.systems.push_back(d);
  }
  std::sort(family.systems.begin(), family.systems.end(), canonical_less);
  return family;
}

namespace {

void require_ds(const FiniteAlgebra& a, const ElementSubset& d) {
  if (!is_deductive_system(a, d)) {
    throw Error(ErrorKind::kNotADeductiveSystem,
                format_subset(a, d) + " is not a deductive system");
  }
}

void require_proper(const FiniteAlgebra& a, const ElementSubset& d) {
  if (d.is_full()) {
    throw Error(ErrorKind::kNotProper,
                format_subset(a, d) + " is not a proper deductive system");
  }
}

}  // namespace

CheckResult is_normal(const FiniteAlgebra& a, const ElementSubset& d) {
  require_ds(a, d);
  for (ElementId x = 0; x < a.size(); ++x) {
    for (ElementId y = 0; y < a.size(); ++y) {
      if (d.contains(a.arrow(x, y)) != d.contains(a.squig(x, y))) {
        return CheckResult::fail("ds3", {x, y});
      }
    }
  }
  return CheckResult::pass();
}

CheckResult is_fantastic(const FiniteAlgebra& a, const ElementSubset& d) {
  require_ds(a, d);
  const std::size_t n = a.size();
  for (ElementId x = 0; x < n; ++x) {
    for (ElementId y = 0; y < n; ++y) {
      if (d.contains(a.arrow(y, x)) &&
          !d.contains(a.arrow(vee1(a, x, y), x))) {
        return CheckResult::fail("cds1", {x, y});
      }
    }
  }
  for (ElementId x = 0; x < n; ++x) {
    for (ElementId y = 0; y < n; ++y) {
      if (d.contains(a.squig(y, x)) &&
          !d.contains(a.squig(vee2(a, x, y), x))) {
        return CheckResult::fail("cds2", {x, y});
      }
    }
  }
  return CheckResult::pass();
}

CheckResult is_involutive_ds(const FiniteAlgebra& a, const ElementSubset& d) {
  if (!a.is_bounded()) {
    throw Error(ErrorKind::kUnbounded,
                "algebra '" + a.name() + "' has no verified bottom");
  }
  require_ds(a, d);
  for (ElementId x = 0; x < a.size(); ++x) {
    if (!d.contains(a.arrow(double_neg_arrow_first(a, x), x))) {
      return CheckResult::fail("ids1", {x});
    }
  }
  for (ElementId x = 0; x < a.size(); ++x) {
    if (!d.contains(a.squig(double_neg_squig_first(a, x), x))) {
      return CheckResult::fail("ids2", {x});
    }
  }
  return CheckResult::pass();
}

CheckResult is_prime(const FiniteAlgebra& a, const ElementSubset& p,
                     const DSFamily& family) {
  require_ds(a, p);
  require_proper(a, p);
  for (std::size_t i = 0; i < family.systems.size(); ++i) {
    const ElementSubset& d1 = family.systems[i];
    if (d1.is_subset_of(p)) continue;
    for (std::size_t j = i; j < family.systems.size(); ++j) {
      const ElementSubset& d2 = family.systems[j];
      if (d2.is_subset_of(p)) continue;
      if ((d1 & d2).is_subset_of(p)) {
        return CheckResult::fail(
            "prime", {}, format_subset(a, d1) + " " + format_subset(a, d2));
      }
    }
  }
  return CheckResult::pass();
}

CheckResult is_maximal(const FiniteAlgebra& a, const ElementSubset& d,
                       const DSFamily& family) {
  require_ds(a, d);
  require_proper(a, d);
  for (const ElementSubset& e : family.systems) {
    if (e.is_full() || e == d) continue;
    if (d.is_subset_of(e)) {
      return CheckResult::fail("maximal", {}, format_subset(a, e));
    }
  }
  return CheckResult::pass();
}

std::vector<DSTags> tag_family(const FiniteAlgebra& a,
                               const DSFamily& family) {
  std::vector<DSTags> out;
  out.reserve(family.systems.size());
  const bool bounded = a.is_bounded();
  for (const ElementSubset& d : family.systems) {
    DSTags t;
    t.normal = is_normal(a, d).holds;
    t.fantastic = is_fantastic(a, d).holds;
    if (bounded) t.involutive = is_involutive_ds(a, d).holds;
    if (!d.is_full()) {
      t.prime = is_prime(a, d, family).holds;
      t.maximal = is_maximal(a, d, family).holds;
    }
    out.push_back(t);
  }
  return out;
}

QuotientResult quotient(const FiniteAlgebra& a, const ElementSubset& h) {
  if (!satisfies(a, AxiomSystem::kDistributive)) {
    throw Error(ErrorKind::kNotDistributive,
                "quotient requires a distributive algebra");
  }
  require_ds(a, h);
  const std::size_t n = a.size();
  auto related = [&](ElementId x, ElementId y) {
    return h.contains(a.arrow(x, y)) && h.contains(a.arrow(y, x));
  };

  std::vector<ElementSubset> classes;
  std::vector<ElementId> projection(n);
  for (ElementId x = 0; x < n; ++x) {
    bool placed = false;
    for (ElementId c = 0; c < classes.size(); ++c) {
      ElementId r = classes[c].members().front();
      if (related(r, x)) {
        classes[c].insert(x);
        projection[x] = c;
        placed = true;
        break;
      }
    }
    if (!placed) {
      projection[x] = static_cast<ElementId>(classes.size());
      classes.emplace_back(n, std::vector<ElementId>{x});
    }
  }
  // Equivalence check: members of one class are pairwise related, members of
  // different classes are not.
  for (ElementId x = 0; x < n; ++x) {
    for (ElementId y = 0; y < n; ++y) {
      if (related(x, y) != (projection[x] == projection[y])) {
        throw Error(ErrorKind::kConsistencyAlarm,
                    "relation induced by " + format_subset(a, h) +
                        " is not an equivalence at " +
                        format_tuple(a, std::vector<ElementId>{x, y}));
      }
    }
  }

  const std::size_t k = classes.size();
  std::vector<ElementId> arrow(k * k, kUnknown);
  std::vector<ElementId> squig(k * k, kUnknown);
  for (ElementId x = 0; x < n; ++x) {
    for (ElementId y = 0; y < n; ++y) {
      std::size_t cell = projection[x] * k + projection[y];
      ElementId av = projection[a.arrow(x, y)];
      ElementId sv = projection[a.squig(x, y)];
      if ((arrow[cell] != kUnknown && arrow[cell] != av) ||
          (squig[cell] != kUnknown && squig[cell] != sv)) {
        throw Error(ErrorKind::kConsistencyAlarm,
                    "relation induced by " + format_subset(a, h) +
                        " is not a congruence at " +
                        format_tuple(a, std::vector<ElementId>{x, y}));
      }
      arrow[cell] = av;
      squig[cell] = sv;
    }
  }
  if (arrow != squig) {
    throw Error(ErrorKind::kConsistencyAlarm,
                "quotient by " + format_subset(a, h) +
                    " has distinct implications");
  }

  std::vector<std::string> tokens;
  for (const ElementSubset& c : classes) {
    std::string t;
    for (ElementId x : c.members()) {
      if (!t.empty()) t += '|';
      t += a.token(x);
    }
    tokens.push_back(t);
  }
  if (classes[projection[a.unit()]] != h) {
    throw Error(ErrorKind::kConsistencyAlarm,
                "class of the unit differs from " + format_subset(a, h));
  }
  std::optional<ElementId> bottom;
  if (a.bottom()) bottom = projection[*a.bottom()];
  FiniteAlgebra q(a.name() + "_quotient", std::move(tokens), std::move(arrow),
                  std::move(squig), projection[a.unit()], bottom);
  return QuotientResult{std::move(classes), std::move(q),
                        std::move(projection)};
}

}  // namespace psbe
