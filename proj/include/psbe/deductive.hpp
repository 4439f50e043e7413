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

#ifndef PSBE_DEDUCTIVE_HPP_
#define PSBE_DEDUCTIVE_HPP_

#include <optional>
#include <vector>

#include "psbe/algebra.hpp"
#include "psbe/check_result.hpp"

namespace psbe {

// Closure of D under modus ponens for each implication separately.
struct ClosureVerdict {
  bool contains_unit = false;
  bool arrow_closed = false;
  bool squig_closed = false;
};

ClosureVerdict closure_verdict(const FiniteAlgebra& algebra,
                               const ElementSubset& d);

// 1 in D and D closed under modus ponens for ->. Throws kConsistencyAlarm
// when the -> and ~> closures disagree.
bool is_deductive_system(const FiniteAlgebra& algebra, const ElementSubset& d);

struct DSFamily {
  // Sorted by canonical_less.
  std::vector<ElementSubset> systems;
};

DSFamily enumerate_ds(const FiniteAlgebra& algebra);

// The following throw kNotADeductiveSystem unless d is a deductive system.
CheckResult is_normal(const FiniteAlgebra& algebra, const ElementSubset& d);
CheckResult is_fantastic(const FiniteAlgebra& algebra, const ElementSubset& d);
// Also throws kUnbounded.
CheckResult is_involutive_ds(const FiniteAlgebra& algebra,
                             const ElementSubset& d);

// Quantify over family.systems. Throw kNotProper when d is the carrier.
CheckResult is_prime(const FiniteAlgebra& algebra, const ElementSubset& d,
                     const DSFamily& family);
CheckResult is_maximal(const FiniteAlgebra& algebra, const ElementSubset& d,
                       const DSFamily& family);

struct DSTags {
  bool normal = false;
  bool fantastic = false;
  std::optional<bool> involutive;  // bounded algebras only
  bool prime = false;              // proper systems only
  bool maximal = false;
};

std::vector<DSTags> tag_family(const FiniteAlgebra& algebra,
                               const DSFamily& family);

struct QuotientResult {
  std::vector<ElementSubset> classes;  // ordered by least member
  FiniteAlgebra quotient;
  std::vector<ElementId> projection;
};

// A / H via x ~ y iff x -> y, y -> x in H. Throws kNotDistributive,
// kNotADeductiveSystem, or kConsistencyAlarm if the relation is not a
// congruence or the quotient operations differ.
QuotientResult quotient(const FiniteAlgebra& algebra, const ElementSubset& h);

}  // namespace psbe

#endif  // PSBE_DEDUCTIVE_HPP_
