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


#ifndef PSBE_VALUATIONS_HPP_
#define PSBE_VALUATIONS_HPP_

#include <vector>

#include "psbe/algebra.hpp"
#include "psbe/check_result.hpp"
#include "psbe/homomorphisms.hpp"
#include "psbe/linalg.hpp"

namespace psbe {

// Rules: pv1 (phi(1) = 0), pv2 (phi(y) - phi(x) <= min{phi(x->y), phi(x~>y)}).
CheckResult is_pseudo_valuation(const FiniteAlgebra& algebra, const Vector& phi);
// Adds pv3: phi(x) = 0 only at the unit.
CheckResult is_valuation(const FiniteAlgebra& algebra, const Vector& phi);
// Rule pv6: max{phi(x->y), phi(x~>y)} <= phi(x) + phi(y).
CheckResult is_weak_pseudo_valuation(const FiniteAlgebra& algebra,
                                     const Vector& phi);
// Rules cpv1, cpv2. Throws kNotAPseudoValuation.
CheckResult is_commutative_pv(const FiniteAlgebra& algebra, const Vector& phi);

struct CharacterizationReport {
  CheckResult pv4;   // phi(x->z) <= phi(x->(y~>z)) + phi(y)
  CheckResult pv5;   // phi(x~>z) <= phi(x~>(y->z)) + phi(y)
  CheckResult cpv3;  // phi((x v1 y)->x) <= phi(z->(y->x)) + phi(z)
  CheckResult cpv4;  // phi((x v2 y)~>x) <= phi(z~>(y~>x)) + phi(z)
  bool pv_agrees = true;
  // Only meaningful when phi is a pseudo-valuation.
  bool cpv_agrees = true;
};

// Throws kPrecondition unless phi(1) = 0, and kConsistencyAlarm when the
// triple forms disagree with the pair forms.
CharacterizationReport characterization_crosscheck(const FiniteAlgebra& algebra,
                                                   const Vector& phi);

struct ValuationCone {
  std::vector<Vector> equalities;    // phi(1) = 0
  std::vector<Vector> inequalities;  // g . phi >= 0
  std::vector<Vector> rays;
};

// Every ray is re-verified with is_pseudo_valuation (alarm on failure).
ValuationCone valuation_cone(const FiniteAlgebra& algebra);

// {x : phi(x) = 0}. Throws kNotAPseudoValuation; alarms if the kernel is not
// a deductive system, or not fantastic for a commutative phi.
ElementSubset valuation_kernel(const FiniteAlgebra& algebra, const Vector& phi);

// phi o f for phi on the target.
Vector pullback(const FiniteAlgebra& source, const FiniteAlgebra& target,
                const Homomorphism& f, const Vector& phi);
// The psi on the target with psi o f = phi, for f bijective.
Vector pushforward(const FiniteAlgebra& source, const FiniteAlgebra& target,
                   const Homomorphism& f, const Vector& phi);

}  // namespace psbe

#endif  // PSBE_VALUATIONS_HPP_
