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

#ifndef PSBE_STATES_HPP_
#define PSBE_STATES_HPP_

#include <vector>

#include "psbe/algebra.hpp"
#include "psbe/check_result.hpp"
#include "psbe/linalg.hpp"

namespace psbe {

// min{1 - a + b, 1}
Rational lukasiewicz_implication(const Rational& a, const Rational& b);

// Rules, in check order: bs1 (s(1) = 1), range (0 <= s <= 1), bs2, bs3.
CheckResult is_bosbach_state(const FiniteAlgebra& algebra, const Vector& s);

// Rules: range, sm.
CheckResult is_state_morphism(const FiniteAlgebra& algebra, const Vector& s);

// s(x v1 y) = s(x v2 y) = max{s(x), s(y)}; rules max1, max2. Throws
// kConditionAMissing without condition (A), kPrecondition when s is not a
// Bosbach state.
CheckResult sm_characterization_check(const FiniteAlgebra& algebra,
                                      const Vector& s);

// s(1) = 1 plus both symmetry equations for every pair x < y by index.
std::vector<LinearEquation> bosbach_equations(const FiniteAlgebra& algebra);

struct StateSpaceResult {
  AffineSolutionSpace affine;
  PolytopeDescription polytope;  // affine intersected with [0,1]^n
};

StateSpaceResult state_space(const FiniteAlgebra& algebra);

// Rules: range (m >= 0), m1.
CheckResult is_measure(const FiniteAlgebra& algebra, const Vector& m);
// Rules: range, mm.
CheckResult is_measure_morphism(const FiniteAlgebra& algebra, const Vector& m);
// Add rule m0 (m(0) = 1). Throw kUnbounded.
CheckResult is_state_measure(const FiniteAlgebra& algebra, const Vector& m);
CheckResult is_state_measure_morphism(const FiniteAlgebra& algebra,
                                      const Vector& m);

struct MeasureCone {
  std::vector<Vector> equalities;  // homogeneous, over n variables
  std::vector<Vector> rays;
};

MeasureCone measure_cone(const FiniteAlgebra& algebra);

// 1 - s pointwise, for s a Bosbach state with s(0) = 0 on a bounded
// pseudo-BE(A) algebra; the result is a state-measure.
Vector state_to_measure(const FiniteAlgebra& algebra, const Vector& s);
// 1 - m pointwise, for m a state-measure; the result is a Bosbach state
// with s(0) = 0.
Vector measure_to_state(const FiniteAlgebra& algebra, const Vector& m);

// {x : s(x) = 1}. Throws kPrecondition unless s is a Bosbach state.
ElementSubset state_kernel(const FiniteAlgebra& algebra, const Vector& s);
// {x : m(x) = 0}. Throws kPrecondition unless m is a measure.
ElementSubset measure_kernel(const FiniteAlgebra& algebra, const Vector& m);

}  // namespace psbe

#endif  // PSBE_STATES_HPP_
