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

#ifndef PSBE_AXIOMS_HPP_
#define PSBE_AXIOMS_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "psbe/algebra.hpp"
#include "psbe/terms.hpp"

namespace psbe {

enum class AxiomSystem {
  kPseudoBE,
  kPseudoBCK,
  kConditionA,
  kDistributive,
  kCommutative,
  kPSystem,
  kQSystem,
};

const std::vector<AxiomSystem>& all_axiom_systems();
std::string_view to_string(AxiomSystem system);
std::optional<AxiomSystem> parse_axiom_system(std::string_view text);

// The quantified axioms of a system, in report order.
const std::vector<Axiom>& axioms_of(AxiomSystem system);

TableView view_of(const FiniteAlgebra& algebra);

struct Violation {
  std::string axiom;
  std::vector<ElementId> witness;  // lexicographically first
  std::size_t count = 0;           // failing tuples for this tag
};

struct AxiomReport {
  AxiomSystem system = AxiomSystem::kPseudoBE;
  bool holds = true;
  std::vector<Violation> violations;
};

AxiomReport check_axioms(const FiniteAlgebra& algebra, AxiomSystem system);

// Same verdict as check_axioms(...).holds, stopping at the first violation.
bool satisfies(const FiniteAlgebra& algebra, AxiomSystem system);

struct ClassificationReport {
  bool pseudo_be = false;
  bool pseudo_bck = false;
  bool be = false;
  bool proper = false;
  bool condition_a = false;
  bool distributive = false;
  bool commutative = false;
  bool p_system = false;
  bool q_system = false;
  bool bounded = false;
  bool good = false;
  bool involutive = false;
  bool linear = false;
  std::optional<ElementSubset> regular;
  std::optional<ElementSubset> dense;
};

ClassificationReport classify(const FiniteAlgebra& algebra);

// Totality and antisymmetry of x -> y = 1.
bool is_linear(const FiniteAlgebra& algebra);

// x^{-~} = (x -> 0) ~> 0 and x^{~-} = (x ~> 0) -> 0. Bounded algebras only.
ElementId double_neg_arrow_first(const FiniteAlgebra& algebra, ElementId x);
ElementId double_neg_squig_first(const FiniteAlgebra& algebra, ElementId x);
ElementSubset regular_elements(const FiniteAlgebra& algebra);
ElementSubset dense_elements(const FiniteAlgebra& algebra);

}  // namespace psbe

#endif  // PSBE_AXIOMS_HPP_
