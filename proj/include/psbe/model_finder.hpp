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


#ifndef PSBE_MODEL_FINDER_HPP_
#define PSBE_MODEL_FINDER_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "psbe/algebra.hpp"
#include "psbe/axioms.hpp"

namespace psbe {

enum class ModelFlag {
  kPseudoBE,
  kPseudoBCK,
  kBE,
  kProper,
  kConditionA,
  kDistributive,
  kCommutative,
  kBounded,
  kLinear,
};

std::vector<ModelFlag> all_model_flags();
std::string_view to_string(ModelFlag flag);
std::optional<ModelFlag> parse_model_flag(std::string_view name);
bool has_flag(const FiniteAlgebra& algebra, ModelFlag flag);

struct SearchConstraints {
  std::size_t size = 1;
  // Axioms the tables are built from: pseudo-BE, pseudo-BCK, P-system or
  // Q-system.
  AxiomSystem core = AxiomSystem::kPseudoBE;
  std::vector<ModelFlag> required;
  std::optional<std::size_t> limit;
  std::size_t workers = 1;
  // Plain generate-and-test over the cells not fixed by unit and diagonal
  // identities; no propagation or partial-evaluation pruning.
  bool audit = false;
};

inline constexpr std::size_t kMaxFinderSize = 5;

// One representative per isomorphism class (permutations fixing the unit),
// namely the one with the lexicographically least (arrow, squig) table
// pair. Output is sorted by that key. Element 0 is the unit, printed "1";
// the others are a, b, c, ... A least element, if any, is declared as the
// bottom. Throws kSizeGuard above kMaxFinderSize and kPrecondition for an
// unsupported core.
std::vector<FiniteAlgebra> enumerate_models(const SearchConstraints& c);

// The least (arrow, squig) table pair over all relabelings fixing the unit.
FiniteAlgebra canonical_form(const FiniteAlgebra& algebra);

// n<size>_<8 hex digits of the FNV-1a hash of the canonical tables>, so
// isomorphic algebras share a name.
std::string model_name(const FiniteAlgebra& algebra);

// Writes each model to dir/<name>.alg and returns the paths.
std::vector<std::string> emit_models(const std::vector<FiniteAlgebra>& models,
                                     const std::string& dir);

}  // namespace psbe

#endif  // PSBE_MODEL_FINDER_HPP_
