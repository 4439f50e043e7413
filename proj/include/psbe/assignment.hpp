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

#ifndef PSBE_ASSIGNMENT_HPP_
#define PSBE_ASSIGNMENT_HPP_

#include <initializer_list>
#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "psbe/algebra.hpp"
#include "psbe/linalg.hpp"

namespace psbe {

enum class AssignmentKind { kState, kMeasure, kValuation };

std::string_view to_string(AssignmentKind kind);

/// Element -> rational map, indexed in carrier order.
struct RationalAssignment {
  AssignmentKind kind = AssignmentKind::kState;
  std::string name;
  Vector values;
};

// File format: a header line "state|measure|valuation <name>" followed by
// one "<tok> = <rational>" line per element. '#' starts a comment.
// Throws kParse on malformed input or when the header kind differs from
// expected (if given).
RationalAssignment parse_assignment(
    const FiniteAlgebra& algebra, std::istream& in,
    std::optional<AssignmentKind> expected = std::nullopt);
RationalAssignment parse_assignment_text(
    const FiniteAlgebra& algebra, std::string_view text,
    std::optional<AssignmentKind> expected = std::nullopt);
RationalAssignment load_assignment(
    const FiniteAlgebra& algebra, const std::string& path,
    std::optional<AssignmentKind> expected = std::nullopt);

std::string serialize(const FiniteAlgebra& algebra,
                      const RationalAssignment& assignment);

// Builds a value vector from tokens and values written as text, e.g.
// values_of(A, {{"1","1"},{"a","1/2"}}); missing tokens default to zero.
Vector values_of(const FiniteAlgebra& algebra,
                 std::initializer_list<std::pair<std::string_view,
                                                 std::string_view>> entries);

}  // namespace psbe

#endif  // PSBE_ASSIGNMENT_HPP_
