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

#ifndef PSBE_ALGEBRA_HPP_
#define PSBE_ALGEBRA_HPP_

#include <cstddef>
#include <istream>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "psbe/subset.hpp"

namespace psbe {

/// A finite algebra (A, ->, ~>, 1) with an optional declared bottom 0.
///
/// The carrier is {0, ..., n-1}; element i is printed as tokens()[i]. Both
/// operation tables are stored row-major: arrow(x, y) is x -> y. Instances
/// are immutable and validated on construction (closure of the tables,
/// distinct tokens, unit and bottom in range). No axiom is assumed; use
/// check_axioms() or classify() for that.
class FiniteAlgebra {
 public:
  FiniteAlgebra(std::string name, std::vector<std::string> tokens,
                std::vector<ElementId> arrow, std::vector<ElementId> squig,
                ElementId unit, std::optional<ElementId> bottom = std::nullopt);

  const std::string& name() const noexcept { return name_; }
  std::size_t size() const noexcept { return tokens_.size(); }
  const std::vector<std::string>& tokens() const noexcept { return tokens_; }
  const std::string& token(ElementId x) const { return tokens_.at(x); }

  std::optional<ElementId> find(std::string_view token) const;

  ElementId arrow(ElementId x, ElementId y) const noexcept {
    return arrow_[x * size() + y];
  }
  ElementId squig(ElementId x, ElementId y) const noexcept {
    return squig_[x * size() + y];
  }
  std::span<const ElementId> arrow_table() const noexcept { return arrow_; }
  std::span<const ElementId> squig_table() const noexcept { return squig_; }

  ElementId unit() const noexcept { return unit_; }
  std::optional<ElementId> bottom() const noexcept { return bottom_; }

  // True when a bottom is declared and 0 -> x = 0 ~> x = 1 for every x.
  bool is_bounded() const noexcept;

  // The relation x -> y = 1. A preorder on pseudo-BE algebras; not
  // necessarily antisymmetric.
  bool below(ElementId x, ElementId y) const noexcept {
    return arrow(x, y) == unit_;
  }

  bool same_operations() const noexcept { return arrow_ == squig_; }

  // Copy with a different name and/or bottom declaration.
  FiniteAlgebra renamed(std::string name) const;
  FiniteAlgebra with_bottom(std::optional<ElementId> bottom) const;

  bool operator==(const FiniteAlgebra&) const = default;

 private:
  std::string name_;
  std::vector<std::string> tokens_;
  std::vector<ElementId> arrow_;
  std::vector<ElementId> squig_;
  ElementId unit_;
  std::optional<ElementId> bottom_;
};

FiniteAlgebra parse_algebra(std::istream& in);
FiniteAlgebra parse_algebra_text(std::string_view text);
FiniteAlgebra load_algebra(const std::string& path);

std::string serialize(const FiniteAlgebra& algebra);

// x <= y. Throws kInconsistentOrder when x -> y = 1 and x ~> y = 1 disagree.
bool leq(const FiniteAlgebra& algebra, ElementId x, ElementId y);

// x v1 y = (x -> y) ~> y
inline ElementId vee1(const FiniteAlgebra& a, ElementId x, ElementId y) {
  return a.squig(a.arrow(x, y), y);
}
// x v2 y = (x ~> y) -> y
inline ElementId vee2(const FiniteAlgebra& a, ElementId x, ElementId y) {
  return a.arrow(a.squig(x, y), y);
}

// (x -> 0, x ~> 0). Throws kUnbounded unless the algebra is bounded.
std::pair<ElementId, ElementId> negations(const FiniteAlgebra& algebra,
                                          ElementId x);

// Set notation in carrier order: {1,a,d}.
std::string format_subset(const FiniteAlgebra& algebra,
                          const ElementSubset& subset);
ElementSubset parse_subset(const FiniteAlgebra& algebra, std::string_view text);

std::string format_tuple(const FiniteAlgebra& algebra,
                         std::span<const ElementId> tuple);

}  // namespace psbe

#endif  // PSBE_ALGEBRA_HPP_
