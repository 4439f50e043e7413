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

#ifndef PSBE_OPERATORS_HPP_
#define PSBE_OPERATORS_HPP_

#include <istream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "psbe/algebra.hpp"
#include "psbe/check_result.hpp"

namespace psbe {

/// A unary operator A -> A, given by the image of each element.
struct UnaryOperator {
  std::vector<ElementId> map;

  ElementId operator()(ElementId x) const { return map[x]; }
  bool operator==(const UnaryOperator&) const = default;
  auto operator<=>(const UnaryOperator&) const = default;
};

enum class InternalStateKind { kTypeI, kTypeII };

std::string_view to_string(InternalStateKind kind);

// Rules, in check order: is1, is2 (type I) or is2' (type II), is3.
CheckResult is_internal_state(const FiniteAlgebra& algebra,
                              const UnaryOperator& mu, InternalStateKind kind);

// Rules: hom (both operations preserved), idem.
CheckResult is_smo(const FiniteAlgebra& algebra, const UnaryOperator& mu);

struct EnumerationOptions {
  std::size_t workers = 1;
  // Disables the mu(1) = 1 restriction so counts can be cross-checked.
  bool audit = false;
};

inline constexpr std::size_t kMaxUnaryMaps = 10'000'000;

// All n^n maps are tested (unit pinned to 1 when the restriction is proven
// for the algebra). Lexicographic output order. Throws kSizeGuard.
std::vector<UnaryOperator> enumerate_internal_states(
    const FiniteAlgebra& algebra, InternalStateKind kind,
    const EnumerationOptions& options = {});
std::vector<UnaryOperator> enumerate_smo(const FiniteAlgebra& algebra,
                                         const EnumerationOptions& options = {});

struct KernelImage {
  ElementSubset kernel;
  ElementSubset image;
};

// Throws kPrecondition unless mu is an internal state of either kind on a
// pseudo-BE(A) algebra, or a state-morphism operator. Throws
// kConsistencyAlarm when a guaranteed property of the kernel or image fails.
KernelImage kernel_image(const FiniteAlgebra& algebra, const UnaryOperator& mu);

// "map <tok>-><tok>" lines, one per element; '#' starts a comment.
UnaryOperator parse_operator(const FiniteAlgebra& algebra, std::istream& in);
UnaryOperator parse_operator_text(const FiniteAlgebra& algebra,
                                  std::string_view text);
UnaryOperator load_operator(const FiniteAlgebra& algebra,
                            const std::string& path);
std::string serialize(const FiniteAlgebra& algebra, const UnaryOperator& mu);

// Operator from space-separated image tokens in carrier order, e.g.
// operator_of(A, "1 1 b b 1").
UnaryOperator operator_of(const FiniteAlgebra& algebra, std::string_view images);

// Shared parser for "<keyword> <src>-><tgt>" map files.
std::vector<ElementId> parse_arrow_map(const FiniteAlgebra& source,
                                       const FiniteAlgebra& target,
                                       std::istream& in,
                                       std::string_view keyword);

}  // namespace psbe

#endif  // PSBE_OPERATORS_HPP_
