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

#ifndef PSBE_TERMS_HPP_
#define PSBE_TERMS_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "psbe/subset.hpp"

namespace psbe {

// Marks a table cell that has not been assigned yet.
inline constexpr ElementId kUnknown = 0xFFFFFFFFU;

inline constexpr std::size_t kNoCell = static_cast<std::size_t>(-1);

// Read-only view of two n-by-n tables, possibly with kUnknown cells.
struct TableView {
  std::size_t n = 0;
  ElementId unit = 0;
  const ElementId* arrow = nullptr;
  const ElementId* squig = nullptr;
};

/// A term over variables x0, x1, x2, the constant 1 and the two binary
/// operations, stored in postfix order for cheap evaluation.
class Term {
 public:
  static Term var(int index);
  static Term one();
  static Term arrow(const Term& lhs, const Term& rhs);
  static Term squig(const Term& lhs, const Term& rhs);

  // kUnknown as soon as a needed cell is unknown.
  ElementId eval(const TableView& tables, const ElementId* vars) const;

  // As eval. When the only obstacle is the outermost cell (both operands
  // known), *blocked receives its index: a * n + b for ->, n * n + a * n + b
  // for ~>. Otherwise *blocked is kNoCell.
  ElementId eval_root(const TableView& tables, const ElementId* vars,
                      std::size_t* blocked) const;

  std::size_t size() const noexcept { return code_.size(); }

 private:
  enum class Op : std::uint8_t { kVar, kOne, kArrow, kSquig };
  struct Instr {
    Op op;
    std::uint8_t var;
  };
  std::vector<Instr> code_;
};

namespace term {
inline Term x() { return Term::var(0); }
inline Term y() { return Term::var(1); }
inline Term z() { return Term::var(2); }
inline Term one() { return Term::one(); }
inline Term ar(const Term& a, const Term& b) { return Term::arrow(a, b); }
inline Term sq(const Term& a, const Term& b) { return Term::squig(a, b); }
}  // namespace term

struct Equation {
  Term lhs;
  Term rhs;
};

// premises[0] and ... and premises[k-1] imply conclusion.
struct Constraint {
  std::vector<Equation> premises;
  Equation conclusion;
};

struct Axiom {
  std::string tag;
  int arity = 0;
  std::vector<Constraint> constraints;
};

enum class Truth { kFalse, kTrue, kUnknown };

Truth evaluate(const Constraint& c, const TableView& tables,
               const ElementId* vars);
Truth evaluate(const Axiom& a, const TableView& tables, const ElementId* vars);

// Calls fn(tuple) on every tuple of length arity over {0..n-1}, in
// lexicographic order, until fn returns false.
template <typename Fn>
void for_each_tuple(std::size_t n, int arity, Fn&& fn) {
  ElementId t[3] = {0, 0, 0};
  if (n == 0) return;
  while (true) {
    if (!fn(static_cast<const ElementId*>(t))) return;
    int i = arity - 1;
    while (i >= 0 && ++t[i] == n) t[i--] = 0;
    if (i < 0) return;
  }
}

}  // namespace psbe

#endif  // PSBE_TERMS_HPP_
