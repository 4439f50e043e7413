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

#ifndef PSBE_LINALG_HPP_
#define PSBE_LINALG_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "psbe/rational.hpp"

namespace psbe {

using Vector = std::vector<Rational>;

// coeffs . x = rhs
struct LinearEquation {
  Vector coeffs;
  Rational rhs;
};

Rational dot(const Vector& a, const Vector& b);

/// Solution set of a consistent linear system, particular + span(basis).
struct AffineSolutionSpace {
  std::size_t num_vars = 0;
  Vector particular;
  std::vector<Vector> basis;
  // Nonzero rows of the reduced row echelon form, pivots left to right.
  std::vector<LinearEquation> equalities;
  std::vector<std::size_t> pivots;

  std::size_t dimension() const noexcept { return basis.size(); }
};

// Row-reduces [A | b] in place to reduced row echelon form and returns the
// pivot columns. Rows are not removed.
std::vector<std::size_t> reduce_rows(std::vector<LinearEquation>& rows,
                                     std::size_t num_vars);

// nullopt when the system is inconsistent.
std::optional<AffineSolutionSpace> solve_affine(
    const std::vector<LinearEquation>& equations, std::size_t num_vars);

struct PolytopeDescription {
  std::vector<Vector> vertices;  // distinct, lexicographically sorted
};

inline constexpr std::size_t kMaxSearchDimension = 6;

// Vertices of space intersected with the box lower <= x <= upper.
// Throws kDimensionTooLarge when space.dimension() > kMaxSearchDimension.
PolytopeDescription box_vertices(const AffineSolutionSpace& space,
                                 const Vector& lower, const Vector& upper);

// Extreme rays of {x : equalities (homogeneous) hold, g . x >= 0 for g in
// inequalities}, scaled to primitive integer vectors and sorted. Throws
// kDimensionTooLarge when the equality nullspace exceeds
// kMaxSearchDimension, and kPrecondition when the cone contains a line.
std::vector<Vector> cone_rays(const std::vector<Vector>& equalities,
                              const std::vector<Vector>& inequalities,
                              std::size_t num_vars);

// Scales a nonzero vector by a positive rational so that its entries are
// coprime integers.
Vector primitive_integer(const Vector& v);

std::string format_vector(const Vector& v);

}  // namespace psbe

#endif  // PSBE_LINALG_HPP_
