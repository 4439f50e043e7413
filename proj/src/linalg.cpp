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

#include "psbe/linalg.hpp"

#include <algorithm>

#include "psbe/error.hpp"

namespace psbe {

Rational dot(const Vector& a, const Vector& b) {
  Rational s;
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
    if (!a[i].is_zero() && !b[i].is_zero()) s += a[i] * b[i];
  }
  return s;
}

std::vector<std::size_t> reduce_rows(std::vector<LinearEquation>& rows,
                                     std::size_t num_vars) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t col = 0; col < num_vars && r < rows.size(); ++col) {
    std::size_t sel = r;
    while (sel < rows.size() && rows[sel].coeffs[col].is_zero()) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[r], rows[sel]);
    Rational inv = Rational(1) / rows[r].coeffs[col];
    for (auto& c : rows[r].coeffs) c *= inv;
    rows[r].rhs *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i].coeffs[col].is_zero()) continue;
      Rational f = rows[i].coeffs[col];
      for (std::size_t j = col; j < num_vars; ++j) {
        if (!rows[r].coeffs[j].is_zero()) {
          rows[i].coeffs[j] -= f * rows[r].coeffs[j];
        }
      }
      rows[i].rhs -= f * rows[r].rhs;
    }
    pivots.push_back(col);
    ++r;
  }
  return pivots;
}

std::optional<AffineSolutionSpace> solve_affine(
    const std::vector<LinearEquation>& equations, std::size_t num_vars) {
  std::vector<LinearEquation> rows = equations;
  for (auto& row : rows) {
    if (row.coeffs.size() != num_vars) {
      throw Error(ErrorKind::kPrecondition, "equation width mismatch");
    }
  }
  std::vector<std::size_t> pivots = reduce_rows(rows, num_vars);
  for (std::size_t i = pivots.size(); i < rows.size(); ++i) {
    if (!rows[i].rhs.is_zero()) return std::nullopt;
  }
  rows.resize(pivots.size());

  AffineSolutionSpace space;
  space.num_vars = num_vars;
  space.particular.assign(num_vars, Rational());
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    space.particular[pivots[i]] = rows[i].rhs;
  }
  std::vector<bool> is_pivot(num_vars, false);
  for (auto p : pivots) is_pivot[p] = true;
  for (std::size_t f = 0; f < num_vars; ++f) {
    if (is_pivot[f]) continue;
    Vector b(num_vars, Rational());
    b[f] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) {
      b[pivots[i]] = -rows[i].coeffs[f];
    }
    space.basis.push_back(std::move(b));
  }
  space.equalities = std::move(rows);
  space.pivots = std::move(pivots);
  return space;
}

namespace {

// Calls fn(indices) for every k-subset of {0..m-1} in lexicographic order.
template <typename Fn>
void for_each_combination(std::size_t m, std::size_t k, Fn&& fn) {
  if (k > m) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    fn(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == m - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

std::vector<Vector> dedup_rows(std::vector<Vector> rows) {
  std::vector<Vector> out;
  for (auto& r : rows) {
    if (std::all_of(r.begin(), r.end(),
                    [](const Rational& v) { return v.is_zero(); })) {
      continue;
    }
    Vector p = primitive_integer(r);
    if (std::find(out.begin(), out.end(), p) == out.end()) {
      out.push_back(std::move(p));
    }
  }
  return out;
}

std::size_t rank_of(const std::vector<Vector>& rows, std::size_t width) {
  std::vector<LinearEquation> eqs;
  for (const auto& r : rows) eqs.push_back({r, Rational()});
  return reduce_rows(eqs, width).size();
}

}  // namespace

PolytopeDescription box_vertices(const AffineSolutionSpace& space,
                                 const Vector& lower, const Vector& upper) {
  const std::size_t d = space.dimension();
  const std::size_t n = space.num_vars;
  if (d > kMaxSearchDimension) {
    throw Error(ErrorKind::kDimensionTooLarge,
                "solution space dimension " + std::to_string(d) +
                    " exceeds " + std::to_string(kMaxSearchDimension));
  }
  if (lower.size() != n || upper.size() != n) {
    throw Error(ErrorKind::kPrecondition, "bound width mismatch");
  }
  auto point_at = [&](const Vector& lambda) {
    Vector x = space.particular;
    for (std::size_t j = 0; j < d; ++j) {
      if (lambda[j].is_zero()) continue;
      for (std::size_t i = 0; i < n; ++i) {
        if (!space.basis[j][i].is_zero()) x[i] += lambda[j] * space.basis[j][i];
      }
    }
    return x;
  };
  auto inside = [&](const Vector& x) {
    for (std::size_t i = 0; i < n; ++i) {
      if (x[i] < lower[i] || x[i] > upper[i]) return false;
    }
    return true;
  };

  PolytopeDescription out;
  if (d == 0) {
    if (inside(space.particular)) out.vertices.push_back(space.particular);
    return out;
  }
  // Constraint 2i is x_i = lower_i, 2i+1 is x_i = upper_i, in lambda space:
  // sum_j basis[j][i] lambda_j = bound - particular_i.
  for_each_combination(2 * n, d, [&](const std::vector<std::size_t>& active) {
    std::vector<LinearEquation> eqs;
    for (std::size_t c : active) {
      std::size_t i = c / 2;
      LinearEquation e;
      e.coeffs.resize(d);
      for (std::size_t j = 0; j < d; ++j) e.coeffs[j] = space.basis[j][i];
      e.rhs = (c % 2 == 0 ? lower[i] : upper[i]) - space.particular[i];
      eqs.push_back(std::move(e));
    }
    auto sol = solve_affine(eqs, d);
    if (!sol || sol->dimension() != 0) return;
    Vector x = point_at(sol->particular);
    if (inside(x)) out.vertices.push_back(std::move(x));
  });
  std::sort(out.vertices.begin(), out.vertices.end());
  out.vertices.erase(std::unique(out.vertices.begin(), out.vertices.end()),
                     out.vertices.end());
  return out;
}

std::vector<Vector> cone_rays(const std::vector<Vector>& equalities,
                              const std::vector<Vector>& inequalities,
                              std::size_t num_vars) {
  std::vector<LinearEquation> eqs;
  for (const auto& e : equalities) eqs.push_back({e, Rational()});
  auto space = solve_affine(eqs, num_vars);
  const std::size_t d = space->dimension();
  if (d > kMaxSearchDimension) {
    throw Error(ErrorKind::kDimensionTooLarge,
                "cone dimension " + std::to_string(d) + " exceeds " +
                    std::to_string(kMaxSearchDimension));
  }
  if (d == 0) return {};

  // Inequalities restricted to the nullspace coordinates.
  std::vector<Vector> local;
  for (const auto& g : inequalities) {
    Vector row(d);
    for (std::size_t j = 0; j < d; ++j) row[j] = dot(g, space->basis[j]);
    local.push_back(std::move(row));
  }
  local = dedup_rows(std::move(local));
  if (rank_of(local, d) < d) {
    throw Error(ErrorKind::kPrecondition, "cone contains a line");
  }
  auto feasible = [&](const Vector& r) {
    return std::all_of(local.begin(), local.end(),
                       [&](const Vector& g) { return dot(g, r).sign() >= 0; });
  };

  std::vector<Vector> rays;
  for_each_combination(local.size(), d - 1,
                       [&](const std::vector<std::size_t>& active) {
    std::vector<LinearEquation> sys;
    for (std::size_t c : active) sys.push_back({local[c], Rational()});
    auto line = solve_affine(sys, d);
    if (line->dimension() != 1) return;
    Vector r = line->basis[0];
    if (!feasible(r)) {
      for (auto& v : r) v = -v;
      if (!feasible(r)) return;
    }
    Vector x(num_vars);
    for (std::size_t j = 0; j < d; ++j) {
      if (r[j].is_zero()) continue;
      for (std::size_t i = 0; i < num_vars; ++i) {
        x[i] += r[j] * space->basis[j][i];
      }
    }
    rays.push_back(primitive_integer(x));
  });
  std::sort(rays.begin(), rays.end());
  rays.erase(std::unique(rays.begin(), rays.end()), rays.end());
  return rays;
}

Vector primitive_integer(const Vector& v) {
  BigInt den = 1;
  for (const auto& r : v) {
    BigInt q = r.denominator();
    den = den / boost::multiprecision::gcd(den, q) * q;
  }
  BigInt g = 0;
  for (const auto& r : v) {
    BigInt p = r.numerator() * (den / r.denominator());
    g = boost::multiprecision::gcd(g, p < 0 ? BigInt(-p) : p);
  }
  if (g == 0) return v;
  Vector out;
  out.reserve(v.size());
  for (const auto& r : v) {
    out.emplace_back(r.numerator() * (den / r.denominator()) / g, BigInt(1));
  }
  return out;
}

std::string format_vector(const Vector& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += v[i].str();
  }
  return out;
}

}  // namespace psbe
