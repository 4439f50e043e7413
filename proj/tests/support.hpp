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


// Shared helpers for the test binaries. The oracles here are deliberately
// naive: they read the operation tables directly and never call into the
// library's checkers, so they can be used to audit them.

#ifndef PSBE_TESTS_SUPPORT_HPP_
#define PSBE_TESTS_SUPPORT_HPP_

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "psbe/algebra.hpp"
#include "psbe/subset.hpp"

#ifndef PSBE_FIXTURE_DIR
#error "PSBE_FIXTURE_DIR must be defined by the build"
#endif

namespace psbe::testing {

inline std::string fixture(const std::string& name) {
  return std::string(PSBE_FIXTURE_DIR) + "/" + name;
}

inline FiniteAlgebra load_fixture(const std::string& name) {
  return load_algebra(fixture(name));
}

inline const std::vector<std::string>& algebra_fixtures() {
  static const std::vector<std::string> names = {
      "bck4.alg", "nonbck6.alg", "bounded6.alg", "cond_a5.alg", "luk3.alg"};
  return names;
}

// Subsets containing the unit and closed under both modus ponens rules,
// found by testing every subset. Returned as bit masks.
inline std::set<std::uint64_t> naive_ds_masks(const FiniteAlgebra& a) {
  const std::size_t n = a.size();
  std::set<std::uint64_t> out;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
    auto in = [&](ElementId x) { return ((m >> x) & 1U) != 0; };
    if (!in(a.unit())) continue;
    bool ok = true;
    for (ElementId x = 0; x < n && ok; ++x) {
      for (ElementId y = 0; y < n && ok; ++y) {
        if (in(x) && in(a.arrow(x, y)) && !in(y)) ok = false;
        if (in(x) && in(a.squig(x, y)) && !in(y)) ok = false;
      }
    }
    if (ok) out.insert(m);
  }
  return out;
}

// The five pseudo-BE axioms, read off the tables.
inline bool naive_pseudo_be(const FiniteAlgebra& a) {
  const std::size_t n = a.size();
  const ElementId one = a.unit();
  for (ElementId x = 0; x < n; ++x) {
    if (a.arrow(x, x) != one || a.squig(x, x) != one) return false;
    if (a.arrow(x, one) != one || a.squig(x, one) != one) return false;
    if (a.arrow(one, x) != x || a.squig(one, x) != x) return false;
    for (ElementId y = 0; y < n; ++y) {
      if ((a.arrow(x, y) == one) != (a.squig(x, y) == one)) return false;
      for (ElementId z = 0; z < n; ++z) {
        if (a.arrow(x, a.squig(y, z)) != a.squig(y, a.arrow(x, z))) {
          return false;
        }
      }
    }
  }
  return true;
}

// The six pseudo-BCK conditions, read off the tables.
inline bool naive_pseudo_bck(const FiniteAlgebra& a) {
  const std::size_t n = a.size();
  const ElementId one = a.unit();
  for (ElementId x = 0; x < n; ++x) {
    if (a.arrow(one, x) != x || a.squig(one, x) != x) return false;
    if (a.arrow(x, one) != one) return false;
    for (ElementId y = 0; y < n; ++y) {
      if (x != y && a.arrow(x, y) == one && a.arrow(y, x) == one) return false;
      for (ElementId z = 0; z < n; ++z) {
        if (a.squig(a.arrow(x, y), a.squig(a.arrow(y, z), a.arrow(x, z))) !=
            one) {
          return false;
        }
        if (a.arrow(a.squig(x, y), a.arrow(a.squig(y, z), a.squig(x, z))) !=
            one) {
          return false;
        }
      }
    }
  }
  return true;
}

// Relabels a table by a permutation of the carrier.
inline FiniteAlgebra permuted(const FiniteAlgebra& a,
                              const std::vector<ElementId>& perm) {
  const std::size_t n = a.size();
  std::vector<std::string> tokens(n);
  std::vector<ElementId> arrow(n * n);
  std::vector<ElementId> squig(n * n);
  for (ElementId x = 0; x < n; ++x) tokens[perm[x]] = a.token(x);
  for (ElementId x = 0; x < n; ++x) {
    for (ElementId y = 0; y < n; ++y) {
      arrow[perm[x] * n + perm[y]] = perm[a.arrow(x, y)];
      squig[perm[x] * n + perm[y]] = perm[a.squig(x, y)];
    }
  }
  std::optional<ElementId> bottom;
  if (a.bottom()) bottom = perm[*a.bottom()];
  return FiniteAlgebra(a.name() + "_perm", tokens, arrow, squig, perm[a.unit()],
                       bottom);
}

enum class Forced {
  kUnitRowsColumnsDiagonal,  // 1 -> x = x, x -> 1 = 1, x -> x = 1, both tables
  kUnitRowsArrowColumn,      // 1 -> x = 1 ~> x = x and x -> 1 = 1 only
};

// Tables of size n (unit at index 0) up to relabelling of the non-unit
// elements, counted by brute force. The cells named by `forced` are filled in
// from the axioms themselves; every other cell of both tables ranges freely
// and the result is filtered by `accept`.
template <typename Accept>
std::size_t naive_model_count(std::size_t n, Forced forced, Accept&& accept) {
  const bool full = forced == Forced::kUnitRowsColumnsDiagonal;
  // Free cells are indices into the concatenated arrow|squig tables.
  std::vector<ElementId> free_cells;
  std::vector<ElementId> cells(2 * n * n, 0);
  for (std::size_t t = 0; t < 2; ++t) {
    for (ElementId x = 0; x < n; ++x) {
      for (ElementId y = 0; y < n; ++y) {
        const auto c = static_cast<ElementId>(t * n * n + x * n + y);
        if (x == 0) {
          cells[c] = y;
        } else if (y == 0 && (full || t == 0)) {
          cells[c] = 0;
        } else if (full && x == y) {
          cells[c] = 0;
        } else {
          free_cells.push_back(c);
        }
      }
    }
  }
  std::vector<std::string> tokens(n);
  tokens[0] = "1";
  for (std::size_t i = 1; i < n; ++i) tokens[i] = std::string(1, char('a' + i - 1));

  std::vector<ElementId> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<ElementId>> perms;
  do {
    perms.push_back(perm);
  } while (std::next_permutation(perm.begin() + 1, perm.end()));

  std::set<std::vector<ElementId>> classes;
  const std::size_t k = free_cells.size();
  std::vector<ElementId> choice(k, 0);
  while (true) {
    for (std::size_t i = 0; i < k; ++i) cells[free_cells[i]] = choice[i];
    FiniteAlgebra a("t", tokens,
                    std::vector<ElementId>(cells.begin(), cells.begin() + n * n),
                    std::vector<ElementId>(cells.begin() + n * n, cells.end()),
                    0);
    if (accept(a)) {
      std::vector<ElementId> best;
      for (const auto& p : perms) {
        std::vector<ElementId> key(2 * n * n);
        for (ElementId x = 0; x < n; ++x) {
          for (ElementId y = 0; y < n; ++y) {
            key[p[x] * n + p[y]] = p[a.arrow(x, y)];
            key[n * n + p[x] * n + p[y]] = p[a.squig(x, y)];
          }
        }
        if (best.empty() || key < best) best = key;
      }
      classes.insert(best);
    }
    std::size_t i = k;
    while (i > 0 && ++choice[i - 1] == n) choice[--i] = 0;
    if (i == 0) break;
  }
  return classes.size();
}

}  // namespace psbe::testing

#endif  // PSBE_TESTS_SUPPORT_HPP_
