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

#ifndef PSBE_HOMOMORPHISMS_HPP_
#define PSBE_HOMOMORPHISMS_HPP_

#include <istream>
#include <string>
#include <vector>

#include "psbe/algebra.hpp"
#include "psbe/check_result.hpp"

namespace psbe {

/// A map from the carrier of a source algebra to that of a target algebra.
struct Homomorphism {
  std::vector<ElementId> map;

  ElementId operator()(ElementId x) const { return map[x]; }
  bool operator==(const Homomorphism&) const = default;
  auto operator<=>(const Homomorphism&) const = default;
};

struct HomomorphismReport {
  CheckResult operations;  // rule "hom", witness (x, y)
  bool preserves_unit = false;
  bool monotone = false;
};

HomomorphismReport check_homomorphism(const FiniteAlgebra& source,
                                      const FiniteAlgebra& target,
                                      const Homomorphism& f);
bool is_homomorphism(const FiniteAlgebra& source, const FiniteAlgebra& target,
                     const Homomorphism& f);
bool is_bijective(const FiniteAlgebra& source, const FiniteAlgebra& target,
                  const Homomorphism& f);
bool is_surjective(const FiniteAlgebra& target, const Homomorphism& f);

// {x : f(x) = 1}. Throws kNotAHomomorphism.
ElementSubset hom_kernel(const FiniteAlgebra& source,
                         const FiniteAlgebra& target, const Homomorphism& f);

// f^{-1}(E) for a deductive system E of the target.
ElementSubset preimage_ds(const FiniteAlgebra& source,
                          const FiniteAlgebra& target, const Homomorphism& f,
                          const ElementSubset& e);

// f(D) for a deductive system D of the source, with f surjective and
// Ker(f) in D. Throws kPrecondition naming the failed hypothesis.
ElementSubset image_ds(const FiniteAlgebra& source,
                       const FiniteAlgebra& target, const Homomorphism& f,
                       const ElementSubset& d);

struct HomSearchOptions {
  bool iso_only = false;
  std::size_t workers = 1;
  // Disables unit forcing and propagation; plain generate-and-test.
  bool audit = false;
};

inline constexpr double kMaxHomSearch = 1e7;

// Sorted lexicographically. Throws kSizeGuard when |B|^|A| > 1e7.
std::vector<Homomorphism> enumerate_homomorphisms(
    const FiniteAlgebra& source, const FiniteAlgebra& target,
    const HomSearchOptions& options = {});

Homomorphism parse_homomorphism(const FiniteAlgebra& source,
                                const FiniteAlgebra& target, std::istream& in);
Homomorphism load_homomorphism(const FiniteAlgebra& source,
                               const FiniteAlgebra& target,
                               const std::string& path);
std::string serialize(const FiniteAlgebra& source, const FiniteAlgebra& target,
                      const Homomorphism& f);

}  // namespace psbe

#endif  // PSBE_HOMOMORPHISMS_HPP_
