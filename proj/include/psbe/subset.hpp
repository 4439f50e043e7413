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

#ifndef PSBE_SUBSET_HPP_
#define PSBE_SUBSET_HPP_

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace psbe {

using ElementId = std::uint32_t;

/// A subset of a carrier {0, ..., n-1}, n <= 64, stored as a bit mask.
class ElementSubset {
 public:
  static constexpr std::size_t kMaxUniverse = 64;

  ElementSubset() = default;
  explicit ElementSubset(std::size_t universe);
  ElementSubset(std::size_t universe, std::uint64_t mask);
  ElementSubset(std::size_t universe, const std::vector<ElementId>& members);

  static ElementSubset full(std::size_t universe);

  std::size_t universe() const noexcept { return universe_; }
  std::uint64_t mask() const noexcept { return mask_; }
  std::size_t count() const noexcept { return std::popcount(mask_); }
  bool empty() const noexcept { return mask_ == 0; }
  bool is_full() const noexcept { return count() == universe_; }

  bool contains(ElementId x) const noexcept {
    return x < universe_ && ((mask_ >> x) & 1U) != 0;
  }
  void insert(ElementId x);
  void erase(ElementId x);

  std::vector<ElementId> members() const;

  bool is_subset_of(const ElementSubset& other) const noexcept {
    return (mask_ & ~other.mask_) == 0;
  }

  ElementSubset operator&(const ElementSubset& other) const;
  ElementSubset operator|(const ElementSubset& other) const;

  bool operator==(const ElementSubset&) const = default;

 private:
  std::size_t universe_ = 0;
  std::uint64_t mask_ = 0;
};

// Ordering used for every listing of subsets: by cardinality, then by the
// ascending member-index sequence.
bool canonical_less(const ElementSubset& a, const ElementSubset& b);

}  // namespace psbe

#endif  // PSBE_SUBSET_HPP_
