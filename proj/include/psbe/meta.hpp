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


#ifndef PSBE_META_HPP_
#define PSBE_META_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace psbe {

struct TheoremCheck {
  std::string name;
  std::size_t models_checked = 0;  // models satisfying the hypothesis
  std::size_t counterexamples = 0;
  // Algebra text of the first counterexample, replayable with check.
  std::optional<std::string> first_counterexample;
  std::string detail;
};

struct MetaTheoremReport {
  std::size_t max_size = 0;
  std::vector<std::size_t> models_per_size;  // pseudo-BE models, n = 1..max
  std::vector<TheoremCheck> theorems;

  bool clean() const;
};

struct MetaOptions {
  std::size_t max_size = 3;
  std::size_t workers = 1;
  // Report counterexamples instead of throwing kConsistencyAlarm.
  bool allow_counterexamples = false;
};

inline constexpr std::size_t kMaxSweepSize = 4;

// Throws kSizeGuard above kMaxSweepSize.
MetaTheoremReport verify_meta_theorems(const MetaOptions& options);

}  // namespace psbe

#endif  // PSBE_META_HPP_
