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

#ifndef PSBE_CHECK_RESULT_HPP_
#define PSBE_CHECK_RESULT_HPP_

#include <string>
#include <utility>
#include <vector>

#include "psbe/subset.hpp"

namespace psbe {

/// Verdict of a membership check. On failure, rule names the first failing
/// condition and witness holds the lexicographically first failing tuple.
struct CheckResult {
  bool holds = true;
  std::string rule;
  std::vector<ElementId> witness;
  std::string detail;

  explicit operator bool() const noexcept { return holds; }

  static CheckResult pass() { return CheckResult{}; }
  static CheckResult fail(std::string rule, std::vector<ElementId> witness,
                          std::string detail = {}) {
    return CheckResult{false, std::move(rule), std::move(witness),
                       std::move(detail)};
  }
};

}  // namespace psbe

#endif  // PSBE_CHECK_RESULT_HPP_
