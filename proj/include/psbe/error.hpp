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

#ifndef PSBE_ERROR_HPP_
#define PSBE_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace psbe {

enum class ErrorKind {
  kParse,
  kInconsistentOrder,
  kUnbounded,
  kNotADeductiveSystem,
  kNotProper,
  kNotDistributive,
  kConditionAMissing,
  kNotAHomomorphism,
  kNotBijective,
  kNotAPseudoValuation,
  kPrecondition,
  kDimensionTooLarge,
  kSizeGuard,
  // A result contradicted a property the algebra guarantees; points at a
  // bug or at an input outside the theory's hypotheses.
  kConsistencyAlarm,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace psbe

#endif  // PSBE_ERROR_HPP_
