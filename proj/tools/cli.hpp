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


#ifndef PSBE_TOOLS_CLI_HPP_
#define PSBE_TOOLS_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace psbe::cli {

// Exit codes: 0 property holds, 1 property fails, 2 usage or input error.
inline constexpr int kHolds = 0;
inline constexpr int kFails = 1;
inline constexpr int kUsage = 2;

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace psbe::cli

#endif  // PSBE_TOOLS_CLI_HPP_
