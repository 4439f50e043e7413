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


#include <catch_amalgamated.hpp>

#include "psbe/error.hpp"
#include "psbe/meta.hpp"

namespace psbe {
namespace {

TEST_CASE("sweep to size three is clean", "[meta]") {
  MetaOptions o;
  o.max_size = 3;
  MetaTheoremReport r = verify_meta_theorems(o);
  CHECK(r.clean());
  CHECK(r.models_per_size == std::vector<std::size_t>{1, 1, 4});
  CHECK(r.theorems.size() == 15);
  for (const auto& t : r.theorems) {
    INFO(t.name);
    CHECK(t.counterexamples == 0);
    CHECK(t.models_checked > 0);
    CHECK_FALSE(t.first_counterexample.has_value());
  }
}

TEST_CASE("sweep to size four is clean and worker independent", "[meta]") {
  MetaOptions o;
  o.max_size = 4;
  MetaTheoremReport one = verify_meta_theorems(o);
  o.workers = 8;
  MetaTheoremReport many = verify_meta_theorems(o);
  CHECK(one.clean());
  CHECK(one.models_per_size == std::vector<std::size_t>{1, 1, 4, 77});
  REQUIRE(one.theorems.size() == many.theorems.size());
  for (std::size_t i = 0; i < one.theorems.size(); ++i) {
    CHECK(one.theorems[i].models_checked == many.theorems[i].models_checked);
  }
}

TEST_CASE("sweep size guard", "[meta]") {
  MetaOptions o;
  o.max_size = kMaxSweepSize + 1;
  CHECK_THROWS_AS(verify_meta_theorems(o), Error);
}

}  // namespace
}  // namespace psbe
