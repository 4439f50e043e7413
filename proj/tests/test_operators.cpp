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

#include <set>

#include "psbe/algebra.hpp"
#include "psbe/axioms.hpp"
#include "psbe/deductive.hpp"
#include "psbe/error.hpp"
#include "psbe/model_finder.hpp"
#include "psbe/operators.hpp"
#include "support.hpp"

namespace psbe {
namespace {

using testing::load_fixture;

// Internal-state conditions read off the tables; `twisted` selects the
// second kind.
bool oracle_internal_state(const FiniteAlgebra& a, const UnaryOperator& mu,
                           bool twisted) {
  for (ElementId x = 0; x < a.size(); ++x) {
    for (ElementId y = 0; y < a.size(); ++y) {
      if (a.below(x, y) && !a.below(mu(x), mu(y))) return false;
      ElementId j1 = twisted ? vee1(a, y, x) : vee1(a, x, y);
      ElementId j2 = twisted ? vee2(a, y, x) : vee2(a, x, y);
      if (mu(a.arrow(x, y)) != a.arrow(mu(j1), mu(y))) return false;
      if (mu(a.squig(x, y)) != a.squig(mu(j2), mu(y))) return false;
      if (mu(a.arrow(mu(x), mu(y))) != a.arrow(mu(x), mu(y))) return false;
      if (mu(a.squig(mu(x), mu(y))) != a.squig(mu(x), mu(y))) return false;
    }
  }
  return true;
}

bool oracle_smo(const FiniteAlgebra& a, const UnaryOperator& mu) {
  for (ElementId x = 0; x < a.size(); ++x) {
    if (mu(mu(x)) != mu(x)) return false;
    for (ElementId y = 0; y < a.size(); ++y) {
      if (mu(a.arrow(x, y)) != a.arrow(mu(x), mu(y))) return false;
      if (mu(a.squig(x, y)) != a.squig(mu(x), mu(y))) return false;
    }
  }
  return true;
}

std::vector<UnaryOperator> all_maps(std::size_t n) {
  std::vector<UnaryOperator> out;
  UnaryOperator mu{std::vector<ElementId>(n, 0)};
  while (true) {
    out.push_back(mu);
    std::size_t k = n;
    while (k > 0 && ++mu.map[k - 1] == n) mu.map[--k] = 0;
    if (k == 0) break;
  }
  return out;
}

std::set<std::string> image_rows(const FiniteAlgebra& a,
                                 const std::vector<UnaryOperator>& ops) {
  std::set<std::string> out;
  for (const auto& mu : ops) {
    std::string row;
    for (ElementId v : mu.map) row += (row.empty() ? "" : " ") + a.token(v);
    out.insert(row);
  }
  return out;
}

const std::set<std::string> kInternalStates = {
    "1 a a a a", "1 b b b b", "1 c c c c", "1 d d d d", "1 d c c d",
    "1 1 b b 1", "1 1 c c 1", "1 a 1 1 a", "1 d 1 1 d", "1 1 1 1 1"};

const std::set<std::string> kSmos = {
    "1 d c c d", "1 1 b b 1", "1 1 c c 1", "1 a 1 1 a", "1 d 1 1 d",
    "1 1 1 1 1", "1 a b c d", "1 a c c d", "1 d b c d"};

TEST_CASE("internal states of the condition (A) algebra", "[operators]") {
  FiniteAlgebra a = load_fixture("cond_a5.alg");
  auto one = enumerate_internal_states(a, InternalStateKind::kTypeI);
  auto two = enumerate_internal_states(a, InternalStateKind::kTypeII);
  CHECK(image_rows(a, one) == kInternalStates);
  CHECK(image_rows(a, two) == kInternalStates);
  CHECK(std::is_sorted(one.begin(), one.end()));
}

TEST_CASE("state-morphism operators of the condition (A) algebra", "[operators]") {
  FiniteAlgebra a = load_fixture("cond_a5.alg");
  auto smo = enumerate_smo(a);
  CHECK(image_rows(a, smo) == kSmos);
  std::set<std::string> diff;
  for (const auto& r : kSmos) {
    if (!kInternalStates.contains(r)) diff.insert(r);
  }
  CHECK(diff == std::set<std::string>{"1 a b c d", "1 a c c d", "1 d b c d"});
}

TEST_CASE("identity map is not an internal state here", "[operators]") {
  FiniteAlgebra a = load_fixture("cond_a5.alg");
  CheckResult r = is_internal_state(a, operator_of(a, "1 a b c d"),
                                    InternalStateKind::kTypeI);
  REQUIRE_FALSE(r.holds);
  CHECK(r.rule == "is2");
  CHECK(format_tuple(a, r.witness) == "(a,b)");
  CHECK(is_smo(a, operator_of(a, "1 a b c d")).holds);
}

TEST_CASE("operator kernels", "[operators]") {
  FiniteAlgebra a = load_fixture("cond_a5.alg");
  auto kernel = [&](std::string_view images) {
    return format_subset(a, kernel_image(a, operator_of(a, images)).kernel);
  };
  for (const char* m : {"1 a a a a", "1 b b b b", "1 c c c c", "1 d d d d",
                        "1 d c c d"}) {
    CHECK(kernel(m) == "{1}");
  }
  CHECK(kernel("1 1 b b 1") == "{1,a,d}");
  CHECK(kernel("1 1 c c 1") == "{1,a,d}");
  CHECK(kernel("1 a 1 1 a") == "{1,b,c}");
  CHECK(kernel("1 d 1 1 d") == "{1,b,c}");
  CHECK(kernel("1 1 1 1 1") == "{1,a,b,c,d}");
  CHECK_THROWS_AS(kernel_image(a, operator_of(a, "1 b a d c")), Error);
}

TEST_CASE("enumeration agrees with the table oracle over all maps", "[operators][oracle]") {
  std::vector<FiniteAlgebra> pool = {load_fixture("cond_a5.alg"),
                                     load_fixture("bck4.alg"),
                                     load_fixture("luk3.alg")};
  for (std::size_t n = 2; n <= 3; ++n) {
    SearchConstraints c;
    c.size = n;
    for (auto& m : enumerate_models(c)) pool.push_back(m);
  }
  for (const FiniteAlgebra& a : pool) {
    INFO(serialize(a));
    std::vector<UnaryOperator> t1, t2, s;
    for (const auto& mu : all_maps(a.size())) {
      if (oracle_internal_state(a, mu, false)) t1.push_back(mu);
      if (oracle_internal_state(a, mu, true)) t2.push_back(mu);
      if (oracle_smo(a, mu)) s.push_back(mu);
    }
    CHECK(enumerate_internal_states(a, InternalStateKind::kTypeI) == t1);
    CHECK(enumerate_internal_states(a, InternalStateKind::kTypeII) == t2);
    CHECK(enumerate_smo(a) == s);
    EnumerationOptions audit;
    audit.audit = true;
    CHECK(enumerate_internal_states(a, InternalStateKind::kTypeI, audit) == t1);
    CHECK(enumerate_smo(a, audit) == s);
  }
}

TEST_CASE("kernel and image properties", "[operators][property]") {
  for (std::size_t n = 2; n <= 4; ++n) {
    SearchConstraints c;
    c.size = n;
    for (const FiniteAlgebra& a : enumerate_models(c)) {
      for (const auto& mu : enumerate_smo(a)) {
        KernelImage ki = kernel_image(a, mu);
        CHECK(is_deductive_system(a, ki.kernel));
        CHECK((ki.kernel & ki.image).count() == 1);
      }
      if (!satisfies(a, AxiomSystem::kConditionA)) continue;
      for (auto kind : {InternalStateKind::kTypeI, InternalStateKind::kTypeII}) {
        for (const auto& mu : enumerate_internal_states(a, kind)) {
          KernelImage ki = kernel_image(a, mu);
          CHECK(is_deductive_system(a, ki.kernel));
          CHECK((ki.kernel & ki.image).count() == 1);
        }
      }
    }
  }
}

TEST_CASE("worker count does not change enumeration", "[operators]") {
  FiniteAlgebra a = load_fixture("nonbck6.alg");
  EnumerationOptions one, many;
  many.workers = 8;
  CHECK(enumerate_smo(a, one) == enumerate_smo(a, many));
  CHECK(enumerate_internal_states(a, InternalStateKind::kTypeII, one) ==
        enumerate_internal_states(a, InternalStateKind::kTypeII, many));
}

TEST_CASE("operator files", "[operators][parse]") {
  FiniteAlgebra a = load_fixture("cond_a5.alg");
  UnaryOperator mu = operator_of(a, "1 d c c d");
  CHECK(parse_operator_text(a, serialize(a, mu)) == mu);
  CHECK_THROWS_AS(parse_operator_text(a, "map 1->1\n"), Error);
  CHECK_THROWS_AS(parse_operator_text(a, "map 1->1\nmap 1->a\n"), Error);
  CHECK_THROWS_AS(parse_operator_text(a, "map 1->z\n"), Error);
}

}  // namespace
}  // namespace psbe
