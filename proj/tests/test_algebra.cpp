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

#include "psbe/algebra.hpp"
#include "psbe/axioms.hpp"
#include "psbe/error.hpp"
#include "psbe/model_finder.hpp"
#include "support.hpp"

namespace psbe {
namespace {

using testing::load_fixture;

ElementId id(const FiniteAlgebra& a, std::string_view tok) {
  return *a.find(tok);
}

ErrorKind parse_error_kind(std::string_view text) {
  try {
    parse_algebra_text(text);
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("parse succeeded");
  return ErrorKind::kConsistencyAlarm;
}

const std::vector<FiniteAlgebra>& models_up_to_4() {
  static const std::vector<FiniteAlgebra> all = [] {
    std::vector<FiniteAlgebra> out;
    for (std::size_t n = 1; n <= 4; ++n) {
      SearchConstraints c;
      c.size = n;
      auto part = enumerate_models(c);
      out.insert(out.end(), part.begin(), part.end());
    }
    return out;
  }();
  return all;
}

TEST_CASE("parser reads the four-element table", "[algebra][parse]") {
  FiniteAlgebra a = load_fixture("bck4.alg");
  CHECK(a.size() == 4);
  CHECK(a.token(a.unit()) == "1");
  CHECK(a.arrow(id(a, "b"), id(a, "a")) == id(a, "a"));
  CHECK(a.squig(id(a, "b"), id(a, "a")) == id(a, "c"));
  CHECK_FALSE(a.bottom().has_value());
}

TEST_CASE("trivial algebra", "[algebra][parse]") {
  FiniteAlgebra a = parse_algebra_text(
      "algebra t\nelements 1\nunit 1\ntable arrow\n1\ntable squig\n1\nend\n");
  CHECK(a.size() == 1);
  ClassificationReport c = classify(a);
  CHECK(c.pseudo_be);
  CHECK(c.pseudo_bck);
  CHECK(c.be);
  CHECK(c.commutative);
  CHECK(c.distributive);
  CHECK_FALSE(c.proper);
}

TEST_CASE("malformed input is rejected", "[algebra][parse]") {
  const std::string head = "algebra t\nelements 1 a\nunit 1\n";
  CHECK(parse_error_kind(head + "table arrow\n1 a\n1\ntable squig\n1 a\n1 1\nend\n") ==
        ErrorKind::kParse);
  CHECK(parse_error_kind("algebra t\nelements 1 1\nunit 1\n") == ErrorKind::kParse);
  CHECK(parse_error_kind(head + "table arrow\n1 z\n1 1\ntable squig\n1 a\n1 1\nend\n") ==
        ErrorKind::kParse);
  CHECK(parse_error_kind(head + "table arrow\n1 a\n1 1\nend\n") == ErrorKind::kParse);
  CHECK(parse_error_kind("algebra t\nelements 1 a\nunit q\n") == ErrorKind::kParse);
  try {
    parse_algebra_text(head + "table arrow\n1 a\n1\ntable squig\n1 a\n1 1\nend\n");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("row length mismatch") != std::string::npos);
  }
}

TEST_CASE("serialization round-trips", "[algebra][parse]") {
  for (const auto& name : testing::algebra_fixtures()) {
    FiniteAlgebra a = load_fixture(name);
    CHECK(parse_algebra_text(serialize(a)) == a);
  }
}

TEST_CASE("axiom checks agree with the table oracles on fixtures", "[algebra][oracle]") {
  for (const auto& name : testing::algebra_fixtures()) {
    FiniteAlgebra a = load_fixture(name);
    INFO(name);
    CHECK(satisfies(a, AxiomSystem::kPseudoBE) == testing::naive_pseudo_be(a));
    CHECK(satisfies(a, AxiomSystem::kPseudoBCK) == testing::naive_pseudo_bck(a));
  }
}

TEST_CASE("pseudo-BCK failure witness on the six-element algebra", "[algebra]") {
  FiniteAlgebra a = load_fixture("nonbck6.alg");
  CHECK(satisfies(a, AxiomSystem::kPseudoBE));
  AxiomReport r = check_axioms(a, AxiomSystem::kPseudoBCK);
  REQUIRE_FALSE(r.holds);
  REQUIRE(r.violations.size() == 1);
  CHECK(r.violations[0].axiom == "psBCK6");
  CHECK(format_tuple(a, r.violations[0].witness) == "(b,c)");
  CHECK(satisfies(a, AxiomSystem::kDistributive));
  ClassificationReport c = classify(a);
  CHECK(c.proper);
  CHECK_FALSE(c.pseudo_bck);
}

TEST_CASE("condition (A) algebra is not commutative", "[algebra]") {
  FiniteAlgebra a = load_fixture("cond_a5.alg");
  CHECK(satisfies(a, AxiomSystem::kPseudoBE));
  CHECK(satisfies(a, AxiomSystem::kConditionA));
  CHECK_FALSE(satisfies(a, AxiomSystem::kCommutative));
  ElementId ea = id(a, "a"), eb = id(a, "b"), ed = id(a, "d");
  CHECK(vee1(a, ea, ed) == ed);
  CHECK(vee1(a, ed, ea) == ea);
  CHECK(vee1(a, ea, eb) == a.unit());
}

TEST_CASE("order queries", "[algebra]") {
  FiniteAlgebra a = load_fixture("bck4.alg");
  CHECK(leq(a, id(a, "a"), id(a, "b")));
  for (ElementId x = 0; x < a.size(); ++x) {
    CHECK(leq(a, x, a.unit()));
    if (x != a.unit()) CHECK_FALSE(leq(a, a.unit(), x));
  }
  FiniteAlgebra broken = parse_algebra_text(
      "algebra t\nelements 1 a\nunit 1\ntable arrow\n1 a\n1 1\n"
      "table squig\n1 a\na 1\nend\n");
  CHECK_THROWS_AS(leq(broken, 1, 0), Error);
}

TEST_CASE("negations on the bounded algebra", "[algebra]") {
  FiniteAlgebra a = load_fixture("bounded6.alg");
  REQUIRE(a.is_bounded());
  ElementId e = *a.bottom();
  auto [minus, tilde] = negations(a, id(a, "a"));
  CHECK(minus == id(a, "d"));
  CHECK(tilde == id(a, "c"));
  CHECK(negations(a, a.unit()) == std::pair{e, e});
  CHECK(negations(a, e) == std::pair{a.unit(), a.unit()});
  CHECK(double_neg_arrow_first(a, id(a, "a")) == id(a, "a"));
  CHECK_THROWS_AS(negations(load_fixture("bck4.alg"), 0), Error);
}

TEST_CASE("bottom must be declared to count as bounded", "[algebra]") {
  FiniteAlgebra a = load_fixture("bounded6.alg").with_bottom(std::nullopt);
  CHECK_FALSE(a.is_bounded());
  CHECK_FALSE(classify(a).bounded);
}

TEST_CASE("pseudo-BE invariants hold on all small models", "[algebra][property]") {
  for (const FiniteAlgebra& a : models_up_to_4()) {
    INFO(serialize(a));
    REQUIRE(testing::naive_pseudo_be(a));
    const ElementId one = a.unit();
    for (ElementId x = 0; x < a.size(); ++x) {
      CHECK(vee1(a, x, x) == x);
      CHECK(vee1(a, x, one) == one);
      CHECK(vee1(a, one, x) == one);
      for (ElementId y = 0; y < a.size(); ++y) {
        CHECK(a.arrow(x, a.squig(y, x)) == one);
        CHECK(a.squig(x, a.arrow(y, x)) == one);
      }
    }
    CHECK(satisfies(a, AxiomSystem::kPseudoBCK) == testing::naive_pseudo_bck(a));
  }
}

TEST_CASE("join is monotone under condition (A)", "[algebra][property]") {
  for (const FiniteAlgebra& a : models_up_to_4()) {
    if (!satisfies(a, AxiomSystem::kConditionA)) continue;
    for (ElementId x = 0; x < a.size(); ++x) {
      for (ElementId y = 0; y < a.size(); ++y) {
        if (!a.below(x, y)) continue;
        for (ElementId z = 0; z < a.size(); ++z) {
          CHECK(a.below(a.squig(a.arrow(x, z), z), a.squig(a.arrow(y, z), z)));
        }
      }
    }
  }
}

TEST_CASE("P and Q identities characterize commutative algebras", "[algebra][property]") {
  for (const FiniteAlgebra& a : models_up_to_4()) {
    bool comm = satisfies(a, AxiomSystem::kCommutative);
    CHECK(satisfies(a, AxiomSystem::kPSystem) == comm);
    CHECK(satisfies(a, AxiomSystem::kQSystem) == comm);
  }
}

TEST_CASE("classification invariants", "[algebra][property]") {
  std::vector<FiniteAlgebra> pool = models_up_to_4();
  for (const auto& name : testing::algebra_fixtures()) pool.push_back(load_fixture(name));
  for (const FiniteAlgebra& a : pool) {
    ClassificationReport c = classify(a);
    if (c.involutive) CHECK(c.good);
    if (c.commutative && c.pseudo_be) CHECK(c.pseudo_bck);
    CHECK(c.be == a.same_operations());
    CHECK(c.proper == (c.pseudo_be && !c.be));
    CHECK(classify(parse_algebra_text(serialize(a))).linear == c.linear);
  }
}

}  // namespace
}  // namespace psbe
