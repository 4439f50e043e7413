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

#include "psbe/axioms.hpp"

#include <array>

#include "psbe/error.hpp"

namespace psbe {

// Term

Term Term::var(int index) {
  Term t;
  t.code_.push_back({Op::kVar, static_cast<std::uint8_t>(index)});
  return t;
}

Term Term::one() {
  Term t;
  t.code_.push_back({Op::kOne, 0});
  return t;
}

Term Term::arrow(const Term& lhs, const Term& rhs) {
  Term t;
  t.code_ = lhs.code_;
  t.code_.insert(t.code_.end(), rhs.code_.begin(), rhs.code_.end());
  t.code_.push_back({Op::kArrow, 0});
  return t;
}

Term Term::squig(const Term& lhs, const Term& rhs) {
  Term t;
  t.code_ = lhs.code_;
  t.code_.insert(t.code_.end(), rhs.code_.begin(), rhs.code_.end());
  t.code_.push_back({Op::kSquig, 0});
  return t;
}

ElementId Term::eval(const TableView& tv, const ElementId* vars) const {
  std::array<ElementId, 16> stack;
  std::size_t top = 0;
  for (const Instr& in : code_) {
    switch (in.op) {
      case Op::kVar:
        stack[top++] = vars[in.var];
        break;
      case Op::kOne:
        stack[top++] = tv.unit;
        break;
      case Op::kArrow:
      case Op::kSquig: {
        ElementId b = stack[--top];
        ElementId a = stack[top - 1];
        if (a == kUnknown || b == kUnknown) return kUnknown;
        const ElementId* t = in.op == Op::kArrow ? tv.arrow : tv.squig;
        stack[top - 1] = t[a * tv.n + b];
        break;
      }
    }
  }
  return stack[0];
}

ElementId Term::eval_root(const TableView& tv, const ElementId* vars,
                          std::size_t* blocked) const {
  *blocked = kNoCell;
  const Instr& last = code_.back();
  if (last.op == Op::kVar || last.op == Op::kOne) return eval(tv, vars);
  std::array<ElementId, 16> stack;
  std::size_t top = 0;
  for (std::size_t i = 0; i < code_.size(); ++i) {
    const Instr& in = code_[i];
    switch (in.op) {
      case Op::kVar:
        stack[top++] = vars[in.var];
        break;
      case Op::kOne:
        stack[top++] = tv.unit;
        break;
      case Op::kArrow:
      case Op::kSquig: {
        ElementId b = stack[--top];
        ElementId a = stack[top - 1];
        if (a == kUnknown || b == kUnknown) return kUnknown;
        std::size_t cell = a * tv.n + b;
        const ElementId* t = in.op == Op::kArrow ? tv.arrow : tv.squig;
        stack[top - 1] = t[cell];
        if (t[cell] == kUnknown && i + 1 == code_.size()) {
          *blocked = in.op == Op::kArrow ? cell : tv.n * tv.n + cell;
        }
        break;
      }
    }
  }
  return stack[0];
}

namespace {

Truth eval_equation(const Equation& e, const TableView& tv,
                    const ElementId* vars) {
  ElementId l = e.lhs.eval(tv, vars);
  if (l == kUnknown) return Truth::kUnknown;
  ElementId r = e.rhs.eval(tv, vars);
  if (r == kUnknown) return Truth::kUnknown;
  return l == r ? Truth::kTrue : Truth::kFalse;
}

}  // namespace

Truth evaluate(const Constraint& c, const TableView& tv,
               const ElementId* vars) {
  bool premises_known = true;
  for (const Equation& p : c.premises) {
    Truth t = eval_equation(p, tv, vars);
    if (t == Truth::kFalse) return Truth::kTrue;
    if (t == Truth::kUnknown) premises_known = false;
  }
  Truth concl = eval_equation(c.conclusion, tv, vars);
  if (concl == Truth::kTrue) return Truth::kTrue;
  if (concl == Truth::kFalse && premises_known) return Truth::kFalse;
  return Truth::kUnknown;
}

Truth evaluate(const Axiom& a, const TableView& tv, const ElementId* vars) {
  Truth out = Truth::kTrue;
  for (const Constraint& c : a.constraints) {
    Truth t = evaluate(c, tv, vars);
    if (t == Truth::kFalse) return Truth::kFalse;
    if (t == Truth::kUnknown) out = Truth::kUnknown;
  }
  return out;
}

// Axiom systems

namespace {

using namespace term;

Constraint eq(Term l, Term r) { return Constraint{{}, Equation{l, r}}; }

Constraint when(std::vector<Equation> premises, Term l, Term r) {
  return Constraint{std::move(premises), Equation{l, r}};
}

Axiom axiom(std::string tag, int arity, std::vector<Constraint> cs) {
  return Axiom{std::move(tag), arity, std::move(cs)};
}

Term vee1(const Term& a, const Term& b) { return sq(ar(a, b), b); }
Term vee2(const Term& a, const Term& b) { return ar(sq(a, b), b); }

Axiom exchange(std::string tag) {
  return axiom(std::move(tag), 3,
               {eq(ar(x(), sq(y(), z())), sq(y(), ar(x(), z())))});
}

Axiom order_agreement(std::string tag) {
  return axiom(std::move(tag), 2,
               {when({{ar(x(), y()), one()}}, sq(x(), y()), one()),
                when({{sq(x(), y()), one()}}, ar(x(), y()), one())});
}

Axiom twisted_exchange(std::string tag) {
  return axiom(std::move(tag), 3,
               {eq(sq(ar(x(), z()), ar(y(), z())),
                   sq(ar(z(), x()), ar(y(), x()))),
                eq(ar(sq(x(), z()), sq(y(), z())),
                   ar(sq(z(), x()), sq(y(), x())))});
}

std::vector<Axiom> build(AxiomSystem s) {
  switch (s) {
    case AxiomSystem::kPseudoBE:
      return {
          axiom("psBE1", 1, {eq(ar(x(), x()), one()), eq(sq(x(), x()), one())}),
          axiom("psBE2", 1, {eq(ar(x(), one()), one()),
                             eq(sq(x(), one()), one())}),
          axiom("psBE3", 1, {eq(ar(one(), x()), x()), eq(sq(one(), x()), x())}),
          exchange("psBE4"),
          order_agreement("psBE5"),
      };
    case AxiomSystem::kPseudoBCK:
      return {
          axiom("psBCK1", 3,
                {eq(sq(ar(x(), y()), sq(ar(y(), z()), ar(x(), z()))), one())}),
          axiom("psBCK2", 3,
                {eq(ar(sq(x(), y()), ar(sq(y(), z()), sq(x(), z()))), one())}),
          axiom("psBCK3", 1, {eq(ar(one(), x()), x())}),
          axiom("psBCK4", 1, {eq(sq(one(), x()), x())}),
          axiom("psBCK5", 1, {eq(ar(x(), one()), one())}),
          axiom("psBCK6", 2,
                {when({{ar(x(), y()), one()}, {ar(y(), x()), one()}}, x(),
                      y())}),
      };
    case AxiomSystem::kConditionA:
      return {
          axiom("A", 3,
                {when({{ar(x(), y()), one()}},
                      ar(ar(y(), z()), ar(x(), z())), one()),
                 when({{ar(x(), y()), one()}},
                      ar(sq(y(), z()), sq(x(), z())), one())}),
      };
    case AxiomSystem::kDistributive:
      return {
          axiom("dist", 3,
                {eq(ar(x(), sq(y(), z())), sq(ar(x(), y()), ar(x(), z())))}),
      };
    case AxiomSystem::kCommutative:
      return {
          axiom("comm1", 2, {eq(vee1(x(), y()), vee1(y(), x()))}),
          axiom("comm2", 2, {eq(vee2(x(), y()), vee2(y(), x()))}),
      };
    case AxiomSystem::kPSystem:
      return {
          axiom("P1", 1, {eq(ar(one(), x()), x()), eq(sq(one(), x()), x())}),
          axiom("P2", 1, {eq(ar(x(), one()), one()),
                          eq(sq(x(), one()), one())}),
          twisted_exchange("P3"),
          exchange("P4"),
          order_agreement("P5"),
      };
    case AxiomSystem::kQSystem:
      return {
          axiom("Q1", 2, {eq(sq(ar(x(), one()), y()), y()),
                          eq(ar(sq(x(), one()), y()), y())}),
          twisted_exchange("Q2"),
          exchange("Q3"),
          order_agreement("Q4"),
      };
  }
  return {};
}

}  // namespace

const std::vector<AxiomSystem>& all_axiom_systems() {
  static const std::vector<AxiomSystem> all = {
      AxiomSystem::kPseudoBE,     AxiomSystem::kPseudoBCK,
      AxiomSystem::kConditionA,   AxiomSystem::kDistributive,
      AxiomSystem::kCommutative,  AxiomSystem::kPSystem,
      AxiomSystem::kQSystem,
  };
  return all;
}

std::string_view to_string(AxiomSystem s) {
  switch (s) {
    case AxiomSystem::kPseudoBE: return "pseudo-BE";
    case AxiomSystem::kPseudoBCK: return "pseudo-BCK";
    case AxiomSystem::kConditionA: return "condition-A";
    case AxiomSystem::kDistributive: return "distributive";
    case AxiomSystem::kCommutative: return "commutative";
    case AxiomSystem::kPSystem: return "P-system";
    case AxiomSystem::kQSystem: return "Q-system";
  }
  return "unknown";
}

std::optional<AxiomSystem> parse_axiom_system(std::string_view text) {
  for (AxiomSystem s : all_axiom_systems()) {
    if (to_string(s) == text) return s;
  }
  return std::nullopt;
}

const std::vector<Axiom>& axioms_of(AxiomSystem s) {
  static const std::array<std::vector<Axiom>, 7> table = {
      build(AxiomSystem::kPseudoBE),     build(AxiomSystem::kPseudoBCK),
      build(AxiomSystem::kConditionA),   build(AxiomSystem::kDistributive),
      build(AxiomSystem::kCommutative),  build(AxiomSystem::kPSystem),
      build(AxiomSystem::kQSystem),
  };
  return table[static_cast<std::size_t>(s)];
}

TableView view_of(const FiniteAlgebra& a) {
  return TableView{a.size(), a.unit(), a.arrow_table().data(),
                   a.squig_table().data()};
}

AxiomReport check_axioms(const FiniteAlgebra& a, AxiomSystem system) {
  AxiomReport report;
  report.system = system;
  TableView tv = view_of(a);
  for (const Axiom& ax : axioms_of(system)) {
    Violation v;
    v.axiom = ax.tag;
    for_each_tuple(a.size(), ax.arity, [&](const ElementId* t) {
      if (evaluate(ax, tv, t) == Truth::kFalse) {
        if (v.count == 0) v.witness.assign(t, t + ax.arity);
        ++v.count;
      }
      return true;
    });
    if (v.count > 0) report.violations.push_back(std::move(v));
  }
  report.holds = report.violations.empty();
  return report;
}

bool satisfies(const FiniteAlgebra& a, AxiomSystem system) {
  TableView tv = view_of(a);
  for (const Axiom& ax : axioms_of(system)) {
    bool ok = true;
    for_each_tuple(a.size(), ax.arity, [&](const ElementId* t) {
      ok = evaluate(ax, tv, t) != Truth::kFalse;
      return ok;
    });
    if (!ok) return false;
  }
  return true;
}

bool is_linear(const FiniteAlgebra& a) {
  for (ElementId x = 0; x < a.size(); ++x) {
    for (ElementId y = x + 1; y < a.size(); ++y) {
      bool xy = a.below(x, y);
      bool yx = a.below(y, x);
      if (xy == yx) return false;
    }
  }
  return true;
}

ElementId double_neg_arrow_first(const FiniteAlgebra& a, ElementId x) {
  auto [minus, tilde] = negations(a, x);
  (void)tilde;
  return a.squig(minus, *a.bottom());
}

ElementId double_neg_squig_first(const FiniteAlgebra& a, ElementId x) {
  auto [minus, tilde] = negations(a, x);
  (void)minus;
  return a.arrow(tilde, *a.bottom());
}

ElementSubset regular_elements(const FiniteAlgebra& a) {
  ElementSubset out(a.size());
  for (ElementId x = 0; x < a.size(); ++x) {
    if (double_neg_arrow_first(a, x) == x && double_neg_squig_first(a, x) == x) {
      out.insert(x);
    }
  }
  return out;
}

ElementSubset dense_elements(const FiniteAlgebra& a) {
  ElementSubset out(a.size());
  for (ElementId x = 0; x < a.size(); ++x) {
    if (double_neg_arrow_first(a, x) == a.unit() &&
        double_neg_squig_first(a, x) == a.unit()) {
      out.insert(x);
    }
  }
  return out;
}

ClassificationReport classify(const FiniteAlgebra& a) {
  ClassificationReport r;
  r.pseudo_be = satisfies(a, AxiomSystem::kPseudoBE);
  r.pseudo_bck = satisfies(a, AxiomSystem::kPseudoBCK);
  r.be = a.same_operations();
  r.proper = r.pseudo_be && !r.be;
  r.condition_a = satisfies(a, AxiomSystem::kConditionA);
  r.distributive = satisfies(a, AxiomSystem::kDistributive);
  r.commutative = satisfies(a, AxiomSystem::kCommutative);
  r.p_system = satisfies(a, AxiomSystem::kPSystem);
  r.q_system = satisfies(a, AxiomSystem::kQSystem);
  r.bounded = a.is_bounded();
  r.linear = is_linear(a);
  if (r.bounded) {
    r.good = true;
    for (ElementId x = 0; x < a.size(); ++x) {
      if (double_neg_arrow_first(a, x) != double_neg_squig_first(a, x)) {
        r.good = false;
      }
    }
    r.regular = regular_elements(a);
    r.dense = dense_elements(a);
    r.involutive = r.regular->is_full();
  }
  return r;
}

}  // namespace psbe
