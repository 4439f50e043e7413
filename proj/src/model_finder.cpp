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


#include "psbe/model_finder.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numeric>

#include "psbe/error.hpp"
#include "psbe/parallel.hpp"
#include "psbe/terms.hpp"

namespace psbe {

namespace {

constexpr std::array<std::pair<ModelFlag, std::string_view>, 9> kFlagNames{{
    {ModelFlag::kPseudoBE, "pseudo-BE"},
    {ModelFlag::kPseudoBCK, "pseudo-BCK"},
    {ModelFlag::kBE, "BE"},
    {ModelFlag::kProper, "proper"},
    {ModelFlag::kConditionA, "condition-A"},
    {ModelFlag::kDistributive, "distributive"},
    {ModelFlag::kCommutative, "commutative"},
    {ModelFlag::kBounded, "bounded"},
    {ModelFlag::kLinear, "linear"},
}};

using Tables = std::vector<ElementId>;  // arrow cells, then squig cells

std::vector<std::string> default_tokens(std::size_t n) {
  std::vector<std::string> tokens{"1"};
  for (std::size_t i = 1; i < n; ++i) {
    tokens.push_back(std::string(1, static_cast<char>('a' + i - 1)));
  }
  return tokens;
}

std::optional<ElementId> least_element(std::size_t n, const Tables& t,
                                       ElementId unit) {
  for (ElementId b = 0; b < n; ++b) {
    bool least = true;
    for (ElementId x = 0; x < n && least; ++x) {
      least = t[b * n + x] == unit && t[n * n + b * n + x] == unit;
    }
    if (least) return b;
  }
  return std::nullopt;
}

// Relabels so that perm[x] is the new name of x.
Tables relabel(std::size_t n, const Tables& t,
               const std::vector<ElementId>& perm) {
  Tables out(t.size());
  for (std::size_t op = 0; op < 2; ++op) {
    const std::size_t base = op * n * n;
    for (ElementId x = 0; x < n; ++x) {
      for (ElementId y = 0; y < n; ++y) {
        out[base + perm[x] * n + perm[y]] = perm[t[base + x * n + y]];
      }
    }
  }
  return out;
}

// True when no relabeling fixing 0 gives a smaller table pair.
bool is_canonical(std::size_t n, const Tables& t) {
  std::vector<ElementId> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  while (std::next_permutation(perm.begin() + 1, perm.end())) {
    if (relabel(n, t, perm) < t) return false;
  }
  return true;
}

std::uint64_t fnv1a(const Tables& t) {
  std::uint64_t h = 14695981039346656037ULL;
  for (ElementId v : t) {
    for (int i = 0; i < 4; ++i) {
      h ^= (v >> (8 * i)) & 0xFFU;
      h *= 1099511628211ULL;
    }
  }
  return h;
}

std::string name_for(std::size_t n, const Tables& t) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "%08x",
                static_cast<unsigned>(fnv1a(t) & 0xFFFFFFFFU));
  return "n" + std::to_string(n) + "_" + buf;
}

FiniteAlgebra build(std::size_t n, const Tables& t) {
  Tables arrow(t.begin(), t.begin() + static_cast<std::ptrdiff_t>(n * n));
  Tables squig(t.begin() + static_cast<std::ptrdiff_t>(n * n), t.end());
  return FiniteAlgebra(name_for(n, t), default_tokens(n), std::move(arrow),
                       std::move(squig), 0, least_element(n, t, 0));
}

// Cells in branching order: unit row, unit column, diagonal, the rest; the
// two operations interleaved.
std::vector<std::size_t> cell_order(std::size_t n) {
  std::vector<std::pair<ElementId, ElementId>> pairs;
  for (ElementId y = 0; y < n; ++y) pairs.emplace_back(0, y);
  for (ElementId x = 1; x < n; ++x) pairs.emplace_back(x, 0);
  for (ElementId x = 1; x < n; ++x) pairs.emplace_back(x, x);
  for (ElementId x = 1; x < n; ++x) {
    for (ElementId y = 1; y < n; ++y) {
      if (x != y) pairs.emplace_back(x, y);
    }
  }
  std::vector<std::size_t> order;
  for (auto [x, y] : pairs) {
    order.push_back(x * n + y);
    order.push_back(n * n + x * n + y);
  }
  return order;
}

// Cells fixed by the unit and diagonal identities of each core.
Tables literal_cells(std::size_t n, AxiomSystem core) {
  Tables t(2 * n * n, kUnknown);
  if (core == AxiomSystem::kQSystem) return t;
  const std::size_t sq = n * n;
  for (ElementId x = 0; x < n; ++x) {
    t[x] = x;
    t[sq + x] = x;
    t[x * n] = 0;
    if (core == AxiomSystem::kPseudoBE || core == AxiomSystem::kPSystem) {
      t[sq + x * n] = 0;
    }
    if (core == AxiomSystem::kPseudoBE) {
      t[x * n + x] = 0;
      t[sq + x * n + x] = 0;
    }
  }
  return t;
}

struct Instance {
  const Constraint* constraint;
  std::array<ElementId, 3> vars;
};

class ModelSearch {
 public:
  ModelSearch(std::size_t n, const std::vector<Axiom>& axioms)
      : n_(n), cells_(2 * n * n, kUnknown), order_(cell_order(n)) {
    for (const Axiom& a : axioms) {
      for (const Constraint& c : a.constraints) {
        for_each_tuple(n, a.arity, [&](const ElementId* v) {
          instances_.push_back(Instance{&c, {v[0], v[1], v[2]}});
          return true;
        });
      }
    }
    active_.resize(instances_.size());
    std::iota(active_.begin(), active_.end(), 0U);
    active_size_ = active_.size();
  }

  // Assigns a cell and propagates to a fixpoint. False on conflict; the
  // caller undoes to its mark either way.
  bool assign(std::size_t cell, ElementId v) {
    if (cells_[cell] != kUnknown) return cells_[cell] == v;
    set(cell, v);
    return propagate();
  }

  bool propagate() {
    bool changed = true;
    while (changed) {
      changed = false;
      std::size_t i = 0;
      while (i < active_size_) {
        const Instance& in = instances_[active_[i]];
        Step s = step(in);
        if (s == Step::kConflict) return false;
        if (s == Step::kResolved) {
          std::swap(active_[i], active_[--active_size_]);
          continue;
        }
        if (s == Step::kForced) changed = true;
        ++i;
      }
    }
    return true;
  }

  struct Mark {
    std::size_t trail;
    std::size_t active;
  };
  Mark mark() const { return {trail_.size(), active_size_}; }
  void undo(Mark m) {
    while (trail_.size() > m.trail) {
      cells_[trail_.back()] = kUnknown;
      trail_.pop_back();
    }
    active_size_ = m.active;
  }

  std::optional<std::size_t> next_cell() const {
    for (std::size_t c : order_) {
      if (cells_[c] == kUnknown) return c;
    }
    return std::nullopt;
  }

  const Tables& cells() const { return cells_; }

  void seed(const Tables& t) {
    for (std::size_t c = 0; c < t.size(); ++c) {
      if (t[c] != kUnknown) set(c, t[c]);
    }
  }

 private:
  enum class Step { kOpen, kResolved, kForced, kConflict };

  void set(std::size_t cell, ElementId v) {
    cells_[cell] = v;
    trail_.push_back(cell);
  }

  TableView view() const {
    return TableView{n_, 0, cells_.data(), cells_.data() + n_ * n_};
  }

  Step step(const Instance& in) {
    const TableView tv = view();
    const ElementId* vars = in.vars.data();
    for (const Equation& p : in.constraint->premises) {
      ElementId l = p.lhs.eval(tv, vars);
      if (l == kUnknown) return Step::kOpen;
      ElementId r = p.rhs.eval(tv, vars);
      if (r == kUnknown) return Step::kOpen;
      if (l != r) return Step::kResolved;
    }
    const Equation& e = in.constraint->conclusion;
    std::size_t bl = kNoCell;
    std::size_t br = kNoCell;
    ElementId l = e.lhs.eval_root(tv, vars, &bl);
    ElementId r = e.rhs.eval_root(tv, vars, &br);
    if (l != kUnknown && r != kUnknown) {
      return l == r ? Step::kResolved : Step::kConflict;
    }
    if (l != kUnknown && br != kNoCell) {
      set(br, l);
      return Step::kForced;
    }
    if (r != kUnknown && bl != kNoCell) {
      set(bl, r);
      return Step::kForced;
    }
    return Step::kOpen;
  }

  std::size_t n_;
  Tables cells_;
  std::vector<std::size_t> order_;
  std::vector<Instance> instances_;
  std::vector<std::uint32_t> active_;
  std::size_t active_size_ = 0;
  std::vector<std::size_t> trail_;
};

bool accepts(const FiniteAlgebra& a, const SearchConstraints& c) {
  return std::all_of(c.required.begin(), c.required.end(),
                     [&](ModelFlag f) { return has_flag(a, f); });
}

void collect(ModelSearch& s, std::size_t n, AxiomSystem core,
             std::vector<Tables>& out) {
  auto cell = s.next_cell();
  if (!cell) {
    if (!is_canonical(n, s.cells())) return;
    if (!satisfies(build(n, s.cells()), core)) {
      throw Error(ErrorKind::kConsistencyAlarm,
                  "propagation accepted a table pair violating the core");
    }
    out.push_back(s.cells());
    return;
  }
  for (ElementId v = 0; v < n; ++v) {
    auto m = s.mark();
    if (s.assign(*cell, v)) collect(s, n, core, out);
    s.undo(m);
  }
}

std::vector<Tables> brute_force(std::size_t n, AxiomSystem core) {
  Tables t = literal_cells(n, core);
  std::vector<std::size_t> free;
  for (std::size_t c = 0; c < t.size(); ++c) {
    if (t[c] == kUnknown) free.push_back(c);
  }
  if (std::pow(static_cast<double>(n), static_cast<double>(free.size())) >
      5e7) {
    throw Error(ErrorKind::kSizeGuard, "audit search space too large");
  }
  for (std::size_t c : free) t[c] = 0;
  std::vector<Tables> out;
  while (true) {
    if (is_canonical(n, t) && satisfies(build(n, t), core)) out.push_back(t);
    std::size_t k = free.size();
    while (k > 0 && ++t[free[k - 1]] == n) t[free[--k]] = 0;
    if (k == 0) break;
  }
  return out;
}

std::vector<Tables> search(std::size_t n, AxiomSystem core,
                           std::size_t workers) {
  const std::vector<Axiom>& axioms = axioms_of(core);
  ModelSearch root(n, axioms);
  root.seed(literal_cells(n, core));
  if (!root.propagate()) return {};
  auto first = root.next_cell();
  if (!first) {
    std::vector<Tables> out;
    collect(root, n, core, out);
    return out;
  }
  const Tables seed = root.cells();
  auto parts = parallel_map(n, workers, [&](std::size_t v) {
    ModelSearch s(n, axioms);
    s.seed(seed);
    std::vector<Tables> out;
    if (s.propagate() && s.assign(*first, static_cast<ElementId>(v))) {
      collect(s, n, core, out);
    }
    return out;
  });
  std::vector<Tables> out;
  for (auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

}  // namespace

std::vector<ModelFlag> all_model_flags() {
  std::vector<ModelFlag> out;
  for (const auto& [f, name] : kFlagNames) out.push_back(f);
  return out;
}

std::string_view to_string(ModelFlag flag) {
  for (const auto& [f, name] : kFlagNames) {
    if (f == flag) return name;
  }
  return "?";
}

std::optional<ModelFlag> parse_model_flag(std::string_view name) {
  for (const auto& [f, n] : kFlagNames) {
    if (n == name) return f;
  }
  return std::nullopt;
}

bool has_flag(const FiniteAlgebra& a, ModelFlag flag) {
  switch (flag) {
    case ModelFlag::kPseudoBE:
      return satisfies(a, AxiomSystem::kPseudoBE);
    case ModelFlag::kPseudoBCK:
      return satisfies(a, AxiomSystem::kPseudoBCK);
    case ModelFlag::kBE:
      return satisfies(a, AxiomSystem::kPseudoBE) && a.same_operations();
    case ModelFlag::kProper:
      return satisfies(a, AxiomSystem::kPseudoBE) && !a.same_operations();
    case ModelFlag::kConditionA:
      return satisfies(a, AxiomSystem::kConditionA);
    case ModelFlag::kDistributive:
      return satisfies(a, AxiomSystem::kDistributive);
    case ModelFlag::kCommutative:
      return satisfies(a, AxiomSystem::kCommutative);
    case ModelFlag::kBounded:
      return a.is_bounded();
    case ModelFlag::kLinear:
      return is_linear(a);
  }
  return false;
}

std::vector<FiniteAlgebra> enumerate_models(const SearchConstraints& c) {
  if (c.size == 0) throw Error(ErrorKind::kPrecondition, "size must be >= 1");
  if (c.size > kMaxFinderSize) {
    throw Error(ErrorKind::kSizeGuard, "exhaustive search is limited to n <= " +
                                           std::to_string(kMaxFinderSize));
  }
  switch (c.core) {
    case AxiomSystem::kPseudoBE:
    case AxiomSystem::kPseudoBCK:
    case AxiomSystem::kPSystem:
    case AxiomSystem::kQSystem:
      break;
    default:
      throw Error(ErrorKind::kPrecondition,
                  "unsupported search core " + std::string(to_string(c.core)));
  }
  std::vector<Tables> tables = c.audit ? brute_force(c.size, c.core)
                                       : search(c.size, c.core, c.workers);
  std::sort(tables.begin(), tables.end());
  std::vector<FiniteAlgebra> out;
  for (const Tables& t : tables) {
    if (c.limit && out.size() >= *c.limit) break;
    FiniteAlgebra a = build(c.size, t);
    if (accepts(a, c)) out.push_back(std::move(a));
  }
  return out;
}

FiniteAlgebra canonical_form(const FiniteAlgebra& a) {
  const std::size_t n = a.size();
  std::vector<ElementId> perm(n);
  // perm maps old ids to new ids; the unit goes to 0.
  std::vector<ElementId> rest;
  for (ElementId x = 0; x < n; ++x) {
    if (x != a.unit()) rest.push_back(x);
  }
  Tables t(a.arrow_table().begin(), a.arrow_table().end());
  t.insert(t.end(), a.squig_table().begin(), a.squig_table().end());
  std::optional<Tables> best;
  std::vector<ElementId> order(rest.size());
  std::iota(order.begin(), order.end(), 1U);
  do {
    perm[a.unit()] = 0;
    for (std::size_t i = 0; i < rest.size(); ++i) perm[rest[i]] = order[i];
    Tables r = relabel(n, t, perm);
    if (!best || r < *best) best = std::move(r);
  } while (std::next_permutation(order.begin(), order.end()));
  return build(n, *best);
}

std::string model_name(const FiniteAlgebra& algebra) {
  FiniteAlgebra a = canonical_form(algebra);
  Tables t(a.arrow_table().begin(), a.arrow_table().end());
  t.insert(t.end(), a.squig_table().begin(), a.squig_table().end());
  return name_for(a.size(), t);
}

std::vector<std::string> emit_models(const std::vector<FiniteAlgebra>& models,
                                     const std::string& dir) {
  std::filesystem::create_directories(dir);
  std::vector<std::string> paths;
  for (const FiniteAlgebra& m : models) {
    std::string path =
        (std::filesystem::path(dir) / (m.name() + ".alg")).string();
    std::ofstream out(path);
    if (!out) throw Error(ErrorKind::kParse, "cannot write '" + path + "'");
    out << serialize(m);
    paths.push_back(std::move(path));
  }
  return paths;
}

}  // namespace psbe
