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

#include "psbe/operators.hpp"

#include <fstream>
#include <sstream>

#include "psbe/axioms.hpp"
#include "psbe/deductive.hpp"
#include "psbe/error.hpp"
#include "psbe/parallel.hpp"

namespace psbe {

std::string_view to_string(InternalStateKind kind) {
  return kind == InternalStateKind::kTypeI ? "I" : "II";
}

namespace {

void require_width(const FiniteAlgebra& a, const UnaryOperator& mu) {
  if (mu.map.size() != a.size()) {
    throw Error(ErrorKind::kPrecondition, "operator width mismatch");
  }
  for (ElementId v : mu.map) {
    if (v >= a.size()) {
      throw Error(ErrorKind::kPrecondition, "operator image outside carrier");
    }
  }
}

// Early-exit predicate variants used by both the checks and the search.
bool fails_is1(const FiniteAlgebra& a, const UnaryOperator& mu, ElementId x,
               ElementId y) {
  return a.below(x, y) && !a.below(mu(x), mu(y));
}

bool fails_is2(const FiniteAlgebra& a, const UnaryOperator& mu,
               InternalStateKind kind, ElementId x, ElementId y) {
  ElementId j1 = kind == InternalStateKind::kTypeI ? vee1(a, x, y)
                                                   : vee1(a, y, x);
  ElementId j2 = kind == InternalStateKind::kTypeI ? vee2(a, x, y)
                                                   : vee2(a, y, x);
  return mu(a.arrow(x, y)) != a.arrow(mu(j1), mu(y)) ||
         mu(a.squig(x, y)) != a.squig(mu(j2), mu(y));
}

bool fails_is3(const FiniteAlgebra& a, const UnaryOperator& mu, ElementId x,
               ElementId y) {
  ElementId ar = a.arrow(mu(x), mu(y));
  ElementId sq = a.squig(mu(x), mu(y));
  return mu(ar) != ar || mu(sq) != sq;
}

bool fails_hom(const FiniteAlgebra& a, const UnaryOperator& mu, ElementId x,
               ElementId y) {
  return mu(a.arrow(x, y)) != a.arrow(mu(x), mu(y)) ||
         mu(a.squig(x, y)) != a.squig(mu(x), mu(y));
}

template <typename Pred>
CheckResult first_pair(const FiniteAlgebra& a, const char* rule, Pred fails) {
  for (ElementId x = 0; x < a.size(); ++x) {
    for (ElementId y = 0; y < a.size(); ++y) {
      if (fails(x, y)) return CheckResult::fail(rule, {x, y});
    }
  }
  return CheckResult::pass();
}

template <typename Pred>
bool any_pair(const FiniteAlgebra& a, Pred fails) {
  for (ElementId x = 0; x < a.size(); ++x) {
    for (ElementId y = 0; y < a.size(); ++y) {
      if (fails(x, y)) return true;
    }
  }
  return false;
}

bool quick_internal_state(const FiniteAlgebra& a, const UnaryOperator& mu,
                          InternalStateKind kind) {
  return !any_pair(a, [&](ElementId x, ElementId y) {
    return fails_is1(a, mu, x, y) || fails_is3(a, mu, x, y) ||
           fails_is2(a, mu, kind, x, y);
  });
}

bool quick_smo(const FiniteAlgebra& a, const UnaryOperator& mu) {
  for (ElementId x = 0; x < a.size(); ++x) {
    if (mu(mu(x)) != mu(x)) return false;
  }
  return !any_pair(a, [&](ElementId x, ElementId y) {
    return fails_hom(a, mu, x, y);
  });
}

template <typename Accept>
std::vector<UnaryOperator> enumerate_maps(const FiniteAlgebra& a,
                                          bool pin_unit,
                                          std::size_t workers,
                                          Accept accept) {
  const std::size_t n = a.size();
  double total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= static_cast<double>(n);
  if (total > static_cast<double>(kMaxUnaryMaps)) {
    throw Error(ErrorKind::kSizeGuard,
                "n^n = " + std::to_string(static_cast<long long>(total)) +
                    " maps exceeds the enumeration guard");
  }
  std::vector<ElementId> free_pos;
  for (ElementId x = 0; x < n; ++x) {
    if (!(pin_unit && x == a.unit())) free_pos.push_back(x);
  }
  if (free_pos.empty()) {
    UnaryOperator mu{std::vector<ElementId>(n, a.unit())};
    if (accept(mu)) return {mu};
    return {};
  }
  // Tasks split on the image of the first free position.
  auto chunks = parallel_map(n, workers, [&](std::size_t first) {
    std::vector<UnaryOperator> found;
    UnaryOperator mu{std::vector<ElementId>(n, 0)};
    if (pin_unit) mu.map[a.unit()] = a.unit();
    mu.map[free_pos[0]] = static_cast<ElementId>(first);
    while (true) {
      if (accept(mu)) found.push_back(mu);
      std::size_t k = free_pos.size();
      while (k > 1) {
        ElementId& v = mu.map[free_pos[k - 1]];
        if (++v < n) break;
        v = 0;
        --k;
      }
      if (k == 1) break;
    }
    return found;
  });
  std::vector<UnaryOperator> out;
  for (auto& c : chunks) out.insert(out.end(), c.begin(), c.end());
  return out;
}

}  // namespace

CheckResult is_internal_state(const FiniteAlgebra& a, const UnaryOperator& mu,
                              InternalStateKind kind) {
  require_width(a, mu);
  if (auto r = first_pair(a, "is1", [&](ElementId x, ElementId y) {
        return fails_is1(a, mu, x, y);
      });
      !r) {
    return r;
  }
  const char* rule2 = kind == InternalStateKind::kTypeI ? "is2" : "is2'";
  if (auto r = first_pair(a, rule2, [&](ElementId x, ElementId y) {
        return fails_is2(a, mu, kind, x, y);
      });
      !r) {
    return r;
  }
  return first_pair(a, "is3", [&](ElementId x, ElementId y) {
    return fails_is3(a, mu, x, y);
  });
}

CheckResult is_smo(const FiniteAlgebra& a, const UnaryOperator& mu) {
  require_width(a, mu);
  if (auto r = first_pair(a, "hom", [&](ElementId x, ElementId y) {
        return fails_hom(a, mu, x, y);
      });
      !r) {
    return r;
  }
  for (ElementId x = 0; x < a.size(); ++x) {
    if (mu(mu(x)) != mu(x)) return CheckResult::fail("idem", {x});
  }
  return CheckResult::pass();
}

std::vector<UnaryOperator> enumerate_internal_states(
    const FiniteAlgebra& a, InternalStateKind kind,
    const EnumerationOptions& options) {
  // mu(1) = 1 is only guaranteed on pseudo-BE(A) algebras.
  bool pin = !options.audit && satisfies(a, AxiomSystem::kPseudoBE) &&
             satisfies(a, AxiomSystem::kConditionA);
  return enumerate_maps(a, pin, options.workers, [&](const UnaryOperator& mu) {
    return quick_internal_state(a, mu, kind);
  });
}

std::vector<UnaryOperator> enumerate_smo(const FiniteAlgebra& a,
                                         const EnumerationOptions& options) {
  // A homomorphism of a pseudo-BE algebra maps 1 = x -> x to 1.
  bool pin = !options.audit && satisfies(a, AxiomSystem::kPseudoBE);
  return enumerate_maps(a, pin, options.workers, [&](const UnaryOperator& mu) {
    return quick_smo(a, mu);
  });
}

KernelImage kernel_image(const FiniteAlgebra& a, const UnaryOperator& mu) {
  require_width(a, mu);
  const bool base = satisfies(a, AxiomSystem::kPseudoBE) &&
                    satisfies(a, AxiomSystem::kConditionA);
  const bool internal =
      base && (is_internal_state(a, mu, InternalStateKind::kTypeI).holds ||
               is_internal_state(a, mu, InternalStateKind::kTypeII).holds);
  if (!internal && !is_smo(a, mu).holds) {
    throw Error(ErrorKind::kPrecondition,
                "operator is neither an internal state on a pseudo-BE(A) "
                "algebra nor a state-morphism operator");
  }
  KernelImage out{ElementSubset(a.size()), ElementSubset(a.size())};
  for (ElementId x = 0; x < a.size(); ++x) {
    if (mu(x) == a.unit()) out.kernel.insert(x);
    out.image.insert(mu(x));
  }
  if (internal) {
    if (!is_deductive_system(a, out.kernel)) {
      throw Error(ErrorKind::kConsistencyAlarm,
                  "kernel " + format_subset(a, out.kernel) +
                      " is not a deductive system");
    }
    for (ElementId x : out.image.members()) {
      for (ElementId y : out.image.members()) {
        if (!out.image.contains(a.arrow(x, y)) ||
            !out.image.contains(a.squig(x, y))) {
          throw Error(ErrorKind::kConsistencyAlarm,
                      "image is not closed under the operations");
        }
      }
    }
    ElementSubset unit_only(a.size(), std::vector<ElementId>{a.unit()});
    if ((out.kernel & out.image) != unit_only) {
      throw Error(ErrorKind::kConsistencyAlarm,
                  "kernel and image meet outside the unit");
    }
  }
  return out;
}

std::vector<ElementId> parse_arrow_map(const FiniteAlgebra& src,
                                       const FiniteAlgebra& tgt,
                                       std::istream& in,
                                       std::string_view keyword) {
  std::vector<ElementId> map(src.size(), 0);
  std::vector<bool> seen(src.size(), false);
  std::string raw;
  std::size_t lineno = 0;
  auto fail = [&](const std::string& what) {
    throw Error(ErrorKind::kParse,
                "line " + std::to_string(lineno) + ": " + what);
  };
  while (std::getline(in, raw)) {
    ++lineno;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream ss(raw);
    std::vector<std::string> words;
    for (std::string w; ss >> w;) words.push_back(w);
    if (words.empty()) continue;
    if (words.size() != 2 || words[0] != keyword) {
      fail("expected '" + std::string(keyword) + " <tok>-><tok>'");
    }
    auto pos = words[1].find("->");
    if (pos == std::string::npos) fail("expected '<tok>-><tok>'");
    std::string from = words[1].substr(0, pos);
    std::string to = words[1].substr(pos + 2);
    auto x = src.find(from);
    if (!x) fail("unknown token '" + from + "'");
    auto y = tgt.find(to);
    if (!y) fail("unknown token '" + to + "'");
    if (seen[*x]) fail("duplicate entry for '" + from + "'");
    seen[*x] = true;
    map[*x] = *y;
  }
  for (ElementId x = 0; x < src.size(); ++x) {
    if (!seen[x]) {
      throw Error(ErrorKind::kParse, "no image for element '" +
                                         src.token(x) + "'");
    }
  }
  return map;
}

UnaryOperator parse_operator(const FiniteAlgebra& a, std::istream& in) {
  return UnaryOperator{parse_arrow_map(a, a, in, "map")};
}

UnaryOperator parse_operator_text(const FiniteAlgebra& a,
                                  std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_operator(a, in);
}

UnaryOperator load_operator(const FiniteAlgebra& a, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::kParse, "cannot open '" + path + "'");
  return parse_operator(a, in);
}

std::string serialize(const FiniteAlgebra& a, const UnaryOperator& mu) {
  std::string out;
  for (ElementId x = 0; x < a.size(); ++x) {
    out += "map " + a.token(x) + "->" + a.token(mu(x)) + "\n";
  }
  return out;
}

UnaryOperator operator_of(const FiniteAlgebra& a, std::string_view images) {
  std::istringstream ss{std::string(images)};
  UnaryOperator mu;
  for (std::string t; ss >> t;) {
    auto id = a.find(t);
    if (!id) throw Error(ErrorKind::kParse, "unknown token '" + t + "'");
    mu.map.push_back(*id);
  }
  if (mu.map.size() != a.size()) {
    throw Error(ErrorKind::kParse, "operator needs one image per element");
  }
  return mu;
}

}  // namespace psbe
