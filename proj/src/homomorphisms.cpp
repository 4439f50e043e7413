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

#include "psbe/homomorphisms.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>

#include "psbe/deductive.hpp"
#include "psbe/error.hpp"
#include "psbe/operators.hpp"
#include "psbe/parallel.hpp"
#include "psbe/terms.hpp"

namespace psbe {

namespace {

void require_width(const FiniteAlgebra& src, const FiniteAlgebra& tgt,
                   const Homomorphism& f) {
  if (f.map.size() != src.size()) {
    throw Error(ErrorKind::kPrecondition, "map width mismatch");
  }
  for (ElementId v : f.map) {
    if (v >= tgt.size()) {
      throw Error(ErrorKind::kPrecondition, "map image outside target");
    }
  }
}

void require_hom(const FiniteAlgebra& src, const FiniteAlgebra& tgt,
                 const Homomorphism& f) {
  if (!is_homomorphism(src, tgt, f)) {
    throw Error(ErrorKind::kNotAHomomorphism,
                "map does not preserve both operations");
  }
}

}  // namespace

HomomorphismReport check_homomorphism(const FiniteAlgebra& src,
                                      const FiniteAlgebra& tgt,
                                      const Homomorphism& f) {
  require_width(src, tgt, f);
  HomomorphismReport r;
  for (ElementId x = 0; x < src.size() && r.operations.holds; ++x) {
    for (ElementId y = 0; y < src.size(); ++y) {
      if (f(src.arrow(x, y)) != tgt.arrow(f(x), f(y)) ||
          f(src.squig(x, y)) != tgt.squig(f(x), f(y))) {
        r.operations = CheckResult::fail("hom", {x, y});
        break;
      }
    }
  }
  r.preserves_unit = f(src.unit()) == tgt.unit();
  r.monotone = true;
  for (ElementId x = 0; x < src.size(); ++x) {
    for (ElementId y = 0; y < src.size(); ++y) {
      if (src.below(x, y) && !tgt.below(f(x), f(y))) r.monotone = false;
    }
  }
  return r;
}

bool is_homomorphism(const FiniteAlgebra& src, const FiniteAlgebra& tgt,
                     const Homomorphism& f) {
  return check_homomorphism(src, tgt, f).operations.holds;
}

bool is_surjective(const FiniteAlgebra& tgt, const Homomorphism& f) {
  std::vector<bool> hit(tgt.size(), false);
  for (ElementId v : f.map) hit[v] = true;
  return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

bool is_bijective(const FiniteAlgebra& src, const FiniteAlgebra& tgt,
                  const Homomorphism& f) {
  return src.size() == tgt.size() && is_surjective(tgt, f);
}

ElementSubset hom_kernel(const FiniteAlgebra& src, const FiniteAlgebra& tgt,
                         const Homomorphism& f) {
  require_hom(src, tgt, f);
  ElementSubset k(src.size());
  for (ElementId x = 0; x < src.size(); ++x) {
    if (f(x) == tgt.unit()) k.insert(x);
  }
  return k;
}

ElementSubset preimage_ds(const FiniteAlgebra& src, const FiniteAlgebra& tgt,
                          const Homomorphism& f, const ElementSubset& e) {
  require_hom(src, tgt, f);
  if (!is_deductive_system(tgt, e)) {
    throw Error(ErrorKind::kNotADeductiveSystem,
                format_subset(tgt, e) + " is not a deductive system");
  }
  ElementSubset out(src.size());
  for (ElementId x = 0; x < src.size(); ++x) {
    if (e.contains(f(x))) out.insert(x);
  }
  if (!is_deductive_system(src, out)) {
    throw Error(ErrorKind::kConsistencyAlarm,
                "preimage " + format_subset(src, out) +
                    " is not a deductive system");
  }
  return out;
}

ElementSubset image_ds(const FiniteAlgebra& src, const FiniteAlgebra& tgt,
                       const Homomorphism& f, const ElementSubset& d) {
  require_hom(src, tgt, f);
  if (!is_surjective(tgt, f)) {
    throw Error(ErrorKind::kPrecondition, "surjectivity check fails");
  }
  if (!is_deductive_system(src, d)) {
    throw Error(ErrorKind::kNotADeductiveSystem,
                format_subset(src, d) + " is not a deductive system");
  }
  if (!hom_kernel(src, tgt, f).is_subset_of(d)) {
    throw Error(ErrorKind::kPrecondition, "kernel inclusion check fails");
  }
  ElementSubset out(tgt.size());
  for (ElementId x : d.members()) out.insert(f(x));
  if (!is_deductive_system(tgt, out)) {
    throw Error(ErrorKind::kConsistencyAlarm,
                "image " + format_subset(tgt, out) +
                    " is not a deductive system");
  }
  return out;
}

namespace {

// Backtracking with unit forcing and propagation of f(x op y) = f(x) op f(y).
class HomSearch {
 public:
  HomSearch(const FiniteAlgebra& src, const FiniteAlgebra& tgt)
      : src_(src), tgt_(tgt), f_(src.size(), kUnknown) {}

  // Enumerates all completions after pinning the given element.
  std::vector<Homomorphism> run(ElementId pinned, ElementId value) {
    out_.clear();
    std::size_t mark = trail_.size();
    if (assign(src_.unit(), tgt_.unit()) && assign(pinned, value)) search();
    undo(mark);
    return std::move(out_);
  }

  std::vector<Homomorphism> run_unpinned() {
    out_.clear();
    std::size_t mark = trail_.size();
    if (assign(src_.unit(), tgt_.unit())) search();
    undo(mark);
    return std::move(out_);
  }

 private:
  bool assign(ElementId x, ElementId v) {
    if (f_[x] != kUnknown) return f_[x] == v;
    std::vector<ElementId> queue{x};
    f_[x] = v;
    trail_.push_back(x);
    while (!queue.empty()) {
      ElementId p = queue.back();
      queue.pop_back();
      for (ElementId q = 0; q < src_.size(); ++q) {
        if (f_[q] == kUnknown) continue;
        for (auto [a, b] : {std::pair{p, q}, std::pair{q, p}}) {
          if (!force(src_.arrow(a, b), tgt_.arrow(f_[a], f_[b]), queue) ||
              !force(src_.squig(a, b), tgt_.squig(f_[a], f_[b]), queue)) {
            return false;
          }
        }
      }
    }
    return true;
  }

  bool force(ElementId x, ElementId v, std::vector<ElementId>& queue) {
    if (f_[x] == kUnknown) {
      f_[x] = v;
      trail_.push_back(x);
      queue.push_back(x);
      return true;
    }
    return f_[x] == v;
  }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      f_[trail_.back()] = kUnknown;
      trail_.pop_back();
    }
  }

  void search() {
    auto it = std::find(f_.begin(), f_.end(), kUnknown);
    if (it == f_.end()) {
      out_.push_back(Homomorphism{f_});
      return;
    }
    auto x = static_cast<ElementId>(it - f_.begin());
    for (ElementId v = 0; v < tgt_.size(); ++v) {
      std::size_t mark = trail_.size();
      if (assign(x, v)) search();
      undo(mark);
    }
  }

  const FiniteAlgebra& src_;
  const FiniteAlgebra& tgt_;
  std::vector<ElementId> f_;
  std::vector<ElementId> trail_;
  std::vector<Homomorphism> out_;
};

std::vector<Homomorphism> brute_force(const FiniteAlgebra& src,
                                      const FiniteAlgebra& tgt) {
  std::vector<Homomorphism> out;
  Homomorphism f{std::vector<ElementId>(src.size(), 0)};
  while (true) {
    if (is_homomorphism(src, tgt, f)) out.push_back(f);
    std::size_t k = src.size();
    while (k > 0 && ++f.map[k - 1] == tgt.size()) f.map[--k] = 0;
    if (k == 0) break;
  }
  return out;
}

}  // namespace

std::vector<Homomorphism> enumerate_homomorphisms(
    const FiniteAlgebra& src, const FiniteAlgebra& tgt,
    const HomSearchOptions& options) {
  double space = std::pow(static_cast<double>(tgt.size()),
                          static_cast<double>(src.size()));
  if (space > kMaxHomSearch) {
    throw Error(ErrorKind::kSizeGuard,
                "|B|^|A| exceeds the homomorphism search guard");
  }
  if (options.iso_only && src.size() != tgt.size()) return {};

  std::vector<Homomorphism> found;
  if (options.audit) {
    found = brute_force(src, tgt);
  } else {
    ElementId first = kUnknown;
    for (ElementId x = 0; x < src.size(); ++x) {
      if (x != src.unit()) {
        first = x;
        break;
      }
    }
    if (first == kUnknown) {
      found = HomSearch(src, tgt).run_unpinned();
    } else {
      auto chunks =
          parallel_map(tgt.size(), options.workers, [&](std::size_t v) {
            return HomSearch(src, tgt).run(first, static_cast<ElementId>(v));
          });
      for (auto& c : chunks) found.insert(found.end(), c.begin(), c.end());
    }
  }
  if (options.iso_only) {
    std::erase_if(found, [&](const Homomorphism& f) {
      if (!is_bijective(src, tgt, f)) return true;
      Homomorphism inv{std::vector<ElementId>(tgt.size(), 0)};
      for (ElementId x = 0; x < src.size(); ++x) inv.map[f(x)] = x;
      return !is_homomorphism(tgt, src, inv);
    });
  }
  std::sort(found.begin(), found.end());
  return found;
}

Homomorphism parse_homomorphism(const FiniteAlgebra& src,
                                const FiniteAlgebra& tgt, std::istream& in) {
  return Homomorphism{parse_arrow_map(src, tgt, in, "hom")};
}

Homomorphism load_homomorphism(const FiniteAlgebra& src,
                               const FiniteAlgebra& tgt,
                               const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::kParse, "cannot open '" + path + "'");
  return parse_homomorphism(src, tgt, in);
}

std::string serialize(const FiniteAlgebra& src, const FiniteAlgebra& tgt,
                      const Homomorphism& f) {
  std::string out;
  for (ElementId x = 0; x < src.size(); ++x) {
    out += "hom " + src.token(x) + "->" + tgt.token(f(x)) + "\n";
  }
  return out;
}

}  // namespace psbe
