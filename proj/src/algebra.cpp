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

#include "psbe/algebra.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "psbe/error.hpp"

namespace psbe {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kParse: return "parse-error";
    case ErrorKind::kInconsistentOrder: return "inconsistent-order";
    case ErrorKind::kUnbounded: return "unbounded-algebra";
    case ErrorKind::kNotADeductiveSystem: return "not-a-deductive-system";
    case ErrorKind::kNotProper: return "not-proper";
    case ErrorKind::kNotDistributive: return "not-distributive";
    case ErrorKind::kConditionAMissing: return "condition-A-missing";
    case ErrorKind::kNotAHomomorphism: return "not-a-homomorphism";
    case ErrorKind::kNotBijective: return "not-bijective";
    case ErrorKind::kNotAPseudoValuation: return "not-a-pseudo-valuation";
    case ErrorKind::kPrecondition: return "precondition-violation";
    case ErrorKind::kDimensionTooLarge: return "dimension-too-large";
    case ErrorKind::kSizeGuard: return "size-guard";
    case ErrorKind::kConsistencyAlarm: return "consistency-alarm";
  }
  return "unknown";
}

// ElementSubset

ElementSubset::ElementSubset(std::size_t universe) : universe_(universe) {
  if (universe > kMaxUniverse) {
    throw Error(ErrorKind::kSizeGuard, "subset universe exceeds 64 elements");
  }
}

ElementSubset::ElementSubset(std::size_t universe, std::uint64_t mask)
    : ElementSubset(universe) {
  if (universe < kMaxUniverse && (mask >> universe) != 0) {
    throw Error(ErrorKind::kPrecondition, "subset mask outside universe");
  }
  mask_ = mask;
}

ElementSubset::ElementSubset(std::size_t universe,
                             const std::vector<ElementId>& members)
    : ElementSubset(universe) {
  for (ElementId x : members) insert(x);
}

ElementSubset ElementSubset::full(std::size_t universe) {
  std::uint64_t mask =
      universe >= kMaxUniverse ? ~std::uint64_t{0}
                               : (std::uint64_t{1} << universe) - 1;
  return ElementSubset(universe, mask);
}

void ElementSubset::insert(ElementId x) {
  if (x >= universe_) {
    throw Error(ErrorKind::kPrecondition, "element index outside universe");
  }
  mask_ |= std::uint64_t{1} << x;
}

void ElementSubset::erase(ElementId x) {
  if (x < universe_) mask_ &= ~(std::uint64_t{1} << x);
}

std::vector<ElementId> ElementSubset::members() const {
  std::vector<ElementId> out;
  out.reserve(count());
  for (ElementId x = 0; x < universe_; ++x) {
    if (contains(x)) out.push_back(x);
  }
  return out;
}

ElementSubset ElementSubset::operator&(const ElementSubset& other) const {
  return ElementSubset(std::max(universe_, other.universe_),
                       mask_ & other.mask_);
}

ElementSubset ElementSubset::operator|(const ElementSubset& other) const {
  return ElementSubset(std::max(universe_, other.universe_),
                       mask_ | other.mask_);
}

bool canonical_less(const ElementSubset& a, const ElementSubset& b) {
  if (a.count() != b.count()) return a.count() < b.count();
  return a.members() < b.members();
}

// FiniteAlgebra

FiniteAlgebra::FiniteAlgebra(std::string name, std::vector<std::string> tokens,
                             std::vector<ElementId> arrow,
                             std::vector<ElementId> squig, ElementId unit,
                             std::optional<ElementId> bottom)
    : name_(std::move(name)),
      tokens_(std::move(tokens)),
      arrow_(std::move(arrow)),
      squig_(std::move(squig)),
      unit_(unit),
      bottom_(bottom) {
  const std::size_t n = tokens_.size();
  if (n == 0) throw Error(ErrorKind::kParse, "empty carrier");
  if (n > ElementSubset::kMaxUniverse) {
    throw Error(ErrorKind::kSizeGuard, "carrier exceeds 64 elements");
  }
  std::set<std::string> seen;
  for (const auto& t : tokens_) {
    if (!seen.insert(t).second) {
      throw Error(ErrorKind::kParse, "duplicate element token '" + t + "'");
    }
  }
  if (arrow_.size() != n * n || squig_.size() != n * n) {
    throw Error(ErrorKind::kParse, "table size mismatch");
  }
  auto in_range = [n](ElementId v) { return v < n; };
  if (!std::all_of(arrow_.begin(), arrow_.end(), in_range) ||
      !std::all_of(squig_.begin(), squig_.end(), in_range)) {
    throw Error(ErrorKind::kParse, "table entry outside carrier");
  }
  if (unit_ >= n) throw Error(ErrorKind::kParse, "unit outside carrier");
  if (bottom_ && *bottom_ >= n) {
    throw Error(ErrorKind::kParse, "bottom outside carrier");
  }
}

std::optional<ElementId> FiniteAlgebra::find(std::string_view token) const {
  for (ElementId i = 0; i < tokens_.size(); ++i) {
    if (tokens_[i] == token) return i;
  }
  return std::nullopt;
}

bool FiniteAlgebra::is_bounded() const noexcept {
  if (!bottom_) return false;
  for (ElementId x = 0; x < size(); ++x) {
    if (arrow(*bottom_, x) != unit_ || squig(*bottom_, x) != unit_) {
      return false;
    }
  }
  return true;
}

FiniteAlgebra FiniteAlgebra::renamed(std::string name) const {
  FiniteAlgebra copy = *this;
  copy.name_ = std::move(name);
  return copy;
}

FiniteAlgebra FiniteAlgebra::with_bottom(
    std::optional<ElementId> bottom) const {
  if (bottom && *bottom >= size()) {
    throw Error(ErrorKind::kParse, "bottom outside carrier");
  }
  FiniteAlgebra copy = *this;
  copy.bottom_ = bottom;
  return copy;
}

// Parsing

namespace {

std::vector<std::string> split_words(const std::string& line) {
  std::istringstream ss(line);
  std::vector<std::string> out;
  std::string w;
  while (ss >> w) out.push_back(w);
  return out;
}

[[noreturn]] void parse_fail(std::size_t line, const std::string& what) {
  throw Error(ErrorKind::kParse, "line " + std::to_string(line) + ": " + what);
}

}  // namespace

FiniteAlgebra parse_algebra(std::istream& in) {
  std::string name;
  std::vector<std::string> tokens;
  std::optional<std::string> unit_tok;
  std::optional<std::string> bottom_tok;
  std::size_t unit_line = 0;
  std::size_t bottom_line = 0;
  std::vector<std::vector<std::string>> arrow_rows;
  std::vector<std::vector<std::string>> squig_rows;
  std::vector<std::size_t> arrow_lines;
  std::vector<std::size_t> squig_lines;
  bool have_elements = false;
  bool have_arrow = false;
  bool have_squig = false;
  bool ended = false;
  enum class Section { kHeader, kArrow, kSquig } section = Section::kHeader;

  std::string raw;
  std::size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    if (auto hash = raw.find('#'); hash != std::string::npos) {
      raw.erase(hash);
    }
    auto words = split_words(raw);
    if (words.empty()) continue;
    if (ended) parse_fail(lineno, "content after 'end'");
    const std::string& kw = words[0];

    if (kw == "algebra") {
      if (words.size() != 2) parse_fail(lineno, "expected 'algebra <name>'");
      name = words[1];
      section = Section::kHeader;
    } else if (kw == "elements") {
      if (have_elements) parse_fail(lineno, "duplicate 'elements' section");
      tokens.assign(words.begin() + 1, words.end());
      if (tokens.empty()) parse_fail(lineno, "empty element list");
      std::set<std::string> seen;
      for (const auto& t : tokens) {
        if (!seen.insert(t).second) {
          parse_fail(lineno, "duplicate element token '" + t + "'");
        }
      }
      have_elements = true;
      section = Section::kHeader;
    } else if (kw == "unit") {
      if (words.size() != 2) parse_fail(lineno, "expected 'unit <tok>'");
      unit_tok = words[1];
      unit_line = lineno;
      section = Section::kHeader;
    } else if (kw == "bottom") {
      if (words.size() != 2) parse_fail(lineno, "expected 'bottom <tok>'");
      bottom_tok = words[1];
      bottom_line = lineno;
      section = Section::kHeader;
    } else if (kw == "table") {
      if (words.size() != 2 || (words[1] != "arrow" && words[1] != "squig")) {
        parse_fail(lineno, "expected 'table arrow' or 'table squig'");
      }
      if (words[1] == "arrow") {
        if (have_arrow) parse_fail(lineno, "duplicate 'table arrow' section");
        have_arrow = true;
        section = Section::kArrow;
      } else {
        if (have_squig) parse_fail(lineno, "duplicate 'table squig' section");
        have_squig = true;
        section = Section::kSquig;
      }
    } else if (kw == "end") {
      ended = true;
    } else if (section == Section::kArrow) {
      arrow_rows.push_back(words);
      arrow_lines.push_back(lineno);
    } else if (section == Section::kSquig) {
      squig_rows.push_back(words);
      squig_lines.push_back(lineno);
    } else {
      parse_fail(lineno, "unexpected '" + kw + "'");
    }
  }

  if (name.empty()) parse_fail(lineno, "missing section 'algebra'");
  if (!have_elements) parse_fail(lineno, "missing section 'elements'");
  if (!unit_tok) parse_fail(lineno, "missing section 'unit'");
  if (!have_arrow) parse_fail(lineno, "missing section 'table arrow'");
  if (!have_squig) parse_fail(lineno, "missing section 'table squig'");
  if (!ended) parse_fail(lineno, "missing section 'end'");

  const std::size_t n = tokens.size();
  auto lookup = [&](const std::string& t, std::size_t at) -> ElementId {
    for (ElementId i = 0; i < n; ++i) {
      if (tokens[i] == t) return i;
    }
    parse_fail(at, "unknown token '" + t + "'");
  };
  auto read_table = [&](const std::vector<std::vector<std::string>>& rows,
                        const std::vector<std::size_t>& lines,
                        const char* which, std::size_t header_line) {
    if (rows.size() != n) {
      parse_fail(rows.size() < n ? (lines.empty() ? header_line : lines.back())
                                 : lines[n],
                 std::string("table ") + which + ": expected " +
                     std::to_string(n) + " rows, found " +
                     std::to_string(rows.size()));
    }
    std::vector<ElementId> table;
    table.reserve(n * n);
    for (std::size_t r = 0; r < n; ++r) {
      if (rows[r].size() != n) parse_fail(lines[r], "row length mismatch");
      for (const auto& t : rows[r]) table.push_back(lookup(t, lines[r]));
    }
    return table;
  };

  auto arrow = read_table(arrow_rows, arrow_lines, "arrow", lineno);
  auto squig = read_table(squig_rows, squig_lines, "squig", lineno);
  ElementId unit = lookup(*unit_tok, unit_line);
  std::optional<ElementId> bottom;
  if (bottom_tok) bottom = lookup(*bottom_tok, bottom_line);
  return FiniteAlgebra(name, tokens, std::move(arrow), std::move(squig), unit,
                       bottom);
}

FiniteAlgebra parse_algebra_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_algebra(in);
}

FiniteAlgebra load_algebra(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::kParse, "cannot open '" + path + "'");
  return parse_algebra(in);
}

std::string serialize(const FiniteAlgebra& a) {
  std::ostringstream out;
  const std::size_t n = a.size();
  out << "algebra " << a.name() << "\n";
  out << "elements";
  for (const auto& t : a.tokens()) out << ' ' << t;
  out << "\nunit " << a.token(a.unit()) << "\n";
  if (a.bottom()) out << "bottom " << a.token(*a.bottom()) << "\n";
  auto table = [&](const char* which, auto op) {
    out << "table " << which << "\n";
    for (ElementId x = 0; x < n; ++x) {
      for (ElementId y = 0; y < n; ++y) {
        if (y) out << ' ';
        out << a.token(op(x, y));
      }
      out << "\n";
    }
  };
  table("arrow", [&](ElementId x, ElementId y) { return a.arrow(x, y); });
  table("squig", [&](ElementId x, ElementId y) { return a.squig(x, y); });
  out << "end\n";
  return out.str();
}

bool leq(const FiniteAlgebra& a, ElementId x, ElementId y) {
  bool by_arrow = a.arrow(x, y) == a.unit();
  bool by_squig = a.squig(x, y) == a.unit();
  if (by_arrow != by_squig) {
    throw Error(ErrorKind::kInconsistentOrder,
                "x->y and x~>y disagree on 1 at (" + a.token(x) + "," +
                    a.token(y) + ")");
  }
  return by_arrow;
}

std::pair<ElementId, ElementId> negations(const FiniteAlgebra& a,
                                          ElementId x) {
  if (!a.is_bounded()) {
    throw Error(ErrorKind::kUnbounded, "algebra '" + a.name() +
                                           "' has no verified bottom");
  }
  ElementId zero = *a.bottom();
  return {a.arrow(x, zero), a.squig(x, zero)};
}

std::string format_subset(const FiniteAlgebra& a, const ElementSubset& s) {
  std::string out = "{";
  bool first = true;
  for (ElementId x : s.members()) {
    if (!first) out += ',';
    out += a.token(x);
    first = false;
  }
  out += '}';
  return out;
}

ElementSubset parse_subset(const FiniteAlgebra& a, std::string_view text) {
  std::string s(text);
  auto trim = [](std::string v) {
    auto b = v.find_first_not_of(" \t");
    auto e = v.find_last_not_of(" \t");
    return b == std::string::npos ? std::string() : v.substr(b, e - b + 1);
  };
  s = trim(s);
  if (s.size() < 2 || s.front() != '{' || s.back() != '}') {
    throw Error(ErrorKind::kParse, "subset must be written {tok,...}");
  }
  ElementSubset out(a.size());
  std::string body = s.substr(1, s.size() - 2);
  if (trim(body).empty()) return out;
  std::istringstream ss(body);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    auto id = a.find(item);
    if (!id) throw Error(ErrorKind::kParse, "unknown token '" + item + "'");
    out.insert(*id);
  }
  return out;
}

std::string format_tuple(const FiniteAlgebra& a,
                         std::span<const ElementId> tuple) {
  std::string out = "(";
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    if (i) out += ',';
    out += a.token(tuple[i]);
  }
  out += ')';
  return out;
}

}  // namespace psbe
