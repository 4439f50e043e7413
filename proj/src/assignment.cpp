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

#include "psbe/assignment.hpp"

#include <fstream>
#include <sstream>
#include <vector>

#include "psbe/error.hpp"

namespace psbe {

std::string_view to_string(AssignmentKind kind) {
  switch (kind) {
    case AssignmentKind::kState: return "state";
    case AssignmentKind::kMeasure: return "measure";
    case AssignmentKind::kValuation: return "valuation";
  }
  return "unknown";
}

namespace {

[[noreturn]] void fail(std::size_t line, const std::string& what) {
  throw Error(ErrorKind::kParse, "line " + std::to_string(line) + ": " + what);
}

}  // namespace

RationalAssignment parse_assignment(const FiniteAlgebra& a, std::istream& in,
                                    std::optional<AssignmentKind> expected) {
  RationalAssignment out;
  bool have_header = false;
  std::vector<bool> seen(a.size(), false);
  out.values.assign(a.size(), Rational());
  std::string raw;
  std::size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream ss(raw);
    std::vector<std::string> words;
    for (std::string w; ss >> w;) words.push_back(w);
    if (words.empty()) continue;
    if (!have_header) {
      if (words.size() != 2) fail(lineno, "expected '<kind> <name>'");
      if (words[0] == "state") {
        out.kind = AssignmentKind::kState;
      } else if (words[0] == "measure") {
        out.kind = AssignmentKind::kMeasure;
      } else if (words[0] == "valuation") {
        out.kind = AssignmentKind::kValuation;
      } else {
        fail(lineno, "unknown assignment kind '" + words[0] + "'");
      }
      if (expected && *expected != out.kind) {
        fail(lineno, "expected a " + std::string(to_string(*expected)) +
                         " file, found " + words[0]);
      }
      out.name = words[1];
      have_header = true;
      continue;
    }
    if (words.size() != 3 || words[1] != "=") {
      fail(lineno, "expected '<element> = <rational>'");
    }
    auto id = a.find(words[0]);
    if (!id) fail(lineno, "unknown token '" + words[0] + "'");
    if (seen[*id]) fail(lineno, "duplicate entry for '" + words[0] + "'");
    seen[*id] = true;
    try {
      out.values[*id] = Rational::parse(words[2]);
    } catch (const Error& e) {
      fail(lineno, e.what());
    }
  }
  if (!have_header) fail(lineno, "missing assignment header");
  for (ElementId x = 0; x < a.size(); ++x) {
    if (!seen[x]) fail(lineno, "no value for element '" + a.token(x) + "'");
  }
  return out;
}

RationalAssignment parse_assignment_text(
    const FiniteAlgebra& a, std::string_view text,
    std::optional<AssignmentKind> expected) {
  std::istringstream in{std::string(text)};
  return parse_assignment(a, in, expected);
}

RationalAssignment load_assignment(const FiniteAlgebra& a,
                                   const std::string& path,
                                   std::optional<AssignmentKind> expected) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::kParse, "cannot open '" + path + "'");
  return parse_assignment(a, in, expected);
}

std::string serialize(const FiniteAlgebra& a, const RationalAssignment& asg) {
  std::ostringstream out;
  out << to_string(asg.kind) << ' ' << asg.name << '\n';
  for (ElementId x = 0; x < a.size(); ++x) {
    out << a.token(x) << " = " << asg.values[x].str() << '\n';
  }
  return out.str();
}

Vector values_of(
    const FiniteAlgebra& a,
    std::initializer_list<std::pair<std::string_view, std::string_view>>
        entries) {
  Vector v(a.size());
  for (const auto& [tok, val] : entries) {
    auto id = a.find(tok);
    if (!id) {
      throw Error(ErrorKind::kParse, "unknown token '" + std::string(tok) + "'");
    }
    v[*id] = Rational::parse(val);
  }
  return v;
}

}  // namespace psbe
