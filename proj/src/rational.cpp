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

#include "psbe/rational.hpp"

#include <cctype>

#include "psbe/error.hpp"

namespace psbe {

Rational::Rational(std::int64_t value) : value_(value) {}

Rational::Rational(BigInt numerator, BigInt denominator) {
  if (denominator == 0) {
    throw Error(ErrorKind::kPrecondition, "zero denominator");
  }
  // cpp_rational rejects negative denominators.
  if (denominator < 0) {
    numerator = -numerator;
    denominator = -denominator;
  }
  value_ = Value(numerator, denominator);
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  std::string_view num = body;
  std::string_view den = "1";
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    num = body.substr(0, slash);
    den = body.substr(slash + 1);
  }
  if (!all_digits(num) || !all_digits(den)) {
    throw Error(ErrorKind::kParse,
                "malformed rational '" + std::string(text) + "'");
  }
  BigInt p{std::string(num)};
  BigInt q{std::string(den)};
  if (q == 0) {
    throw Error(ErrorKind::kParse,
                "zero denominator in '" + std::string(text) + "'");
  }
  if (negative) p = -p;
  return Rational(p, q);
}

BigInt Rational::numerator() const {
  return boost::multiprecision::numerator(value_);
}

BigInt Rational::denominator() const {
  return boost::multiprecision::denominator(value_);
}

bool Rational::is_zero() const { return value_ == 0; }

int Rational::sign() const { return value_ < 0 ? -1 : (value_ > 0 ? 1 : 0); }

Rational Rational::operator-() const { return Rational(Value(-value_)); }

Rational& Rational::operator+=(const Rational& o) {
  value_ += o.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  value_ -= o.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  value_ *= o.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw Error(ErrorKind::kPrecondition, "division by zero");
  value_ /= o.value_;
  return *this;
}

std::string Rational::str() const {
  BigInt q = denominator();
  if (q == 1) return numerator().str();
  return numerator().str() + "/" + q.str();
}

std::ostream& operator<<(std::ostream& out, const Rational& r) {
  return out << r.str();
}

}  // namespace psbe
