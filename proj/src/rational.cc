// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "matapprox/rational.h"

#include <charconv>
#include <string>

#include "matapprox/error.h"

namespace matapprox {

std::string ToString(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

namespace {

std::int64_t ParseInteger(std::string_view text, std::string_view whole) {
  std::int64_t value = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (text.empty() || (text.front() == '+')) {
    throw Error(ErrorCode::kInvalidInput,
                "malformed rational: \"" + std::string(whole) + "\"");
  }
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) {
    throw Error(ErrorCode::kInvalidInput,
                "malformed rational: \"" + std::string(whole) + "\"");
  }
  return value;
}

}  // namespace

Rational ParseRational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(ParseInteger(text, text));
  const std::int64_t num = ParseInteger(text.substr(0, slash), text);
  const std::int64_t den = ParseInteger(text.substr(slash + 1), text);
  if (den == 0) {
    throw Error(ErrorCode::kInvalidInput,
                "zero denominator in \"" + std::string(text) + "\"");
  }
  return Rational(num, den);
}

double ToDouble(const Rational& r) {
  return boost::rational_cast<double>(r);
}

}  // namespace matapprox
