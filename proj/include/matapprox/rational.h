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

#ifndef MATAPPROX_RATIONAL_H_
#define MATAPPROX_RATIONAL_H_

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

// Boost 1.74's mixed `int == rational` template forwards to `rational == int`,
// which C++20 rewrites back into the same call. Non-template overloads found
// by ADL win over both and end the recursion.
namespace boost {
inline bool operator==(const rational<std::int64_t>& a, int b) {
  return a.denominator() == 1 && a.numerator() == b;
}
inline bool operator==(const rational<std::int64_t>& a, long b) {
  return a.denominator() == 1 && a.numerator() == b;
}
}  // namespace boost

namespace matapprox {

// Exact arithmetic for weights, ratios and quotients. Values stay small at
// desk scale (ground sets of at most 24 elements), so 64-bit parts suffice.
using Rational = boost::rational<std::int64_t>;

// "p/q" in lowest terms, or "p" when the denominator is 1.
std::string ToString(const Rational& r);

// Accepts a decimal integer or "p/q"; throws Error(kInvalidInput) otherwise.
Rational ParseRational(std::string_view text);

double ToDouble(const Rational& r);

}  // namespace matapprox

#endif  // MATAPPROX_RATIONAL_H_
