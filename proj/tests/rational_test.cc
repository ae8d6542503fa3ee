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

#include "gtest/gtest.h"
#include "matapprox/error.h"

namespace matapprox {
namespace {

TEST(RationalTest, ToStringUsesLowestTerms) {
  EXPECT_EQ(ToString(Rational(2, 4)), "1/2");
  EXPECT_EQ(ToString(Rational(6, 3)), "2");
  EXPECT_EQ(ToString(Rational(0, 5)), "0");
  EXPECT_EQ(ToString(Rational(-3, 9)), "-1/3");
}

TEST(RationalTest, ParseAcceptsIntegersAndFractions) {
  EXPECT_EQ(ParseRational("3"), Rational(3));
  EXPECT_EQ(ParseRational("5/2"), Rational(5, 2));
  EXPECT_EQ(ParseRational("4/8"), Rational(1, 2));
  EXPECT_EQ(ParseRational("0"), Rational(0));
}

TEST(RationalTest, ParseRejectsMalformedText) {
  for (const char* bad : {"", "+1", "1/0", "1/", "/2", "a", "1.5", "1/2/3",
                          " 1", "1 "}) {
    EXPECT_THROW(ParseRational(bad), Error) << bad;
  }
}

TEST(RationalTest, RoundTripsThroughText) {
  for (int p = 0; p < 12; ++p) {
    for (int q = 1; q < 9; ++q) {
      const Rational r(p, q);
      EXPECT_EQ(ParseRational(ToString(r)), r);
    }
  }
}

TEST(RationalTest, ToDouble) { EXPECT_DOUBLE_EQ(ToDouble(Rational(3, 4)), 0.75); }

}  // namespace
}  // namespace matapprox
