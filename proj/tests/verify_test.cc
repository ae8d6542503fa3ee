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

#include "matapprox/verify.h"

#include <string>

#include "gtest/gtest.h"
#include "matapprox/error.h"

namespace matapprox {
namespace {

VerifyOptions Small() {
  VerifyOptions o;
  o.exhaustive_n = 3;
  o.random_count = 8;
  o.random_n_min = 4;
  o.random_n_max = 5;
  o.trials = 20;
  o.seed = 7;
  return o;
}

class SuiteTest : public ::testing::TestWithParam<std::string> {};

TEST_P(SuiteTest, PassesOnSmallInstances) {
  const SuiteResult r = RunSuite(GetParam(), Small());
  EXPECT_EQ(r.name, GetParam());
  EXPECT_TRUE(r.passed) << r.message << "\n" << r.counterexample.dump();
  EXPECT_GT(r.checked, 0u);
  EXPECT_TRUE(r.counterexample.is_null());
}

INSTANTIATE_TEST_SUITE_P(AllButMilgrom, SuiteTest,
                         ::testing::Values("setfamily", "matroid", "greedy",
                                           "quotient", "hkj", "rho",
                                           "perfect-matroid", "ip"));

// Up to three elements the bound holds for both 𝓞 = 𝓘 and 𝓞 = 𝓑.
TEST(RhoBoundSuiteTest, PassesUpToThreeElements) {
  VerifyOptions o = Small();
  o.random_count = 0;
  const SuiteResult r = RhoBoundSuite(o);
  EXPECT_TRUE(r.passed) << r.message;
}

// With 𝓞 = 𝓑 the bound fails on four elements; see RhoMaxExactTest in
// approx_test for the instance.
TEST(RhoBoundSuiteTest, BasesFormFailsOnFourElements) {
  VerifyOptions o = Small();
  o.exhaustive_n = 4;
  o.random_count = 0;
  const SuiteResult r = RhoBoundSuite(o);
  EXPECT_FALSE(r.passed);
  EXPECT_EQ(r.message, "rho^M(I, B) exceeds q");
}

// The lower bound over W fails for acceptable sets that are not closed under
// subsets; the suite reports the first such instance.
TEST(MilgromSuiteTest, ReportsCounterexample) {
  const SuiteResult r = MilgromSuite(Small());
  EXPECT_FALSE(r.passed);
  EXPECT_FALSE(r.counterexample.is_null());
}

TEST(RunSuiteTest, UnknownName) {
  try {
    RunSuite("nope", Small());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInvalidInput);
  }
  EXPECT_EQ(SuiteNames().size(), 10u);
}

TEST(RunSuiteTest, ShardsPartitionTheWork) {
  VerifyOptions all = Small();
  all.exhaustive_n = 0;
  const std::size_t total = RunSuite("quotient", all).checked;
  std::size_t sum = 0;
  for (int i = 0; i < 3; ++i) {
    VerifyOptions part = all;
    part.shard = i;
    part.shards = 3;
    sum += RunSuite("quotient", part).checked;
  }
  EXPECT_EQ(sum, total);
}

}  // namespace
}  // namespace matapprox
