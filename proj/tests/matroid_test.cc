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

#include "matapprox/matroid.h"

#include <vector>

#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "matapprox/error.h"
#include "matapprox/instances.h"
#include "oracle.h"

namespace matapprox {
namespace {

TEST(RankTest, Examples) {
  const GroundSet g6(6);
  const Matroid left = Uniform(g6, MaskOf({1, 2, 3, 4}), 4);
  EXPECT_EQ(Rank(left.system(), MaskOf({3, 4, 5, 6})), 2);
  EXPECT_EQ(Rank(left.system(), 0), 0);
  const IndependenceSystem path = PathStableSet(9);
  EXPECT_EQ(Rank(path, path.ground().full()), 5);
  EXPECT_EQ(LowerRank(path, path.ground().full()), 3);
  EXPECT_EQ(LowerRank(path, 0), 0);
  EXPECT_EQ(LowerRank(TwinPeaks(2, 1, 4, 3), MaskOf({1, 3, 4, 5})), 1);
}

TEST(IsMatroidTest, Examples) {
  const FixtureBundle ex1a = NamedFixture("ex1a");
  EXPECT_FALSE(IsMatroid(ex1a.sys));
  const GroundSet g4(4);
  EXPECT_TRUE(IsMatroid(Uniform(g4, g4.full(), 2).system()));
  EXPECT_FALSE(IsMatroid(NamedFixture("ex6").sys));
}

TEST(RankAxiomsTest, Examples) {
  const GroundSet g4(4);
  EXPECT_TRUE(CheckRankAxioms(RankTable::Of(Uniform(g4, g4.full(), 1).system())));
  EXPECT_FALSE(CheckRankAxioms(RankTable::Of(NamedFixture("ex1a").sys)));
  EXPECT_TRUE(CheckRankAxioms(RankTable(g4, std::vector<int>(16, 0))));
  std::vector<int> bad(16, 0);
  bad[0] = 1;
  EXPECT_FALSE(CheckRankAxioms(RankTable(g4, bad)));
  EXPECT_THROW(RankTable(g4, std::vector<int>(8, 0)), Error);
}

TEST(BasisExchangeTest, Examples) {
  const GroundSet g4(4);
  EXPECT_FALSE(CheckBasisExchange(SetFamily(g4, {MaskOf({1, 2}), MaskOf({3, 4})})));
  EXPECT_TRUE(CheckBasisExchange(
      SetFamily(GroundSet(3), {MaskOf({1, 2}), MaskOf({1, 3}), MaskOf({2, 3})})));
  // 3 is a coloop and 2, 4 are parallel: exchange holds, so this family is
  // the basis family of a matroid.
  const SetFamily bases(g4, {MaskOf({2, 3}), MaskOf({3, 4})});
  EXPECT_TRUE(CheckBasisExchange(bases));
  EXPECT_TRUE(IsMatroid(IndependenceSystem(g4, bases.members())));
}

TEST(UniformTest, Examples) {
  const GroundSet g4(4);
  const Matroid u14 = Uniform(g4, g4.full(), 1);
  EXPECT_EQ(u14.bases().size(), 4u);
  EXPECT_EQ(u14.rank(), 1);
  EXPECT_THAT(Uniform(g4, MaskOf({1, 2}), 0).bases().members(),
              ::testing::ElementsAre(0u));
  const Matroid u2 = Uniform(g4, MaskOf({2, 3, 4}), 2);
  EXPECT_THAT(u2.bases().members(),
              ::testing::ElementsAre(MaskOf({2, 3}), MaskOf({2, 4}),
                                     MaskOf({3, 4})));
  EXPECT_THROW(Uniform(g4, MaskOf({1, 2}), 3), Error);
  EXPECT_THROW(Uniform(g4, MaskOf({1, 2}), -1), Error);
}

TEST(DirectSumTest, Examples) {
  const GroundSet g9(9);
  const Matroid m = DirectSum(DirectSum(Uniform(g9, MaskOf({1, 2}), 1),
                                        Uniform(g9, MaskOf({4, 5}), 1)),
                              Uniform(g9, MaskOf({7, 8}), 1));
  EXPECT_EQ(m.rank(), 3);
  EXPECT_EQ(m.bases().size(), 8u);
  const Matroid a = Uniform(g9, MaskOf({1, 2, 3}), 2);
  EXPECT_EQ(DirectSum(a, LoopMatroid(g9)).system(), a.system());
  const GroundSet g2(2);
  EXPECT_EQ(DirectSum(Uniform(g2, 0x1, 1), Uniform(g2, 0x2, 1)).system(),
            FreeMatroid(g2).system());
  EXPECT_THROW(DirectSum(a, Uniform(g9, MaskOf({3, 4}), 1)), Error);
}

TEST(MatroidTest, ConstructorValidates) {
  EXPECT_THROW(Matroid(NamedFixture("ex1a").sys), Error);
  try {
    Matroid(NamedFixture("ex1a").sys);
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotAMatroid);
  }
}

TEST(MatroidFromDeltaTest, Examples) {
  const GroundSet g4(4);
  const Matroid u2 = Uniform(g4, g4.full(), 2);
  EXPECT_EQ(MatroidFromDelta(u2.system(), RankTable(g4, std::vector<int>(16, 0)))
                .system(),
            u2.system());
  const RankTable full_delta = RankTable::Of(u2.system());
  EXPECT_EQ(MatroidFromDelta(u2.system(), full_delta).system(),
            LoopMatroid(g4).system());

  const FixtureBundle ex6 = NamedFixture("ex6");
  const RankTable r = RankTable::Of(ex6.sys);
  const Mask left = MaskOf({1, 2, 3, 4});
  std::vector<int> delta(64);
  for (Mask s = 0; s < 64; ++s) delta[s] = r[s] - Popcount(s & left);
  EXPECT_EQ(MatroidFromDelta(ex6.sys, RankTable(ex6.sys.ground(), delta)).system(),
            Uniform(ex6.sys.ground(), left, 4).system());

  std::vector<int> negative(16, 0);
  negative[1] = -1;
  EXPECT_THROW(MatroidFromDelta(u2.system(), RankTable(g4, negative)), Error);
  // r - delta breaks submodularity: {1} and {2} keep rank 1, {1,2} drops to 0.
  std::vector<int> broken(16, 0);
  broken[0x3] = 2;
  EXPECT_THROW(MatroidFromDelta(u2.system(), RankTable(g4, broken)), Error);
}

TEST(MatroidFromDeltaTest, RoundTripsEveryInnerMatroid) {
  const FixtureBundle ex1c = NamedFixture("ex1c");
  const RankTable r = RankTable::Of(ex1c.sys);
  for (const Matroid& m : AllMatroids(4)) {
    bool inner = true;
    for (Mask b : m.bases()) inner &= ex1c.sys.IsIndependent(b);
    if (!inner) continue;
    std::vector<int> delta(16);
    for (Mask s = 0; s < 16; ++s) delta[s] = r[s] - m.Rank(s);
    EXPECT_EQ(MatroidFromDelta(ex1c.sys, RankTable(GroundSet(4), delta)).system(),
              m.system());
  }
}

// The catalog against labeled matroid counts: brute force for n <= 4, and the
// published values 406 and 3807 for n = 5, 6.
TEST(AllMatroidsTest, Counts) {
  for (int n = 1; n <= 4; ++n) {
    std::size_t brute = 0;
    for (const auto& family : oracle::Antichains(n)) {
      if (oracle::IsMatroid(family, n)) ++brute;
    }
    EXPECT_EQ(AllMatroids(n).size(), brute) << n;
  }
  EXPECT_EQ(AllMatroids(1).size(), 2u);
  EXPECT_EQ(AllMatroids(4).size(), 68u);
  EXPECT_EQ(AllMatroids(5).size(), 406u);
  EXPECT_EQ(AllMatroids(6).size(), 3807u);
  EXPECT_THROW(AllMatroids(7), Error);
}

TEST(AllMatroidsTest, EveryEntryIsAMatroidAndOrdered) {
  const auto& all = AllMatroids(4);
  for (std::size_t i = 0; i < all.size(); ++i) {
    EXPECT_TRUE(IsMatroid(all[i].system()));
    if (i > 0) EXPECT_LE(all[i - 1].rank(), all[i].rank());
  }
}

// The three characterizations and the rank-quotient definition agree on
// every system with n <= 4, with the definition taken from the oracle.
TEST(CharacterizationTest, AgreeWithDefinition) {
  for (int n = 1; n <= 4; ++n) {
    ForEachIndependenceSystem(n, [n](const IndependenceSystem& sys) {
      const bool truth = oracle::IsMatroid(sys.maximal().members(), n);
      ASSERT_EQ(IsMatroid(sys), truth);
      ASSERT_EQ(CheckRankAxioms(RankTable::Of(sys)), truth);
      ASSERT_EQ(CheckBasisExchange(sys.maximal()), truth);
      for (Mask f = 0; f < (Mask{1} << n); ++f) {
        ASSERT_EQ(Rank(sys, f), oracle::Rank(sys.maximal().members(), f));
        ASSERT_EQ(LowerRank(sys, f),
                  oracle::LowerRank(sys.maximal().members(), f));
      }
    });
  }
}

TEST(MatroidTest, RankCacheMatchesScan) {
  const GroundSet g(13);
  const Matroid big = Uniform(g, g.full(), 3);
  const GroundSet g5(5);
  const Matroid small = Uniform(g5, MaskOf({1, 2, 4}), 2);
  for (Mask s = 0; s < 32; ++s) EXPECT_EQ(small.Rank(s), Rank(small.system(), s));
  EXPECT_EQ(big.Rank(0x7f), 3);
  EXPECT_EQ(big.Rank(0x3), 2);
}

}  // namespace
}  // namespace matapprox
