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

#ifndef MATAPPROX_INSTANCES_H_
#define MATAPPROX_INSTANCES_H_

// Named example systems, their expected values, and seeded random
// generators for the property suites.

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "matapprox/greedy.h"
#include "matapprox/matroid.h"
#include "matapprox/rational.h"
#include "matapprox/setfamily.h"

namespace matapprox {

// Union of U^{k1} on E1 = {1..e1} and U^{k2} on E2 = {e1+1..e1+e2}.
// Requires k1 < e1 < k2 < e2 and e1 + e2 <= 24.
IndependenceSystem TwinPeaks(int e1, int k1, int e2, int k2);

// Stable sets of the path 1 - 2 - ... - n.
IndependenceSystem PathStableSet(int n);

// Independent iff independent in every input matroid.
IndependenceSystem MatroidIntersection(const std::vector<Matroid>& matroids);

// Direct sum of U^{caps[i]} over the disjoint `blocks`; elements outside
// every block are loops.
Matroid PartitionMatroid(GroundSet ground, const std::vector<Mask>& blocks,
                         const std::vector<int>& caps);

// The two capacity-one partition matroids whose blocks are the odd-indexed
// and the even-indexed path edges; their intersection is PathStableSet(n).
std::vector<Matroid> PathEdgePartitionMatroids(int n);

// How the size condition of the stable-set acceptable family is read.
enum class StableSetReading { kExactlyFour, kAtMostFour };

// Stable sets S of the 9-path with |S ∩ {3,6,9}| <= 1 and |S| = 4
// (kExactlyFour) or |S| <= 4 (kAtMostFour).
SetFamily StableSetAcceptable(StableSetReading reading);

struct ExpectedValue {
  enum class Relation { kEqual, kAtMost };
  // kStated: given with the example; kComputed: obtained by enumeration.
  enum class Source { kStated, kComputed };

  Rational value;
  Relation relation = Relation::kEqual;
  Source source = Source::kStated;
};

struct FixtureBundle {
  std::string name;
  IndependenceSystem sys;
  std::optional<SetFamily> acceptable;
  std::optional<Matroid> inner;
  std::map<std::string, ExpectedValue> expected;
};

// ex1a, ex1b, ex1c, ex6, twinpeaks_2134, stab9.
std::vector<std::string> FixtureNames();

// Throws Error(kInvalidInput) for an unknown name. `reading` only affects
// stab9.
FixtureBundle NamedFixture(
    std::string_view name,
    StableSetReading reading = StableSetReading::kExactlyFour);

// Deterministic per seed. Each subset S with |S| >= 2 becomes a candidate
// maximal set with probability density^(|S|-1); singletons are always added,
// so the result is normal. With allow_loops the probability is density^|S|
// for every nonempty S and nothing is forced. n <= 12.
IndependenceSystem RandomHereditary(int n, const Rational& density,
                                    std::uint64_t seed,
                                    bool allow_loops = false);

// Random blocks and capacities; roughly one element in eight is a loop.
Matroid RandomPartitionMatroid(GroundSet ground, std::mt19937_64& rng);

// Entries p/q with p in [0, 10] and q in [1, 6].
Weights RandomWeights(GroundSet ground, std::mt19937_64& rng);

// A random nonempty family of independent sets with at least one nonempty
// member.
SetFamily RandomAcceptable(const IndependenceSystem& sys,
                           std::mt19937_64& rng);

// Uniform double in [0, 1), identical on every platform.
double UnitInterval(std::mt19937_64& rng);

inline constexpr int kMaxAllSystemsN = 5;

// Every independence system on n <= 5 elements, one per nonempty antichain
// of subsets (the antichain {∅} is the trivial system).
void ForEachIndependenceSystem(
    int n, const std::function<void(const IndependenceSystem&)>& fn);

}  // namespace matapprox

#endif  // MATAPPROX_INSTANCES_H_
