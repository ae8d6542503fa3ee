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

#include "matapprox/instances.h"

#include <algorithm>
#include <cmath>
#include <utility>

#include "matapprox/error.h"

namespace matapprox {

IndependenceSystem TwinPeaks(int e1, int k1, int e2, int k2) {
  if (!(0 <= k1 && k1 < e1 && e1 < k2 && k2 < e2) || e1 + e2 > kMaxGroundSize) {
    throw Error(ErrorCode::kInvalidInput,
                "twin peaks needs k1 < e1 < k2 < e2 and e1 + e2 <= 24");
  }
  const GroundSet ground(e1 + e2);
  const Mask first = (Mask{1} << e1) - 1;
  const Mask second = ground.full() & ~first;
  std::vector<Mask> maximal = Uniform(ground, first, k1).bases().members();
  const Matroid peak = Uniform(ground, second, k2);
  maximal.insert(maximal.end(), peak.bases().begin(), peak.bases().end());
  return IndependenceSystem(ground, std::move(maximal));
}

IndependenceSystem PathStableSet(int n) {
  const GroundSet ground(n);
  const Mask full = ground.full();
  std::vector<Mask> maximal;
  for (std::uint64_t s = 0; s < ground.num_subsets(); ++s) {
    const Mask m = static_cast<Mask>(s);
    if (m & (m >> 1)) continue;
    const Mask addable = full & ~m & ~(m << 1) & ~(m >> 1);
    if (addable == 0) maximal.push_back(m);
  }
  return IndependenceSystem(ground, std::move(maximal));
}

IndependenceSystem MatroidIntersection(const std::vector<Matroid>& matroids) {
  if (matroids.empty()) {
    throw Error(ErrorCode::kInvalidInput, "intersection of no matroids");
  }
  const GroundSet ground = matroids.front().ground();
  std::vector<std::uint8_t> indep(ground.num_subsets(), 1);
  for (const Matroid& m : matroids) {
    if (!(m.ground() == ground)) {
      throw Error(ErrorCode::kInvalidInput,
                  "matroid intersection needs one ground set");
    }
    const auto own = IndependenceBitmap(m.system());
    for (std::size_t s = 0; s < indep.size(); ++s) indep[s] &= own[s];
  }
  std::vector<Mask> sets;
  for (std::size_t s = 0; s < indep.size(); ++s) {
    if (indep[s]) sets.push_back(static_cast<Mask>(s));
  }
  return IndependenceSystem(ground, MaximalMembers(std::move(sets)));
}

Matroid PartitionMatroid(GroundSet ground, const std::vector<Mask>& blocks,
                         const std::vector<int>& caps) {
  if (blocks.size() != caps.size()) {
    throw Error(ErrorCode::kInvalidInput, "one capacity per block required");
  }
  Matroid sum = LoopMatroid(ground);
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    sum = DirectSum(sum, Uniform(ground, blocks[i], caps[i]));
  }
  return sum;
}

std::vector<Matroid> PathEdgePartitionMatroids(int n) {
  const GroundSet ground(n);
  std::vector<Matroid> out;
  for (int parity = 0; parity < 2; ++parity) {
    std::vector<Mask> blocks;
    std::vector<int> caps;
    Mask covered = 0;
    // Edge {i, i+1} for i = 1 + parity, 3 + parity, ...
    for (int i = 1 + parity; i + 1 <= n; i += 2) {
      blocks.push_back(MaskOf({i, i + 1}));
      caps.push_back(1);
      covered |= blocks.back();
    }
    for (int e : ElementsOf(ground.full() & ~covered)) {
      blocks.push_back(MaskOf({e}));
      caps.push_back(1);
    }
    out.push_back(PartitionMatroid(ground, blocks, caps));
  }
  return out;
}

SetFamily StableSetAcceptable(StableSetReading reading) {
  const GroundSet ground(9);
  const Mask thirds = MaskOf({3, 6, 9});
  std::vector<Mask> sets;
  for (Mask m = 0; m < (Mask{1} << 9); ++m) {
    if (m & (m >> 1)) continue;
    if (Popcount(m & thirds) > 1) continue;
    const int size = Popcount(m);
    const bool keep = reading == StableSetReading::kExactlyFour
                          ? size == 4
                          : size <= 4;
    if (keep) sets.push_back(m);
  }
  return SetFamily(ground, std::move(sets));
}

std::vector<std::string> FixtureNames() {
  return {"ex1a", "ex1b", "ex1c", "ex6", "twinpeaks_2134", "stab9"};
}

namespace {

using Relation = ExpectedValue::Relation;
using Source = ExpectedValue::Source;

ExpectedValue Stated(Rational v) { return {v, Relation::kEqual, Source::kStated}; }
ExpectedValue Computed(Rational v) {
  return {v, Relation::kEqual, Source::kComputed};
}

std::vector<Mask> Singletons(int n) {
  std::vector<Mask> out;
  for (int i = 0; i < n; ++i) out.push_back(Mask{1} << i);
  return out;
}

}  // namespace

FixtureBundle NamedFixture(std::string_view name, StableSetReading reading) {
  const GroundSet four(4);
  if (name == "ex1a" || name == "ex1b") {
    IndependenceSystem sys(four, {MaskOf({1, 2}), MaskOf({3, 4})});
    FixtureBundle b{std::string(name), sys, std::nullopt,
                    Uniform(four, four.full(), 1), {}};
    if (name == "ex1a") {
      b.acceptable = SetFamily(four, Singletons(4));
      b.expected["rho"] = Stated(1);
      b.expected["rho_max"] = Computed(1);
    } else {
      b.acceptable = SetFamily(four, {MaskOf({1, 2}), MaskOf({3, 4})});
      b.expected["rho"] = Stated(Rational(1, 2));
      b.expected["rho_max"] = Computed(Rational(1, 2));
    }
    return b;
  }
  if (name == "ex1c") {
    IndependenceSystem sys(four, {MaskOf({1, 2, 3}), MaskOf({1, 4}),
                                  MaskOf({2, 4}), MaskOf({3, 4})});
    FixtureBundle b{"ex1c", sys,
                    SetFamily(four, {MaskOf({2, 3}), MaskOf({3, 4})}),
                    Uniform(four, MaskOf({2, 3, 4}), 2), {}};
    b.expected["rho"] = Stated(1);
    b.expected["rho_max"] = Stated(1);
    return b;
  }
  if (name == "ex6") {
    const GroundSet six(6);
    const Mask left = MaskOf({1, 2, 3, 4});
    const Mask right = MaskOf({3, 4, 5, 6});
    IndependenceSystem sys(six, {left, right});
    FixtureBundle b{"ex6", sys, SetFamily(six, {left, right}),
                    Uniform(six, left, 4), {}};
    b.expected["rho"] = Stated(Rational(1, 2));
    b.expected["rho_dagger"] = Stated(0);
    return b;
  }
  if (name == "twinpeaks_2134") {
    IndependenceSystem sys = TwinPeaks(2, 1, 4, 3);
    const GroundSet six = sys.ground();
    const Mask second = MaskOf({3, 4, 5, 6});
    const Matroid peak = Uniform(six, second, 3);
    FixtureBundle b{"twinpeaks_2134", sys, peak.bases(), peak, {}};
    b.expected["q"] = Stated(Rational(1, 3));
    b.expected["rho"] = Stated(1);
    b.expected["rho_max_zero_knowledge"] = Stated(Rational(1, 3));
    return b;
  }
  if (name == "stab9") {
    IndependenceSystem sys = PathStableSet(9);
    const GroundSet nine = sys.ground();
    const Matroid inner =
        DirectSum(DirectSum(Uniform(nine, MaskOf({1, 2}), 1),
                            Uniform(nine, MaskOf({4, 5}), 1)),
                  Uniform(nine, MaskOf({7, 8}), 1));
    FixtureBundle b{"stab9", sys, StableSetAcceptable(reading), inner, {}};
    b.expected["rank"] = Stated(5);
    b.expected["q"] = Computed(Rational(1, 2));
    b.expected["q_dagger"] = {Rational(1, 2), Relation::kAtMost,
                              Source::kStated};
    b.expected["rho"] = reading == StableSetReading::kExactlyFour
                            ? Stated(Rational(3, 4))
                            : Computed(0);
    return b;
  }
  throw Error(ErrorCode::kInvalidInput,
              "unknown fixture \"" + std::string(name) + "\"");
}

double UnitInterval(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

IndependenceSystem RandomHereditary(int n, const Rational& density,
                                    std::uint64_t seed, bool allow_loops) {
  if (n < 1 || n > 12) {
    throw Error(ErrorCode::kInvalidInput,
                "random systems support 1 <= n <= 12");
  }
  if (density < 0 || density > 1) {
    throw Error(ErrorCode::kInvalidInput, "density must lie in [0, 1]");
  }
  const GroundSet ground(n);
  const double d = ToDouble(density);
  std::mt19937_64 rng(seed);
  std::vector<Mask> candidates;
  for (std::uint64_t s = 1; s < ground.num_subsets(); ++s) {
    const Mask m = static_cast<Mask>(s);
    const int exponent = allow_loops ? Popcount(m) : Popcount(m) - 1;
    // Draw for every subset so the stream does not depend on density.
    const double u = UnitInterval(rng);
    if (!allow_loops && Popcount(m) == 1) {
      candidates.push_back(m);
      continue;
    }
    if (u < std::pow(d, exponent)) candidates.push_back(m);
  }
  return IndependenceSystem(ground, MaximalMembers(std::move(candidates)));
}

Matroid RandomPartitionMatroid(GroundSet ground, std::mt19937_64& rng) {
  const int n = ground.size();
  const int num_blocks = 1 + static_cast<int>(rng() % std::max(1, n));
  std::vector<Mask> blocks(num_blocks, 0);
  for (int i = 0; i < n; ++i) {
    if (rng() % 8 == 0) continue;
    blocks[rng() % num_blocks] |= Mask{1} << i;
  }
  std::vector<Mask> used;
  std::vector<int> caps;
  for (Mask b : blocks) {
    if (b == 0) continue;
    used.push_back(b);
    caps.push_back(1 + static_cast<int>(rng() % Popcount(b)));
  }
  return PartitionMatroid(ground, used, caps);
}

Weights RandomWeights(GroundSet ground, std::mt19937_64& rng) {
  std::vector<Rational> values(ground.size());
  for (auto& x : values) {
    const auto num = static_cast<std::int64_t>(rng() % 11);
    const auto den = static_cast<std::int64_t>(1 + rng() % 6);
    x = Rational(num, den);
  }
  return Weights(ground, std::move(values));
}

SetFamily RandomAcceptable(const IndependenceSystem& sys,
                           std::mt19937_64& rng) {
  const std::vector<Mask> independent = IndependentSets(sys);
  std::vector<Mask> nonempty;
  for (Mask s : independent) {
    if (s != 0) nonempty.push_back(s);
  }
  if (nonempty.empty()) return SetFamily(sys.ground(), {0});
  const double p = 0.05 + 0.5 * UnitInterval(rng);
  std::vector<Mask> chosen;
  for (Mask s : nonempty) {
    if (UnitInterval(rng) < p) chosen.push_back(s);
  }
  if (chosen.empty()) chosen.push_back(nonempty[rng() % nonempty.size()]);
  return SetFamily(sys.ground(), std::move(chosen));
}

namespace {

void ExtendAntichain(const GroundSet& ground, Mask next,
                     std::vector<Mask>& chosen,
                     const std::function<void(const IndependenceSystem&)>& fn) {
  for (std::uint64_t s = next; s < ground.num_subsets(); ++s) {
    const Mask m = static_cast<Mask>(s);
    const bool comparable =
        std::any_of(chosen.begin(), chosen.end(), [m](Mask c) {
          return (m & c) == m || (m & c) == c;
        });
    if (comparable) continue;
    chosen.push_back(m);
    fn(IndependenceSystem(ground, chosen));
    ExtendAntichain(ground, m + 1, chosen, fn);
    chosen.pop_back();
  }
}

}  // namespace

void ForEachIndependenceSystem(
    int n, const std::function<void(const IndependenceSystem&)>& fn) {
  if (n < 1 || n > kMaxAllSystemsN) {
    throw Error(ErrorCode::kCapability,
                "exhaustive system enumeration supports 1 <= n <= 5");
  }
  const GroundSet ground(n);
  std::vector<Mask> chosen;
  ExtendAntichain(ground, 0, chosen, fn);
}

}  // namespace matapprox
