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

#include "matapprox/quotient.h"

#include <algorithm>
#include <optional>
#include <tuple>
#include <utility>
#include <vector>

#include "matapprox/error.h"
#include "matapprox/parallel.h"

namespace matapprox {

namespace {

struct Candidate {
  Rational q;
  int size = 0;
  Mask mask = 0;
  int l = 0;
  int r = 0;

  bool Beats(const Candidate& other) const {
    return std::tie(q, size, mask) < std::tie(other.q, other.size, other.mask);
  }
};

// Rank and lower rank of f from the maximal sets; `parts` is scratch space.
std::pair<int, int> LowerAndUpper(const IndependenceSystem& sys, Mask f,
                                  std::vector<Mask>& parts) {
  parts.clear();
  int r = 0;
  for (Mask b : sys.maximal()) {
    parts.push_back(b & f);
    r = std::max(r, Popcount(b & f));
  }
  if (r == Popcount(f)) return {r, r};
  int l = r;
  for (Mask p : parts) {
    const int size = Popcount(p);
    if (size >= l) continue;
    const bool maximal = std::none_of(parts.begin(), parts.end(), [p](Mask o) {
      return o != p && (p & o) == p;
    });
    if (maximal) l = size;
  }
  return {l, r};
}

}  // namespace

QuotientReport RankQuotient(const IndependenceSystem& sys) {
  const std::uint64_t total = sys.ground().num_subsets();
  constexpr std::uint64_t kChunk = 1 << 12;
  const std::size_t chunks = (total + kChunk - 1) / kChunk;
  std::vector<std::optional<Candidate>> best(chunks);
  ParallelFor(chunks, [&](std::size_t c) {
    std::vector<Mask> parts;
    const std::uint64_t end = std::min(total, (c + 1) * kChunk);
    for (std::uint64_t s = std::max<std::uint64_t>(1, c * kChunk); s < end;
         ++s) {
      const Mask f = static_cast<Mask>(s);
      const auto [l, r] = LowerAndUpper(sys, f, parts);
      if (r == 0) continue;
      Candidate cand{Rational(l, r), Popcount(f), f, l, r};
      if (!best[c] || cand.Beats(*best[c])) best[c] = cand;
    }
  });
  std::optional<Candidate> overall;
  for (const auto& b : best) {
    if (b && (!overall || b->Beats(*overall))) overall = b;
  }
  if (!overall) {
    throw Error(ErrorCode::kUndefined,
                "rank quotient undefined: every element is a loop");
  }
  return {overall->q, overall->mask, overall->l, overall->r};
}

TightInstance TightWeightsFor(const IndependenceSystem& sys, Mask f) {
  const GroundSet& ground = sys.ground();
  ground.Validate(f);
  const SetFamily bases = BasesOf(sys, f);
  Mask smallest = bases.members().front();
  int upper = 0;
  for (Mask b : bases) {
    if (Popcount(b) < Popcount(smallest)) smallest = b;
    upper = std::max(upper, Popcount(b));
  }
  if (upper == 0) {
    throw Error(ErrorCode::kUndefined,
                "no tight weights: " + SetString(f) + " has rank 0");
  }
  const Rational target(Popcount(smallest), upper);
  const Weights v = Weights::Indicator(ground, f);

  const auto order_of = [&](const std::vector<int>& front) {
    std::vector<int> perm = front;
    for (int label : ElementsOf(ground.full() & ~f)) perm.push_back(label);
    return TieBreak(std::move(perm));
  };

  std::vector<int> front = ElementsOf(smallest);
  for (int label : ElementsOf(f & ~smallest)) front.push_back(label);
  TieBreak tb = order_of(front);
  if (GreedyRatio(sys, v, tb) == target) return {v, tb, target};

  // Exhaustive fallback over orders of the weight-1 elements.
  constexpr int kMaxSearch = 10;
  std::vector<int> labels = ElementsOf(f);
  if (static_cast<int>(labels.size()) <= kMaxSearch) {
    do {
      tb = order_of(labels);
      if (GreedyRatio(sys, v, tb) == target) return {v, tb, target};
    } while (std::next_permutation(labels.begin(), labels.end()));
  }
  throw Error(ErrorCode::kNotFound,
              "no tie-break attains l/r on " + SetString(f));
}

TightInstance TightWeights(const IndependenceSystem& sys) {
  return TightWeightsFor(sys, RankQuotient(sys).witness);
}

CircuitBoundReport CircuitBound(const IndependenceSystem& sys) {
  const int p = MaxCircuitsOnAugment(sys);
  return {p, p <= 1 ? Rational(1) : Rational(1, p)};
}

}  // namespace matapprox
