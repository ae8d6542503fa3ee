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

// Lower bounds on ρ^M by local search. Candidates are partition matroids
// first, since their rank is a closed form and inner-ness only needs the
// bases; the best one is then perturbed through its basis family.

#include <algorithm>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <tuple>
#include <utility>
#include <vector>

#include "matapprox/approx.h"
#include "matapprox/error.h"
#include "matapprox/instances.h"

namespace matapprox {
namespace {

// Enumerations of more bases than this count as "not inner".
constexpr std::uint64_t kMaxBasesChecked = std::uint64_t{1} << 16;
constexpr int kBitmapMaxN = 20;
constexpr std::size_t kMaxBasisPhaseBases = 2048;

class HostOracle {
 public:
  explicit HostOracle(const IndependenceSystem& host) : host_(host) {
    if (host.n() <= kBitmapMaxN) bitmap_ = IndependenceBitmap(host);
  }
  bool Independent(Mask s) const {
    return bitmap_.empty() ? host_.IsIndependentUnchecked(s) : bitmap_[s] != 0;
  }

 private:
  const IndependenceSystem& host_;
  std::vector<std::uint8_t> bitmap_;
};

std::uint64_t Binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t out = 1;
  for (int i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return out;
}

struct Partition {
  // block_of[i] is a block id in [0, n) or -1 for a loop.
  std::vector<int> block_of;
  std::vector<int> cap;

  std::vector<Mask> BlockMasks() const {
    std::vector<Mask> masks(cap.size(), 0);
    for (std::size_t i = 0; i < block_of.size(); ++i) {
      if (block_of[i] >= 0) masks[block_of[i]] |= Mask{1} << i;
    }
    return masks;
  }

  // Caps clamped to [1, |block|]; empty blocks keep their cap untouched.
  void Normalize() {
    const std::vector<Mask> masks = BlockMasks();
    for (std::size_t b = 0; b < cap.size(); ++b) {
      const int size = Popcount(masks[b]);
      if (size > 0) cap[b] = std::clamp(cap[b], 1, size);
    }
  }

  int RankOf(const std::vector<Mask>& masks, Mask s) const {
    int r = 0;
    for (std::size_t b = 0; b < masks.size(); ++b) {
      if (masks[b]) r += std::min(Popcount(s & masks[b]), cap[b]);
    }
    return r;
  }
};

// Every basis (one cap-subset per block) independent in the host.
bool PartitionIsInner(const Partition& p, const HostOracle& host) {
  const std::vector<Mask> masks = p.BlockMasks();
  std::vector<std::pair<Mask, int>> blocks;
  std::uint64_t count = 1;
  for (std::size_t b = 0; b < masks.size(); ++b) {
    if (!masks[b]) continue;
    blocks.emplace_back(masks[b], p.cap[b]);
    count *= Binomial(Popcount(masks[b]), p.cap[b]);
    if (count > kMaxBasesChecked) return false;
  }
  // Depth-first over blocks with pruning on the partial union.
  std::vector<Mask> partial{0};
  for (const auto& [mask, k] : blocks) {
    std::vector<Mask> next;
    const std::vector<int> elems = ElementsOf(mask);
    const int m = static_cast<int>(elems.size());
    for (std::uint32_t pick = (1u << k) - 1; pick < (1u << m);) {
      Mask chosen = 0;
      for (int j = 0; j < m; ++j) {
        if (pick >> j & 1) chosen |= Mask{1} << (elems[j] - 1);
      }
      for (Mask base : partial) {
        const Mask s = base | chosen;
        if (!host.Independent(s)) return false;
        next.push_back(s);
      }
      const std::uint32_t c = pick & -pick;
      const std::uint32_t r = pick + c;
      pick = (((r ^ pick) >> 2) / c) | r;
    }
    partial = std::move(next);
  }
  return true;
}

// (ρ, sum of ratios). The sum only breaks ties between equal ρ and lets the
// search walk off plateaus.
struct Score {
  Rational rho;
  Rational total;
  bool operator<(const Score& o) const {
    return std::tie(rho, total) < std::tie(o.rho, o.total);
  }
  bool operator<=(const Score& o) const { return !(o < *this); }
};

template <typename RankFn>
Score ScoreOf(const std::vector<Mask>& sets, RankFn rank) {
  Score s{Rational(1), Rational(0)};
  for (Mask m : sets) {
    const Rational ratio(rank(m), Popcount(m));
    s.total += ratio;
    if (ratio < s.rho) s.rho = ratio;
  }
  return s;
}

Matroid ToMatroid(const GroundSet& ground, const Partition& p) {
  const std::vector<Mask> masks = p.BlockMasks();
  std::vector<Mask> blocks;
  std::vector<int> caps;
  for (std::size_t b = 0; b < masks.size(); ++b) {
    if (!masks[b]) continue;
    blocks.push_back(masks[b]);
    caps.push_back(p.cap[b]);
  }
  return PartitionMatroid(ground, blocks, caps);
}

int RandomInt(std::mt19937_64& rng, int n) {
  return static_cast<int>(rng() % static_cast<std::uint64_t>(n));
}

Partition Mutate(const Partition& p, std::mt19937_64& rng) {
  Partition q = p;
  const int n = static_cast<int>(q.block_of.size());
  const int e = RandomInt(rng, n);
  const std::vector<Mask> masks = q.BlockMasks();
  std::vector<int> used, unused;
  for (int b = 0; b < n; ++b) (masks[b] ? used : unused).push_back(b);
  switch (RandomInt(rng, 6)) {
    case 0:  // Move to an existing block.
      if (!used.empty()) q.block_of[e] = used[RandomInt(rng, used.size())];
      break;
    case 1:  // Move to a fresh block.
      if (!unused.empty()) {
        const int b = unused[RandomInt(rng, unused.size())];
        q.block_of[e] = b;
        q.cap[b] = 1;
      }
      break;
    case 2:
      q.block_of[e] = -1;
      break;
    case 3:
    case 4:
      if (!used.empty()) {
        const int b = used[RandomInt(rng, used.size())];
        q.cap[b] += RandomInt(rng, 2) == 0 ? 1 : -1;
      }
      break;
    default:
      if (used.size() >= 2 && RandomInt(rng, 2) == 0) {  // Merge.
        const int a = used[RandomInt(rng, used.size())];
        const int b = used[RandomInt(rng, used.size())];
        if (a != b) {
          for (int& x : q.block_of) {
            if (x == b) x = a;
          }
          q.cap[a] = std::max(q.cap[a], q.cap[b]);
        }
      } else if (!used.empty() && !unused.empty()) {  // Split.
        const int a = used[RandomInt(rng, used.size())];
        const int b = unused.front();
        q.cap[b] = 1;
        for (int& x : q.block_of) {
          if (x == a && RandomInt(rng, 2) == 0) x = b;
        }
      }
      break;
  }
  q.Normalize();
  return q;
}

struct Candidate {
  Score score;
  int rank = 0;
  Matroid matroid;
};

bool Better(const Score& s, int rank, const Candidate& c) {
  return std::tie(s.rho, rank) > std::tie(c.score.rho, c.rank);
}

}  // namespace

RhoMaxResult RhoMaxHeuristic(const AcceptableSet& acceptable, int budget,
                             std::uint64_t seed) {
  if (budget < 0) {
    throw Error(ErrorCode::kInvalidInput, "budget must be nonnegative");
  }
  const IndependenceSystem& host = acceptable.host();
  const GroundSet ground = host.ground();
  const int n = ground.size();
  std::vector<Mask> sets;
  for (Mask s : acceptable.sets()) {
    if (s != 0) sets.push_back(s);
  }
  if (sets.empty()) {
    throw Error(ErrorCode::kUndefined,
                "rho undefined: acceptable set has no nonempty member");
  }
  const HostOracle oracle(host);
  std::mt19937_64 rng(seed);

  const Matroid loops = LoopMatroid(ground);
  Candidate best{ScoreOf(sets, [](Mask) { return 0; }), 0, loops};
  auto offer = [&best](const Score& s, int rank, const Matroid& m) {
    if (Better(s, rank, best)) best = {s, rank, m};
  };

  // Uniform matroids over greedily grown subsets, elements ordered by how
  // often they occur in 𝓞.
  std::vector<int> order;
  {
    std::vector<int> freq(n, 0);
    for (Mask s : sets) {
      for (int e : ElementsOf(s)) ++freq[e - 1];
    }
    for (int e = 1; e <= n; ++e) order.push_back(e);
    std::stable_sort(order.begin(), order.end(),
                     [&freq](int a, int b) { return freq[a - 1] > freq[b - 1]; });
  }
  int max_size = 0;
  for (Mask b : host.maximal()) max_size = std::max(max_size, Popcount(b));
  for (int k = 1; k <= max_size; ++k) {
    Partition p{std::vector<int>(n, -1), std::vector<int>(n, 1)};
    p.cap[0] = k;
    for (int e : order) {
      Partition trial = p;
      trial.block_of[e - 1] = 0;
      trial.cap[0] = k;
      trial.Normalize();
      if (PartitionIsInner(trial, oracle)) p = trial;
    }
    const std::vector<Mask> masks = p.BlockMasks();
    const Score s = ScoreOf(sets, [&](Mask m) { return p.RankOf(masks, m); });
    offer(s, p.RankOf(masks, ground.full()), ToMatroid(ground, p));
  }

  // Partition local search from two starts: all loops, and U^1 on the
  // non-loops.
  const int partition_budget = budget - budget / 4;
  for (int start = 0; start < 2; ++start) {
    Partition cur{std::vector<int>(n, -1), std::vector<int>(n, 1)};
    if (start == 1) {
      for (int e = 0; e < n; ++e) {
        if (oracle.Independent(Mask{1} << e)) cur.block_of[e] = 0;
      }
    }
    auto score_of = [&sets](const Partition& p) {
      const std::vector<Mask> masks = p.BlockMasks();
      return ScoreOf(sets, [&](Mask m) { return p.RankOf(masks, m); });
    };
    Score cur_score = score_of(cur);
    for (int step = 0; step < partition_budget / 2; ++step) {
      Partition next = Mutate(cur, rng);
      if (!PartitionIsInner(next, oracle)) continue;
      const Score s = score_of(next);
      if (cur_score <= s) {
        cur = std::move(next);
        cur_score = s;
        const int rank = cur.RankOf(cur.BlockMasks(), ground.full());
        if (Better(cur_score, rank, best)) {
          best = {cur_score, rank, ToMatroid(ground, cur)};
        }
      }
    }
  }

  // Basis-family moves on the best candidate, kept exchange-closed and
  // inside the host.
  if (best.matroid.bases().size() <= kMaxBasisPhaseBases && best.rank > 0) {
    const int r = best.rank;
    std::vector<Mask> large;
    for (Mask b : host.maximal()) {
      if (Popcount(b) >= r) large.push_back(b);
    }
    std::vector<Mask> cur = best.matroid.bases().members();
    Score cur_score = best.score;
    for (int step = 0; step < budget / 4 && !large.empty(); ++step) {
      std::vector<Mask> next = cur;
      const int kind = RandomInt(rng, 3);
      if (kind != 1 && next.size() > 1) {
        next.erase(next.begin() + RandomInt(rng, next.size()));
      }
      if (kind != 0) {
        // A random r-subset of a random large maximal set.
        std::vector<int> elems =
            ElementsOf(large[RandomInt(rng, large.size())]);
        std::shuffle(elems.begin(), elems.end(), rng);
        Mask fresh = 0;
        for (int i = 0; i < r; ++i) fresh |= Mask{1} << (elems[i] - 1);
        if (std::find(next.begin(), next.end(), fresh) == next.end()) {
          next.push_back(fresh);
        }
      }
      if (next.size() > kMaxBasisPhaseBases) continue;
      const SetFamily family(ground, next);
      if (family.members() == SetFamily(ground, cur).members()) continue;
      if (!CheckBasisExchange(family)) continue;
      const Matroid m = Matroid::FromBasesUnchecked(ground, family.members());
      const Score s = ScoreOf(sets, [&m](Mask x) { return m.Rank(x); });
      if (cur_score <= s) {
        cur = family.members();
        cur_score = s;
        offer(s, r, m);
      }
    }
  }

  // Re-verify the witness before certifying its value.
  if (!CheckBasisExchange(best.matroid.bases())) {
    throw std::logic_error("heuristic produced a non-matroid");
  }
  return {RhoMatroid(acceptable, best.matroid).rho, best.matroid};
}

}  // namespace matapprox
