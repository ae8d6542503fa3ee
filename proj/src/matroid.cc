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

#include <algorithm>
#include <array>
#include <bit>
#include <mutex>
#include <utility>

#include "matapprox/error.h"

namespace matapprox {

RankTable::RankTable(GroundSet ground, std::vector<int> values)
    : ground_(ground), values_(std::move(values)) {
  if (values_.size() != ground_.num_subsets()) {
    throw Error(ErrorCode::kInvalidInput,
                "rank table needs one value per subset");
  }
}

RankTable RankTable::Of(const IndependenceSystem& sys) {
  const auto indep = IndependenceBitmap(sys);
  std::vector<int> r(indep.size(), 0);
  for (std::uint64_t s = 1; s < indep.size(); ++s) {
    if (indep[s]) {
      r[s] = Popcount(static_cast<Mask>(s));
      continue;
    }
    int best = 0;
    for (Mask rest = static_cast<Mask>(s); rest != 0; rest &= rest - 1) {
      best = std::max(best, r[s & ~(rest & -rest)]);
    }
    r[s] = best;
  }
  return RankTable(sys.ground(), std::move(r));
}

int Rank(const IndependenceSystem& sys, Mask f) {
  sys.ground().Validate(f);
  int best = 0;
  for (Mask b : sys.maximal()) best = std::max(best, Popcount(b & f));
  return best;
}

int LowerRank(const IndependenceSystem& sys, Mask f) {
  int best = kMaxGroundSize + 1;
  for (Mask b : BasesOf(sys, f)) best = std::min(best, Popcount(b));
  return best;
}

bool IsMatroid(const IndependenceSystem& sys) {
  const auto indep = IndependenceBitmap(sys);
  const auto sets = IndependentSets(sys);
  const Mask full = sys.ground().full();
  for (Mask i : sets) {
    Mask extenders = 0;
    for (Mask rest = full & ~i; rest != 0; rest &= rest - 1) {
      const Mask bit = rest & -rest;
      if (indep[i | bit]) extenders |= bit;
    }
    const int size = Popcount(i);
    for (Mask j : sets) {
      if (Popcount(j) > size && (j & ~i & extenders) == 0) return false;
    }
  }
  return true;
}

bool CheckRankAxioms(const RankTable& rt) {
  const int n = rt.ground().size();
  const std::uint64_t size = rt.ground().num_subsets();
  if (rt[0] != 0) return false;
  for (std::uint64_t x = 0; x < size; ++x) {
    const Mask s = static_cast<Mask>(x);
    const int r = rt[s];
    if (r < 0 || r > Popcount(s)) return false;
    for (int j = 0; j < n; ++j) {
      const Mask bj = Mask{1} << j;
      if (s & bj) continue;
      if (r > rt[s | bj]) return false;
      for (int k = j + 1; k < n; ++k) {
        const Mask bk = Mask{1} << k;
        if (s & bk) continue;
        if (rt[s | bj | bk] - rt[s | bj] > rt[s | bk] - r) return false;
      }
    }
  }
  return true;
}

bool CheckBasisExchange(const SetFamily& bases) {
  if (bases.empty()) return false;
  for (Mask b1 : bases) {
    for (Mask b2 : bases) {
      const Mask out = b1 & ~b2;
      for (Mask in = b2 & ~b1; in != 0; in &= in - 1) {
        const Mask i = in & -in;
        bool found = false;
        for (Mask rest = out; rest != 0 && !found; rest &= rest - 1) {
          found = bases.Contains((b1 | i) & ~(rest & -rest));
        }
        if (!found) return false;
      }
    }
  }
  return true;
}

Matroid::Matroid(IndependenceSystem system) : Matroid(std::move(system), true) {
  if (!IsMatroid(system_)) {
    throw Error(ErrorCode::kNotAMatroid,
                "independence system violates the augmentation property");
  }
}

Matroid::Matroid(IndependenceSystem system, bool cache)
    : system_(std::move(system)) {
  if (cache && system_.n() <= kRankCacheMaxN) {
    const std::vector<int> table = RankTable::Of(system_).values();
    rank_cache_.assign(table.begin(), table.end());
  }
}

Matroid Matroid::FromBasesUnchecked(GroundSet ground, std::vector<Mask> bases) {
  return Matroid(IndependenceSystem(ground, std::move(bases)), true);
}

int Matroid::Rank(Mask s) const {
  if (!rank_cache_.empty()) return rank_cache_[s & ground().full()];
  int best = 0;
  for (Mask b : bases()) best = std::max(best, Popcount(b & s));
  return best;
}

int Matroid::rank() const { return Popcount(bases().members().front()); }

Mask Matroid::Support() const {
  Mask m = 0;
  for (Mask b : bases()) m |= b;
  return m;
}

RankTable Matroid::rank_table() const {
  std::vector<int> r(ground().num_subsets());
  for (std::uint64_t s = 0; s < r.size(); ++s) {
    r[s] = Rank(static_cast<Mask>(s));
  }
  return RankTable(ground(), std::move(r));
}

namespace {

// All k-subsets of `elements`, ascending.
std::vector<Mask> KSubsets(Mask elements, int k) {
  std::vector<Mask> out;
  if (k == 0) return {0};
  const int m = Popcount(elements);
  if (k > m) return out;
  // Walk combinations of positions via Gosper's hack, then expand.
  const std::uint64_t limit = std::uint64_t{1} << m;
  for (std::uint64_t c = (std::uint64_t{1} << k) - 1; c < limit;) {
    Mask expanded = 0;
    int pos = 0;
    for (Mask rest = elements; rest != 0; rest &= rest - 1, ++pos) {
      if (c >> pos & 1) expanded |= rest & -rest;
    }
    out.push_back(expanded);
    const std::uint64_t u = c & -c;
    const std::uint64_t v = c + u;
    c = v + (((v ^ c) / u) >> 2);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

Matroid Uniform(GroundSet ground, Mask elements, int k) {
  ground.Validate(elements);
  if (k < 0 || k > Popcount(elements)) {
    throw Error(ErrorCode::kInvalidInput,
                "uniform matroid rank " + std::to_string(k) +
                    " out of range for " + SetString(elements));
  }
  return Matroid::FromBasesUnchecked(ground, KSubsets(elements, k));
}

Matroid FreeMatroid(GroundSet ground) {
  return Matroid::FromBasesUnchecked(ground, {ground.full()});
}

Matroid LoopMatroid(GroundSet ground) {
  return Matroid::FromBasesUnchecked(ground, {0});
}

Matroid DirectSum(const Matroid& a, const Matroid& b) {
  if (!(a.ground() == b.ground())) {
    throw Error(ErrorCode::kInvalidInput, "direct sum needs one ground set");
  }
  if (a.Support() & b.Support()) {
    throw Error(ErrorCode::kInvalidInput,
                "direct sum summands overlap on " +
                    SetString(a.Support() & b.Support()));
  }
  std::vector<Mask> bases;
  bases.reserve(a.bases().size() * b.bases().size());
  for (Mask x : a.bases()) {
    for (Mask y : b.bases()) bases.push_back(x | y);
  }
  return Matroid::FromBasesUnchecked(a.ground(), std::move(bases));
}

Matroid MatroidFromDelta(const IndependenceSystem& sys,
                         const RankTable& delta) {
  if (!(delta.ground() == sys.ground())) {
    throw Error(ErrorCode::kInvalidInput, "delta table ground mismatch");
  }
  const RankTable r = RankTable::Of(sys);
  std::vector<int> adjusted(r.values().size());
  for (std::size_t s = 0; s < adjusted.size(); ++s) {
    const Mask m = static_cast<Mask>(s);
    if (delta[m] < 0 || delta[m] > r[m]) {
      throw Error(ErrorCode::kNotAMatroid,
                  "delta out of bounds at " + HexMask(m));
    }
    adjusted[s] = r[m] - delta[m];
  }
  const RankTable rt(sys.ground(), std::move(adjusted));
  if (!CheckRankAxioms(rt)) {
    throw Error(ErrorCode::kNotAMatroid,
                "r - delta violates the matroid rank axioms");
  }
  std::vector<Mask> independent;
  for (std::size_t s = 0; s < rt.values().size(); ++s) {
    const Mask m = static_cast<Mask>(s);
    if (rt[m] == Popcount(m)) independent.push_back(m);
  }
  return Matroid::FromBasesUnchecked(sys.ground(),
                                     MaximalMembers(std::move(independent)));
}

namespace {

// Exchange check for a family given as a bitset over `candidates`; `index`
// maps a mask to its candidate position or -1.
bool ExchangeClosed(std::uint32_t family, const std::vector<Mask>& candidates,
                    const std::vector<int>& index) {
  const auto contains = [&](Mask m) {
    const int i = index[m];
    return i >= 0 && (family >> i & 1);
  };
  for (std::uint32_t fa = family; fa != 0; fa &= fa - 1) {
    const Mask b1 = candidates[std::countr_zero(fa)];
    for (std::uint32_t fb = family; fb != 0; fb &= fb - 1) {
      const Mask b2 = candidates[std::countr_zero(fb)];
      const Mask out = b1 & ~b2;
      for (Mask in = b2 & ~b1; in != 0; in &= in - 1) {
        const Mask i = in & -in;
        bool found = false;
        for (Mask rest = out; rest != 0 && !found; rest &= rest - 1) {
          found = contains((b1 | i) & ~(rest & -rest));
        }
        if (!found) return false;
      }
    }
  }
  return true;
}

std::vector<Matroid> BuildCatalog(int n) {
  const GroundSet ground(n);
  std::vector<int> index(ground.num_subsets(), -1);
  std::vector<Matroid> out;
  for (int k = 0; k <= n; ++k) {
    const std::vector<Mask> candidates = KSubsets(ground.full(), k);
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      index[candidates[i]] = static_cast<int>(i);
    }
    std::vector<std::vector<Mask>> families;
    const std::uint64_t limit = std::uint64_t{1} << candidates.size();
    for (std::uint64_t f = 1; f < limit; ++f) {
      const auto family = static_cast<std::uint32_t>(f);
      if (!ExchangeClosed(family, candidates, index)) continue;
      std::vector<Mask> bases;
      for (std::uint32_t rest = family; rest != 0; rest &= rest - 1) {
        bases.push_back(candidates[std::countr_zero(rest)]);
      }
      families.push_back(std::move(bases));
    }
    std::sort(families.begin(), families.end());
    for (auto& bases : families) {
      out.push_back(Matroid::FromBasesUnchecked(ground, std::move(bases)));
    }
    for (Mask c : candidates) index[c] = -1;
  }
  return out;
}

}  // namespace

const std::vector<Matroid>& AllMatroids(int n) {
  if (n < 0 || n > kMaxCatalogN) {
    throw Error(ErrorCode::kCapability,
                "exhaustive matroid enumeration supports n <= 6, got " +
                    std::to_string(n));
  }
  static std::array<std::once_flag, kMaxCatalogN + 1> once;
  static std::array<std::vector<Matroid>, kMaxCatalogN + 1> catalogs;
  std::call_once(once[n], [n] { catalogs[n] = BuildCatalog(n); });
  return catalogs[n];
}

}  // namespace matapprox
