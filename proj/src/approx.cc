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

#include "matapprox/approx.h"

#include <random>
#include <stdexcept>
#include <tuple>
#include <utility>

#include "matapprox/error.h"
#include "matapprox/instances.h"

namespace matapprox {

AcceptableSet::AcceptableSet(IndependenceSystem host, SetFamily sets)
    : host_(std::move(host)), sets_(std::move(sets)) {
  if (sets_.empty()) {
    throw Error(ErrorCode::kInvalidAcceptableSet, "acceptable set is empty");
  }
  if (!(sets_.ground() == host_.ground())) {
    throw Error(ErrorCode::kInvalidAcceptableSet,
                "acceptable set and system have different ground sets");
  }
  for (Mask s : sets_) {
    if (!host_.IsIndependentUnchecked(s)) {
      throw Error(ErrorCode::kInvalidAcceptableSet,
                  "acceptable set member " + HexMask(s) +
                      " is not independent");
    }
  }
}

AcceptableSet AcceptableSet::AllIndependent(const IndependenceSystem& host) {
  return AcceptableSet(host, SetFamily(host.ground(), IndependentSets(host)));
}

AcceptableSet AcceptableSet::Bases(const IndependenceSystem& host) {
  return AcceptableSet(host, host.maximal());
}

AcceptableSet AcceptableSet::Dagger() const {
  return AcceptableSet(host_, DaggerClosure(host_, sets_));
}

bool IsInner(const IndependenceSystem& sys, const IndependenceSystem& inner) {
  if (!(sys.ground() == inner.ground())) return false;
  for (Mask b : inner.maximal()) {
    if (!sys.IsIndependentUnchecked(b)) return false;
  }
  return true;
}

namespace {

void RequireInner(const AcceptableSet& acceptable,
                  const IndependenceSystem& inner) {
  if (!IsInner(acceptable.host(), inner)) {
    throw Error(ErrorCode::kNotInner,
                "inner system is not contained in the independence system");
  }
}

// Nonempty members ordered by (size, mask), the witness tie-break order.
std::vector<Mask> NonemptyBySize(const SetFamily& sets) {
  std::vector<Mask> out;
  for (Mask s : sets) {
    if (s != 0) out.push_back(s);
  }
  std::stable_sort(out.begin(), out.end(), [](Mask a, Mask b) {
    return Popcount(a) < Popcount(b);
  });
  if (out.empty()) {
    throw Error(ErrorCode::kUndefined,
                "rho undefined: acceptable set has no nonempty member");
  }
  return out;
}

// Smallest basis of s, smallest mask among those.
Mask SmallestBasis(const IndependenceSystem& sys, Mask s) {
  Mask best = 0;
  int best_size = kMaxGroundSize + 1;
  for (Mask b : BasesOf(sys, s)) {
    if (Popcount(b) < best_size) {
      best = b;
      best_size = Popcount(b);
    }
  }
  return best;
}

// min r_M(S) / |S| over `sets` (nonempty, any order).
Rational MatroidRho(const std::vector<Mask>& sets, const Matroid& m) {
  Rational best(1);
  for (Mask s : sets) {
    const Rational ratio(m.Rank(s), Popcount(s));
    if (ratio < best) {
      best = ratio;
      if (best == 0) break;
    }
  }
  return best;
}

struct Ranked {
  Rational rho;
  int rank = 0;
  int support = 0;
  std::size_t bases = 0;

  // Strictly preferred: larger ρ, larger rank, smaller support, more bases.
  bool Beats(const Ranked& o) const {
    return std::make_tuple(rho, rank, -support, bases) >
           std::make_tuple(o.rho, o.rank, -o.support, o.bases);
  }
};

Ranked RankedOf(const Rational& rho, const Matroid& m) {
  return {rho, m.rank(), Popcount(m.Support()), m.bases().size()};
}

}  // namespace

RhoReport Rho(const AcceptableSet& acceptable,
              const IndependenceSystem& inner) {
  RequireInner(acceptable, inner);
  RhoReport best;
  bool have = false;
  for (Mask s : NonemptyBySize(acceptable.sets())) {
    const int lower = LowerRank(inner, s);
    const Rational ratio(lower, Popcount(s));
    if (!have || ratio < best.rho) {
      best = {ratio, s, SmallestBasis(inner, s)};
      have = true;
    }
  }
  return best;
}

RhoReport RhoMatroid(const AcceptableSet& acceptable, const Matroid& inner) {
  RequireInner(acceptable, inner.system());
  RhoReport best;
  bool have = false;
  for (Mask s : NonemptyBySize(acceptable.sets())) {
    const Rational ratio(inner.Rank(s), Popcount(s));
    if (!have || ratio < best.rho) {
      best = {ratio, s, 0};
      have = true;
    }
  }
  best.inner_basis = SmallestBasis(inner.system(), best.argmin);
  if (inner.n() <= 12) {
    const RhoReport check = Rho(acceptable, inner.system());
    if (check.rho != best.rho || check.argmin != best.argmin) {
      throw std::logic_error("rank and lower-rank forms of rho disagree");
    }
  }
  return best;
}

void ForEachInnerMatroid(const IndependenceSystem& sys,
                         const std::function<void(const Matroid&)>& fn) {
  if (sys.n() > kMaxExactN) {
    throw Error(ErrorCode::kCapability,
                "exact inner-matroid enumeration supports n <= 6, got n = " +
                    std::to_string(sys.n()) +
                    "; use the heuristic or export the integer program");
  }
  for (const Matroid& m : AllMatroids(sys.n())) {
    if (IsInner(sys, m.system())) fn(m);
  }
}

std::vector<Matroid> EnumerateInnerMatroids(const IndependenceSystem& sys) {
  std::vector<Matroid> out;
  ForEachInnerMatroid(sys, [&out](const Matroid& m) { out.push_back(m); });
  return out;
}

RhoMaxResult RhoMaxExact(const AcceptableSet& acceptable) {
  const std::vector<Mask> sets = NonemptyBySize(acceptable.sets());
  const Matroid* best = nullptr;
  Ranked best_key;
  ForEachInnerMatroid(acceptable.host(), [&](const Matroid& m) {
    const Ranked key = RankedOf(MatroidRho(sets, m), m);
    if (best == nullptr || key.Beats(best_key)) {
      best = &m;
      best_key = key;
    }
  });
  // The loop matroid is always inner, so `best` is set.
  return {best_key.rho, *best};
}

bool InW(const AcceptableSet& acceptable, const Weights& v) {
  const Rational top = OptimalBasis(acceptable.host(), v).value;
  return MaxWeight(acceptable.sets(), v) == top;
}

std::optional<Rational> InnerRatio(const AcceptableSet& acceptable,
                                   const Matroid& inner, const Weights& v) {
  const Rational denominator = MaxWeight(acceptable.sets(), v);
  if (denominator == 0) return std::nullopt;
  return OptimalBasis(inner.system(), v).value / denominator;
}

MilgromReport VerifyMilgrom(const AcceptableSet& acceptable,
                            const Matroid& inner, int trials,
                            std::uint64_t seed) {
  MilgromReport report;
  report.rho = RhoMatroid(acceptable, inner);
  report.rho_dagger = RhoMatroid(acceptable.Dagger(), inner).rho;

  const GroundSet& ground = acceptable.host().ground();
  const Weights witness = Weights::Indicator(ground, report.rho.argmin);
  report.witness_in_w = InW(acceptable, witness);
  report.witness_ratio = InnerRatio(acceptable, inner, witness).value();

  const auto consider = [&](const Weights& v) {
    ++report.samples;
    if (!InW(acceptable, v)) return;
    const auto ratio = InnerRatio(acceptable, inner, v);
    if (!ratio) return;
    ++report.samples_in_w;
    if (!report.sampled_min || *ratio < *report.sampled_min) {
      report.sampled_min = *ratio;
      report.sampled_argmin = v;
    }
  };

  std::mt19937_64 rng(seed);
  for (int t = 0; t < trials; ++t) consider(RandomWeights(ground, rng));
  if (ground.size() <= 6) {
    std::uint64_t count = 1;
    for (int i = 0; i < ground.size(); ++i) count *= 3;
    for (std::uint64_t code = 1; code < count; ++code) {
      std::vector<Rational> values(ground.size());
      std::uint64_t rest = code;
      for (int i = 0; i < ground.size(); ++i, rest /= 3) {
        values[i] = static_cast<std::int64_t>(rest % 3);
      }
      consider(Weights(ground, std::move(values)));
    }
  }

  report.lower_bound_holds =
      !report.sampled_min || *report.sampled_min >= report.rho.rho;
  report.witness_attains =
      report.witness_in_w && report.witness_ratio == report.rho.rho;
  return report;
}

PerfectMatroidAnswer ExistsPerfectMatroid(const AcceptableSet& acceptable) {
  PerfectMatroidAnswer answer;
  Ranked best_key;
  ForEachInnerMatroid(acceptable.host(), [&](const Matroid& m) {
    for (Mask s : acceptable.sets()) {
      if (!m.system().IsIndependentUnchecked(s)) return;
    }
    const Ranked key = RankedOf(Rational(1), m);
    if (!answer.witness || key.Beats(best_key)) {
      answer.witness = m;
      best_key = key;
    }
  });
  answer.exists = answer.witness.has_value();
  const RhoMaxResult best = RhoMaxExact(acceptable);
  if (answer.exists != (best.rho == 1)) {
    throw std::logic_error(
        "inner-matroid containment and rho^M = 1 disagree");
  }
  answer.reason =
      answer.exists
          ? "inner matroid contains every member of the acceptable set"
          : "no inner matroid contains the downward closure; rho^M = " +
                ToString(best.rho);
  return answer;
}

}  // namespace matapprox
