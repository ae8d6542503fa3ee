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

#include "matapprox/greedy.h"

#include <algorithm>
#include <numeric>
#include <utility>

#include "matapprox/error.h"

namespace matapprox {

Weights::Weights(GroundSet ground, std::vector<Rational> values)
    : ground_(ground), values_(std::move(values)) {
  if (static_cast<int>(values_.size()) != ground_.size()) {
    throw Error(ErrorCode::kInvalidInput,
                "weight vector has " + std::to_string(values_.size()) +
                    " entries for a ground set of size " +
                    std::to_string(ground_.size()));
  }
  for (const Rational& x : values_) {
    if (x < 0) {
      throw Error(ErrorCode::kInvalidInput,
                  "negative weight " + ToString(x));
    }
  }
}

Weights Weights::Indicator(GroundSet ground, Mask s) {
  ground.Validate(s);
  std::vector<Rational> v(ground.size());
  for (int i = 0; i < ground.size(); ++i) v[i] = (s >> i & 1) ? 1 : 0;
  return Weights(ground, std::move(v));
}

Rational Weights::Of(Mask s) const {
  Rational total;
  for (int i = 0; s != 0; ++i, s >>= 1) {
    if (s & 1) total += values_[i];
  }
  return total;
}

bool Weights::IsZero() const {
  return std::all_of(values_.begin(), values_.end(),
                     [](const Rational& x) { return x == 0; });
}

Weights Weights::Scaled(const Rational& factor) const {
  std::vector<Rational> v = values_;
  for (auto& x : v) x *= factor;
  return Weights(ground_, std::move(v));
}

TieBreak::TieBreak(std::vector<int> perm) : perm_(std::move(perm)) {
  std::vector<bool> seen(perm_.size(), false);
  for (int label : perm_) {
    if (label < 1 || label > static_cast<int>(perm_.size()) ||
        seen[label - 1]) {
      throw Error(ErrorCode::kInvalidInput,
                  "tie-break is not a permutation of 1.." +
                      std::to_string(perm_.size()));
    }
    seen[label - 1] = true;
  }
}

TieBreak TieBreak::Identity(int n) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 1);
  return TieBreak(std::move(perm));
}

std::vector<int> ScanOrder(const Weights& v, const TieBreak& tb) {
  if (tb.size() != v.ground().size()) {
    throw Error(ErrorCode::kInvalidInput,
                "tie-break length does not match the ground set");
  }
  std::vector<int> order = tb.perm();
  // Stable: the tie-break order survives among equal weights.
  std::stable_sort(order.begin(), order.end(), [&v](int a, int b) {
    return v.at(a) > v.at(b);
  });
  return order;
}

GreedyResult Greedy(const IndependenceSystem& sys, const Weights& v,
                    const TieBreak& tb) {
  if (!(v.ground() == sys.ground())) {
    throw Error(ErrorCode::kInvalidInput,
                "weights and system have different ground sets");
  }
  GreedyResult result;
  for (int label : ScanOrder(v, tb)) {
    const Mask candidate = result.set | (Mask{1} << (label - 1));
    if (sys.IsIndependentUnchecked(candidate)) {
      result.set = candidate;
      result.value += v.at(label);
    }
  }
  return result;
}

GreedyResult OptimalBasis(const IndependenceSystem& sys, const Weights& v) {
  if (!(v.ground() == sys.ground())) {
    throw Error(ErrorCode::kInvalidInput,
                "weights and system have different ground sets");
  }
  GreedyResult best{sys.maximal().members().front(),
                    v.Of(sys.maximal().members().front())};
  // Members are ascending, so a strict improvement test keeps the smallest
  // mask among ties.
  for (Mask b : sys.maximal()) {
    const Rational value = v.Of(b);
    if (value > best.value) best = {b, value};
  }
  return best;
}

Rational MaxWeight(const SetFamily& family, const Weights& v) {
  Rational best;
  for (Mask s : family) best = std::max(best, v.Of(s));
  return best;
}

Rational GreedyRatio(const IndependenceSystem& sys, const Weights& v,
                     const TieBreak& tb) {
  const GreedyResult optimum = OptimalBasis(sys, v);
  if (optimum.value == 0) {
    throw Error(ErrorCode::kUndefined,
                "greedy ratio undefined: optimal value is 0");
  }
  return Greedy(sys, v, tb).value / optimum.value;
}

}  // namespace matapprox
