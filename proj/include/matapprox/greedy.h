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

#ifndef MATAPPROX_GREEDY_H_
#define MATAPPROX_GREEDY_H_

#include <vector>

#include "matapprox/rational.h"
#include "matapprox/setfamily.h"

namespace matapprox {

// Nonnegative exact weights, one per element.
class Weights {
 public:
  // Throws Error(kInvalidInput) on a length mismatch or a negative entry.
  Weights(GroundSet ground, std::vector<Rational> values);

  static Weights Indicator(GroundSet ground, Mask s);

  const GroundSet& ground() const { return ground_; }
  const std::vector<Rational>& values() const { return values_; }
  // 1-based element label.
  const Rational& at(int label) const { return values_.at(label - 1); }

  // v(S).
  Rational Of(Mask s) const;
  bool IsZero() const;
  Weights Scaled(const Rational& factor) const;

 private:
  GroundSet ground_;
  std::vector<Rational> values_;
};

// Exogenous tie-breaking rule: among equal weights, elements listed earlier
// in `perm` are scanned first.
class TieBreak {
 public:
  // `perm` must be a permutation of 1..perm.size().
  explicit TieBreak(std::vector<int> perm);

  static TieBreak Identity(int n);

  const std::vector<int>& perm() const { return perm_; }
  int size() const { return static_cast<int>(perm_.size()); }

 private:
  std::vector<int> perm_;
};

struct GreedyResult {
  Mask set = 0;
  Rational value;
};

// Element labels in scan order: weight descending, then tie-break position.
std::vector<int> ScanOrder(const Weights& v, const TieBreak& tb);

// Scan elements in ScanOrder and keep each one whose addition stays
// independent. The result is a basis of E.
GreedyResult Greedy(const IndependenceSystem& sys, const Weights& v,
                    const TieBreak& tb);

// Exhaustive maximum of v over the bases of E; ties go to the smallest mask.
GreedyResult OptimalBasis(const IndependenceSystem& sys, const Weights& v);

// max over members of v(S); 0 for a family holding only ∅.
Rational MaxWeight(const SetFamily& family, const Weights& v);

// v(I_g) / v(I_o). Throws Error(kUndefined) when v(I_o) = 0.
Rational GreedyRatio(const IndependenceSystem& sys, const Weights& v,
                     const TieBreak& tb);

}  // namespace matapprox

#endif  // MATAPPROX_GREEDY_H_
