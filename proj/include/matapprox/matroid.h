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

#ifndef MATAPPROX_MATROID_H_
#define MATAPPROX_MATROID_H_

// Rank functions, matroid recognition and the matroid constructors used
// throughout the library.
//
// Three independent recognizers are provided so they can validate each
// other: the augmentation property (IsMatroid), the rank axioms
// (CheckRankAxioms) and basis exchange (CheckBasisExchange).

#include <cstdint>
#include <vector>

#include "matapprox/setfamily.h"

namespace matapprox {

// One integer per subset of the ground set, indexed by mask.
class RankTable {
 public:
  // values.size() must equal 2^n.
  RankTable(GroundSet ground, std::vector<int> values);

  // r(F) = size of the largest independent subset of F, for every F.
  static RankTable Of(const IndependenceSystem& sys);

  const GroundSet& ground() const { return ground_; }
  int operator[](Mask s) const { return values_[s]; }
  const std::vector<int>& values() const { return values_; }

  friend bool operator==(const RankTable&, const RankTable&) = default;

 private:
  GroundSet ground_;
  std::vector<int> values_;
};

// max |B| over bases B of F.
int Rank(const IndependenceSystem& sys, Mask f);
// min |B| over bases B of F.
int LowerRank(const IndependenceSystem& sys, Mask f);

// Augmentation: for all independent I, J with |I| < |J| some j ∈ J \ I keeps
// I ∪ {j} independent. Checked over all pairs.
bool IsMatroid(const IndependenceSystem& sys);

// (R1) 0 <= r(X) <= |X| and r(∅) = 0; (R2) r(X) <= r(X ∪ j) for every cover;
// (R3) r(S ∪ j ∪ k) - r(S ∪ j) <= r(S ∪ k) - r(S) for all S and j, k ∉ S.
// The cover and local forms imply monotonicity and submodularity for all
// pairs X, Y (induct on |Y \ X|), so this is the full axiom system.
bool CheckRankAxioms(const RankTable& rt);

// For all B1, B2 and i ∈ B2 \ B1 there is j ∈ B1 \ B2 with
// (B1 ∪ i) \ j ∈ bases. False for an empty family.
bool CheckBasisExchange(const SetFamily& bases);

class Matroid {
 public:
  // Throws Error(kNotAMatroid) when the augmentation property fails.
  explicit Matroid(IndependenceSystem system);

  // For constructions that are matroids by construction; no check.
  static Matroid FromBasesUnchecked(GroundSet ground, std::vector<Mask> bases);

  const IndependenceSystem& system() const { return system_; }
  const SetFamily& bases() const { return system_.maximal(); }
  const GroundSet& ground() const { return system_.ground(); }
  int n() const { return system_.n(); }

  // r_M(S); rank equals lower rank in a matroid.
  int Rank(Mask s) const;
  int rank() const;
  // Union of all bases, i.e. the elements that are not loops.
  Mask Support() const;
  RankTable rank_table() const;

  friend bool operator==(const Matroid& a, const Matroid& b) {
    return a.system_ == b.system_;
  }

 private:
  Matroid(IndependenceSystem system, bool cache);

  IndependenceSystem system_;
  // Filled for n <= kRankCacheMaxN; otherwise ranks come from the bases.
  std::vector<std::uint8_t> rank_cache_;
};

inline constexpr int kRankCacheMaxN = 12;

// U^k over `elements`, embedded in `ground`; elements outside are loops.
// Throws Error(kInvalidInput) unless 0 <= k <= |elements|.
Matroid Uniform(GroundSet ground, Mask elements, int k);
Matroid FreeMatroid(GroundSet ground);
Matroid LoopMatroid(GroundSet ground);

// Independent sets are unions of one independent set of each summand. The
// supports must be disjoint.
Matroid DirectSum(const Matroid& a, const Matroid& b);

// The matroid whose rank function is r - delta, with r the rank function of
// `sys`. Its independent sets {F : r(F) - delta(F) = |F|} lie inside sys,
// since r(F) = |F| already forces F ∈ sys. Throws Error(kNotAMatroid) when
// delta is out of bounds or r - delta violates the rank axioms.
Matroid MatroidFromDelta(const IndependenceSystem& sys,
                         const RankTable& delta);

inline constexpr int kMaxCatalogN = 6;

// Every matroid on a ground set of n <= 6 labeled elements (loops allowed),
// ordered by rank, then by the ascending list of bases. Built once per n by
// filtering all equal-cardinality families through CheckBasisExchange.
const std::vector<Matroid>& AllMatroids(int n);

}  // namespace matapprox

#endif  // MATAPPROX_MATROID_H_
