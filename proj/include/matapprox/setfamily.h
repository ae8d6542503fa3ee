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

#ifndef MATAPPROX_SETFAMILY_H_
#define MATAPPROX_SETFAMILY_H_

// Ground sets, subsets as bitmasks, and independence systems stored by their
// inclusion-maximal independent sets.
//
// Elements are labeled 1..n at every public boundary (file formats, the CLI,
// the helpers MaskOf / ElementsOf); element i occupies bit i-1 of a Mask.

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace matapprox {

using Mask = std::uint32_t;

inline constexpr int kMaxGroundSize = 24;

int Popcount(Mask m);
Mask MaskOf(std::initializer_list<int> elements);
Mask MaskOf(const std::vector<int>& elements);
std::vector<int> ElementsOf(Mask m);
// Lowercase hex with a 0x prefix and no leading zeros ("0x0" for the empty
// set).
std::string HexMask(Mask m);
// Human-readable "{1,3,5}".
std::string SetString(Mask m);

// Packs the bits of `s` that lie inside `support` into the low positions,
// preserving order.
Mask Compress(Mask s, Mask support);

class GroundSet {
 public:
  // 0 <= n <= kMaxGroundSize. The empty ground set only arises from
  // restricting to the empty set.
  explicit GroundSet(int n);

  int size() const { return n_; }
  Mask full() const { return (Mask{1} << n_) - 1; }
  std::uint64_t num_subsets() const { return std::uint64_t{1} << n_; }
  bool Contains(Mask s) const { return (s & ~full()) == 0; }
  // Throws Error(kInvalidInput) when `s` has bits outside the ground set.
  void Validate(Mask s) const;
  // 1-based label -> single-bit mask; throws on out-of-range labels.
  Mask Element(int label) const;

  friend bool operator==(const GroundSet&, const GroundSet&) = default;

 private:
  int n_;
};

// A sorted, duplicate-free list of subsets of one ground set.
class SetFamily {
 public:
  SetFamily(GroundSet ground, std::vector<Mask> members);

  const GroundSet& ground() const { return ground_; }
  const std::vector<Mask>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  bool Contains(Mask s) const;

  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  friend bool operator==(const SetFamily&, const SetFamily&) = default;

 private:
  GroundSet ground_;
  std::vector<Mask> members_;
};

// Inclusion-maximal members of `sets`, sorted ascending.
std::vector<Mask> MaximalMembers(std::vector<Mask> sets);

// An independence system in canonical form: the antichain of its maximal
// independent sets (the bases of E). S is independent iff it is a subset of
// some member, so the hereditary property holds by construction.
class IndependenceSystem {
 public:
  // `maximal` must be an antichain of valid masks; an empty list is
  // normalized to {∅}. Throws Error(kInvalidInput) otherwise.
  IndependenceSystem(GroundSet ground, std::vector<Mask> maximal);

  const GroundSet& ground() const { return maximal_.ground(); }
  int n() const { return ground().size(); }
  const SetFamily& maximal() const { return maximal_; }

  // Throws on out-of-range masks.
  bool IsIndependent(Mask s) const;
  // Same test without range validation, for inner loops.
  bool IsIndependentUnchecked(Mask s) const;

  friend bool operator==(const IndependenceSystem&,
                         const IndependenceSystem&) = default;

 private:
  SetFamily maximal_;
};

// The system whose independent sets are exactly the subsets of members of
// `family` (all of them, not only maximal ones).
IndependenceSystem HereditaryClosure(const SetFamily& family);

bool IsNormal(const IndependenceSystem& sys);

// Element `label` removed; labels above it shift down by one.
IndependenceSystem Delete(const IndependenceSystem& sys, int label);

// Restriction to F, relabeled onto 1..|F| in increasing label order.
IndependenceSystem Restrict(const IndependenceSystem& sys, Mask f);

// Inclusion-maximal independent subsets of F. These are exactly the maximal
// sets among {B ∩ F : B maximal in sys}.
SetFamily BasesOf(const IndependenceSystem& sys, Mask f);

// Dense table over all 2^n masks: 1 iff independent.
std::vector<std::uint8_t> IndependenceBitmap(const IndependenceSystem& sys);

// Every independent set, ascending.
std::vector<Mask> IndependentSets(const IndependenceSystem& sys);

// Minimal dependent sets, ascending.
SetFamily Circuits(const IndependenceSystem& sys);

// max over independent A and e ∉ A of the number of circuits inside A ∪ {e};
// 0 when every set is independent.
int MaxCircuitsOnAugment(const IndependenceSystem& sys);

// All subsets of members of `acceptable` (∅ included). Throws
// Error(kInvalidAcceptableSet) if some member is dependent in `sys`.
SetFamily DaggerClosure(const IndependenceSystem& sys,
                        const SetFamily& acceptable);

}  // namespace matapprox

#endif  // MATAPPROX_SETFAMILY_H_
