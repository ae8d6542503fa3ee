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

#ifndef MATAPPROX_APPROX_H_
#define MATAPPROX_APPROX_H_

// Inner-matroid approximation of an independence system relative to an
// acceptable set 𝓞 of candidate optima: the approximation quality ρ, the
// substitutability index ρ^M (its maximum over inner matroids), weight-class
// membership and an empirical check of the min-ratio characterization of ρ.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "matapprox/greedy.h"
#include "matapprox/matroid.h"
#include "matapprox/rational.h"
#include "matapprox/setfamily.h"

namespace matapprox {

// A nonempty family of independent sets of `host`. It need not be closed
// under taking subsets.
class AcceptableSet {
 public:
  // Throws Error(kInvalidAcceptableSet) if `sets` is empty, lives on another
  // ground set, or has a member that is dependent in `host`.
  AcceptableSet(IndependenceSystem host, SetFamily sets);

  // 𝓞 = 𝓘, every independent set.
  static AcceptableSet AllIndependent(const IndependenceSystem& host);
  // 𝓞 = 𝓑, the bases of E.
  static AcceptableSet Bases(const IndependenceSystem& host);

  const IndependenceSystem& host() const { return host_; }
  const SetFamily& sets() const { return sets_; }

  // O†, the downward closure.
  AcceptableSet Dagger() const;

 private:
  IndependenceSystem host_;
  SetFamily sets_;
};

// rho = |inner_basis| / |argmin|, with inner_basis a smallest basis of
// argmin in the inner system.
struct RhoReport {
  Rational rho;
  Mask argmin = 0;
  Mask inner_basis = 0;
};

// Every independent set of `inner` is independent in `sys`.
bool IsInner(const IndependenceSystem& sys, const IndependenceSystem& inner);

// min over nonempty S ∈ 𝓞 of l_J(S) / |S|; ties go to the smallest |S|, then
// the smallest mask. Throws Error(kNotInner) when J is not inside the host
// and Error(kUndefined) when 𝓞 = {∅}.
RhoReport Rho(const AcceptableSet& acceptable, const IndependenceSystem& inner);

// Same quantity through r_M(S) / |S|. Cross-checks against Rho for ground
// sets of up to 12 elements and throws std::logic_error on disagreement.
RhoReport RhoMatroid(const AcceptableSet& acceptable, const Matroid& inner);

inline constexpr int kMaxExactN = kMaxCatalogN;

// Calls fn on every matroid whose independent sets are independent in
// `sys`, in catalog order (rank, then ascending bases). Throws
// Error(kCapability) for n > 6.
void ForEachInnerMatroid(const IndependenceSystem& sys,
                         const std::function<void(const Matroid&)>& fn);
std::vector<Matroid> EnumerateInnerMatroids(const IndependenceSystem& sys);

struct RhoMaxResult {
  Rational rho;
  Matroid best;
};

// Exact ρ^M by enumeration (n <= 6). Among maximizers the witness has the
// largest rank, then the smallest support, then the most bases, then comes
// first in catalog order.
RhoMaxResult RhoMaxExact(const AcceptableSet& acceptable);

// Certified lower bound on ρ^M for any n <= 24: local search over partition
// matroids followed by add/remove/swap moves on the basis family. Fully
// determined by `seed`; `budget` bounds the number of moves tried. Never
// worse than the loop matroid or the best uniform-over-subset candidate.
RhoMaxResult RhoMaxHeuristic(const AcceptableSet& acceptable, int budget,
                             std::uint64_t seed);

// Some member of 𝓞 attains max over 𝓘 of v(I). The test is on the ray of v,
// so v needs no normalization; v = 0 is a member.
bool InW(const AcceptableSet& acceptable, const Weights& v);

// V*(M, v) / V*(𝓞, v); std::nullopt when V*(𝓞, v) = 0.
std::optional<Rational> InnerRatio(const AcceptableSet& acceptable,
                                   const Matroid& inner, const Weights& v);

struct MilgromReport {
  RhoReport rho;
  // ρ(𝓘, O†, M), reported alongside for reference.
  Rational rho_dagger;
  std::size_t samples = 0;
  std::size_t samples_in_w = 0;
  std::optional<Rational> sampled_min;
  std::optional<Weights> sampled_argmin;
  bool witness_in_w = false;
  Rational witness_ratio;
  bool lower_bound_holds = false;
  bool witness_attains = false;
  bool passed() const { return lower_bound_holds && witness_attains; }
};

// Compares ρ(𝓘, 𝓞, M) with V*(M, v) / V*(𝓞, v) over `trials` random rational
// weight vectors in W plus, for n <= 6, every nonzero {0,1,2} vector in W.
// The indicator of the ρ argmin is checked to lie in W and attain ρ.
MilgromReport VerifyMilgrom(const AcceptableSet& acceptable,
                            const Matroid& inner, int trials,
                            std::uint64_t seed);

struct PerfectMatroidAnswer {
  bool exists = false;
  std::optional<Matroid> witness;
  std::string reason;
};

// Whether some inner matroid contains O† (equivalently every member of 𝓞),
// cross-checked against RhoMaxExact(...) == 1; throws std::logic_error if the
// two disagree. n <= 6.
PerfectMatroidAnswer ExistsPerfectMatroid(const AcceptableSet& acceptable);

}  // namespace matapprox

#endif  // MATAPPROX_APPROX_H_
