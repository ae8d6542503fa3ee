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

#ifndef MATAPPROX_IP_H_
#define MATAPPROX_IP_H_

// The rank-reduction integer program for ρ^M. Variables are d_S for every
// S ⊆ E, the amount by which the inner matroid's rank falls below r(S), and
// a continuous t. The program is
//
//   maximize t
//   s.t. d_{S+j} - d_S <= r(S+j) - r(S)                      (monotone)
//        -d_X + d_{X-k} + d_{X-j} - d_{X-jk}
//            <= r(X-j) + r(X-k) - r(X) - r(X-jk)              (submodular)
//        r(S) t + d_S <= r(S)   for S in 𝓞 with r(S) > 0      (objective)
//        0 <= d_S <= r(S) integral, 0 <= t <= 1.

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "matapprox/approx.h"
#include "matapprox/matroid.h"
#include "matapprox/rational.h"
#include "matapprox/setfamily.h"

namespace matapprox {

inline constexpr int kMaxIpN = 16;
inline constexpr int kMaxIpSolveN = 4;

struct IPTerm {
  // A subset mask for d variables; kTVar for t.
  std::uint64_t var = 0;
  std::int64_t coeff = 0;
};

struct IPRow {
  enum class Kind { kMonotone, kSubmodular, kObjective };

  Kind kind = Kind::kMonotone;
  // The set S the row is keyed by; X = S + j + k for submodular rows.
  Mask mask = 0;
  std::string name;
  std::array<IPTerm, 4> terms{};
  int num_terms = 0;
  std::int64_t rhs = 0;

  // Largest d-variable mask in the row.
  Mask MaxMask() const;
};

class IPModel {
 public:
  static constexpr std::uint64_t kTVar = ~std::uint64_t{0};

  IPModel(GroundSet ground, RankTable rank, std::vector<IPRow> rows);

  const GroundSet& ground() const { return ground_; }
  const RankTable& rank() const { return rank_; }
  // Sorted by (kind, mask, name).
  const std::vector<IPRow>& rows() const { return rows_; }

  std::uint64_t num_variables() const { return ground_.num_subsets() + 1; }
  std::size_t CountRows(IPRow::Kind kind) const;

  // Whether (delta, t) satisfies every row and bound.
  bool Satisfies(const RankTable& delta, const Rational& t) const;

 private:
  GroundSet ground_;
  RankTable rank_;
  std::vector<IPRow> rows_;
};

// Throws Error(kCapability) for n > 16.
IPModel BuildIp(const AcceptableSet& acceptable);

// Solver-ready text with OBJECTIVE, CONSTRAINTS, BOUNDS and GENERAL sections.
// Deterministic.
std::string ExportIp(const IPModel& model);

struct IPSolution {
  Rational t_star;
  // An optimal delta, the first in enumeration order.
  RankTable delta;
  std::size_t feasible = 0;
  // Every feasible delta mapped to an inner matroid whose rank function is
  // r - delta.
  bool round_trip = true;
};

// Exact optimum by backtracking over r' = r - delta in mask order, checking
// each row once its largest variable is set. Throws Error(kCapability) for
// n > 4.
IPSolution SolveIpBruteforce(const IPModel& model,
                             const AcceptableSet& acceptable);

}  // namespace matapprox

#endif  // MATAPPROX_IP_H_
