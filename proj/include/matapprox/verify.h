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

#ifndef MATAPPROX_VERIFY_H_
#define MATAPPROX_VERIFY_H_

// Property suites over exhaustively enumerated and seeded random instances.
// Each suite stops at its first failure and keeps that instance as JSON.
// Instances are visited in increasing n, so the kept one is the smallest
// failing instance in visiting order.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "matapprox/io.h"

namespace matapprox {

struct VerifyOptions {
  // Every system on n <= exhaustive_n elements (capped at 5).
  int exhaustive_n = 4;
  // random_count seeded systems with random_n_min <= n <= random_n_max.
  int random_count = 100;
  int random_n_min = 5;
  int random_n_max = 6;
  // Random weight vectors per system where a suite samples weights.
  int trials = 200;
  std::uint64_t seed = 42;
  // Only instances with index % shards == shard are checked.
  int shard = 0;
  int shards = 1;
};

struct SuiteResult {
  std::string name;
  bool passed = true;
  std::size_t checked = 0;
  std::string message;
  // Null when the suite passed.
  Json counterexample;
};

// setfamily, matroid, greedy, quotient, hkj, rho, rho-bound, perfect-matroid,
// milgrom, ip.
const std::vector<std::string>& SuiteNames();

// Throws Error(kInvalidInput) for an unknown suite name.
SuiteResult RunSuite(const std::string& name, const VerifyOptions& options);

// Individual suites.
SuiteResult SetFamilySuite(const VerifyOptions& options);
// Augmentation, rank axioms, basis exchange and q = 1 agree; l = r on
// matroids; the catalog holds exactly the systems passing augmentation.
SuiteResult MatroidSuite(const VerifyOptions& options);
// q <= greedy ratio <= 1; greedy exact on matroids for {0,1,2} weights;
// tight weights reach q exactly on non-matroids.
SuiteResult GreedySuite(const VerifyOptions& options);
// q is a ratio i/j with j <= r(E) on normal systems; the witness is minimal.
SuiteResult QuotientSuite(const VerifyOptions& options);
// q >= 1/p for the circuit bound p and for p-fold partition intersections;
// the path stable sets equal the two-matroid intersection for n <= 10.
SuiteResult HkjSuite(const VerifyOptions& options);
// Rho and RhoMatroid agree; ρ over 𝓞 is at least ρ over O†; positive ρ over
// O† needs every element of ⋃𝓞 to be a non-loop of M.
SuiteResult RhoSuite(const VerifyOptions& options);
// ρ^M(𝓘, 𝓘) <= q and ρ^M(𝓘, 𝓑) <= q.
SuiteResult RhoBoundSuite(const VerifyOptions& options);
// Some inner matroid has ρ = 1 iff some inner matroid contains O†.
SuiteResult PerfectMatroidSuite(const VerifyOptions& options);
// Sampled in-W ratios are at least ρ and the argmin indicator attains ρ.
SuiteResult MilgromSuite(const VerifyOptions& options);
// Brute-force IP optimum equals ρ^M; feasible deltas and inner matroids
// correspond one to one; the export is deterministic.
SuiteResult IpSuite(const VerifyOptions& options);

}  // namespace matapprox

#endif  // MATAPPROX_VERIFY_H_
