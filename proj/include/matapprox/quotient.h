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

#ifndef MATAPPROX_QUOTIENT_H_
#define MATAPPROX_QUOTIENT_H_

#include "matapprox/greedy.h"
#include "matapprox/rational.h"
#include "matapprox/setfamily.h"

namespace matapprox {

// q = l / r attained at `witness`, where l and r are the lower rank and rank
// of the witness.
struct QuotientReport {
  Rational q;
  Mask witness = 0;
  int l = 0;
  int r = 0;
};

// Exact rank quotient min over F with r(F) > 0 of l(F) / r(F), by a scan of
// all subsets. Among minimizers the witness has minimum cardinality, then
// the smallest mask. Throws Error(kUndefined) when every element is a loop.
QuotientReport RankQuotient(const IndependenceSystem& sys);

// {0,1} weights plus a tie-break under which greedy attains a given ratio.
struct TightInstance {
  Weights weights;
  TieBreak tie_break;
  Rational ratio;
};

// Weights 1_F with a smallest basis L of F scanned first: greedy collects L,
// can add nothing else of weight 1, and the optimum collects r(F). The ratio
// is l(F) / r(F). Falls back to searching orders of F when the direct order
// does not attain it (it always does for a correct oracle); throws
// Error(kNotFound) if the search is exhausted and Error(kUndefined) when
// r(F) = 0.
TightInstance TightWeightsFor(const IndependenceSystem& sys, Mask f);

// TightWeightsFor at the rank-quotient witness, so ratio == q.
TightInstance TightWeights(const IndependenceSystem& sys);

struct CircuitBoundReport {
  int p = 0;
  // 1 / p, or 1 when p <= 1.
  Rational bound;
};

// If every A ∪ {e} with A independent holds at most p circuits then
// q >= 1 / p.
CircuitBoundReport CircuitBound(const IndependenceSystem& sys);

}  // namespace matapprox

#endif  // MATAPPROX_QUOTIENT_H_
