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

#ifndef MATAPPROX_PARALLEL_H_
#define MATAPPROX_PARALLEL_H_

#include <cstddef>
#include <functional>

namespace matapprox {

// Worker count: MATROID_APPROX_THREADS when set to a positive integer,
// otherwise the hardware concurrency.
int ThreadCount();

// Calls fn(i) for every i in [0, count), split into contiguous blocks across
// ThreadCount() workers. The first exception thrown by any call is rethrown
// after all workers finish. Callers write results into per-index slots and
// reduce afterwards, so output order never depends on scheduling.
void ParallelFor(std::size_t count, const std::function<void(std::size_t)>& fn);

}  // namespace matapprox

#endif  // MATAPPROX_PARALLEL_H_
