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

#ifndef MATAPPROX_IO_H_
#define MATAPPROX_IO_H_

// JSON forms of systems, set families, weights and tie-breaks. Masks are
// lowercase hex strings with a 0x prefix; lists are strictly ascending.

#include <string>
#include <string_view>

#include "json.hpp"
#include "matapprox/greedy.h"
#include "matapprox/matroid.h"
#include "matapprox/setfamily.h"

namespace matapprox {

using Json = nlohmann::ordered_json;

// Strict: "0x0" or "0x" followed by lowercase hex without leading zeros.
Mask ParseHexMask(std::string_view text);

// {"n": n, "maximal_independent": [...]}. With require_matroid the system
// must also satisfy augmentation (Error(kNotAMatroid) otherwise).
Json SystemToJson(const IndependenceSystem& sys);
IndependenceSystem SystemFromJson(const Json& j, bool require_matroid = false);
Matroid MatroidFromJson(const Json& j);

// {"n": n, "sets": [...]}.
Json FamilyToJson(const SetFamily& family);
SetFamily FamilyFromJson(const Json& j);

// {"v": ["3", "5/2", ...]}.
Json WeightsToJson(const Weights& v);
Weights WeightsFromJson(const Json& j, GroundSet ground);

// {"perm": [2, 1, 3, ...]}.
Json TieBreakToJson(const TieBreak& tb);
TieBreak TieBreakFromJson(const Json& j, int n);

// Errors surface as Error(kInvalidInput) naming the path.
Json ReadJsonFile(const std::string& path);
void WriteJsonFile(const std::string& path, const Json& j);

}  // namespace matapprox

#endif  // MATAPPROX_IO_H_
