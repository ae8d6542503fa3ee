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

#ifndef MATAPPROX_CLI_H_
#define MATAPPROX_CLI_H_

#include <ostream>

namespace matapprox {

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitCapability = 3;
inline constexpr int kExitVerifyFailed = 4;
inline constexpr int kExitUsage = 64;

// Entry point of the matapprox tool. Reports go to `out` as JSON (IP text
// for export-ip without --out); errors go to `err`.
int RunCli(int argc, const char* const* argv, std::ostream& out,
           std::ostream& err);

}  // namespace matapprox

#endif  // MATAPPROX_CLI_H_
