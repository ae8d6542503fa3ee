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

#include "matapprox/io.h"

#include <fstream>
#include <regex>
#include <utility>
#include <vector>

#include "matapprox/error.h"
#include "matapprox/rational.h"

namespace matapprox {
namespace {

[[noreturn]] void Invalid(const std::string& what) {
  throw Error(ErrorCode::kInvalidInput, what);
}

const Json& Field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    Invalid(std::string("missing field \"") + key + "\"");
  }
  return j.at(key);
}

GroundSet GroundOf(const Json& j) {
  const Json& n = Field(j, "n");
  if (!n.is_number_integer()) Invalid("\"n\" must be an integer");
  const auto value = n.get<std::int64_t>();
  if (value < 1 || value > kMaxGroundSize) {
    Invalid("\"n\" must lie in [1, 24]");
  }
  return GroundSet(static_cast<int>(value));
}

std::vector<Mask> MaskList(const Json& j, const char* key, GroundSet ground) {
  const Json& list = Field(j, key);
  if (!list.is_array()) Invalid(std::string("\"") + key + "\" must be a list");
  std::vector<Mask> out;
  for (const Json& item : list) {
    if (!item.is_string()) Invalid("masks must be hex strings");
    const Mask m = ParseHexMask(item.get<std::string>());
    if ((m & ~ground.full()) != 0) {
      Invalid("mask " + HexMask(m) + " exceeds the ground set");
    }
    if (!out.empty() && m <= out.back()) {
      Invalid(std::string("\"") + key + "\" must be strictly ascending");
    }
    out.push_back(m);
  }
  return out;
}

Json MaskArray(const std::vector<Mask>& masks) {
  Json out = Json::array();
  for (Mask m : masks) out.push_back(HexMask(m));
  return out;
}

}  // namespace

Mask ParseHexMask(std::string_view text) {
  static const std::regex kPattern("^0x(0|[1-9a-f][0-9a-f]*)$");
  const std::string s(text);
  if (!std::regex_match(s, kPattern) || s.size() > 2 + 8) {
    Invalid("malformed mask \"" + s + "\"");
  }
  return static_cast<Mask>(std::stoul(s.substr(2), nullptr, 16));
}

Json SystemToJson(const IndependenceSystem& sys) {
  Json j;
  j["n"] = sys.n();
  j["maximal_independent"] = MaskArray(sys.maximal().members());
  return j;
}

IndependenceSystem SystemFromJson(const Json& j, bool require_matroid) {
  const GroundSet ground = GroundOf(j);
  std::vector<Mask> maximal = MaskList(j, "maximal_independent", ground);
  if (maximal.empty()) Invalid("\"maximal_independent\" is empty");
  if (MaximalMembers(maximal).size() != maximal.size()) {
    Invalid("\"maximal_independent\" is not an antichain");
  }
  IndependenceSystem sys(ground, std::move(maximal));
  if (require_matroid && !IsMatroid(sys)) {
    throw Error(ErrorCode::kNotAMatroid, "system is not a matroid");
  }
  return sys;
}

Matroid MatroidFromJson(const Json& j) {
  return Matroid(SystemFromJson(j, false));
}

Json FamilyToJson(const SetFamily& family) {
  Json j;
  j["n"] = family.ground().size();
  j["sets"] = MaskArray(family.members());
  return j;
}

SetFamily FamilyFromJson(const Json& j) {
  const GroundSet ground = GroundOf(j);
  return SetFamily(ground, MaskList(j, "sets", ground));
}

Json WeightsToJson(const Weights& v) {
  Json list = Json::array();
  for (const Rational& x : v.values()) list.push_back(ToString(x));
  Json j;
  j["v"] = std::move(list);
  return j;
}

Weights WeightsFromJson(const Json& j, GroundSet ground) {
  const Json& list = Field(j, "v");
  if (!list.is_array()) Invalid("\"v\" must be a list");
  std::vector<Rational> values;
  for (const Json& item : list) {
    if (!item.is_string()) Invalid("weights must be strings such as \"5/2\"");
    values.push_back(ParseRational(item.get<std::string>()));
  }
  return Weights(ground, std::move(values));
}

Json TieBreakToJson(const TieBreak& tb) {
  Json j;
  j["perm"] = tb.perm();
  return j;
}

TieBreak TieBreakFromJson(const Json& j, int n) {
  const Json& list = Field(j, "perm");
  if (!list.is_array()) Invalid("\"perm\" must be a list");
  std::vector<int> perm;
  for (const Json& item : list) {
    if (!item.is_number_integer()) Invalid("\"perm\" entries must be integers");
    perm.push_back(item.get<int>());
  }
  if (static_cast<int>(perm.size()) != n) {
    Invalid("\"perm\" must list every element once");
  }
  return TieBreak(std::move(perm));
}

Json ReadJsonFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) Invalid("cannot read " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    Invalid(path + ": " + e.what());
  }
}

void WriteJsonFile(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) Invalid("cannot write " + path);
  out << j.dump() << '\n';
}

}  // namespace matapprox
