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

#include <cstdio>
#include <filesystem>
#include <string>

#include "gtest/gtest.h"
#include "matapprox/error.h"
#include "matapprox/instances.h"

namespace matapprox {
namespace {

ErrorCode CodeOf(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::kNotFound;
}

TEST(ParseHexMaskTest, Accepts) {
  EXPECT_EQ(ParseHexMask("0x0"), 0u);
  EXPECT_EQ(ParseHexMask("0x1f"), 31u);
  EXPECT_EQ(ParseHexMask("0xffffff"), 0xffffffu);
}

TEST(ParseHexMaskTest, Rejects) {
  for (const char* bad : {"", "0x", "1f", "0X1", "0x1F", "0x01", "0x00",
                          "0x123456789", " 0x1", "0x1 "}) {
    EXPECT_EQ(CodeOf([&] { ParseHexMask(bad); }), ErrorCode::kInvalidInput)
        << bad;
  }
}

TEST(SystemJsonTest, RoundTrip) {
  const IndependenceSystem sys = PathStableSet(5);
  const Json j = SystemToJson(sys);
  EXPECT_EQ(j.dump(),
            R"({"n":5,"maximal_independent":["0x9","0xa","0x12","0x15"]})");
  EXPECT_EQ(SystemFromJson(j), sys);
}

TEST(SystemJsonTest, Validation) {
  auto load = [](const char* text, bool matroid = false) {
    return CodeOf([&] { SystemFromJson(Json::parse(text), matroid); });
  };
  EXPECT_EQ(load(R"({"n":0,"maximal_independent":["0x0"]})"),
            ErrorCode::kInvalidInput);
  EXPECT_EQ(load(R"({"n":25,"maximal_independent":["0x0"]})"),
            ErrorCode::kInvalidInput);
  EXPECT_EQ(load(R"({"n":3,"maximal_independent":[]})"),
            ErrorCode::kInvalidInput);
  EXPECT_EQ(load(R"({"n":3,"maximal_independent":["0x3","0x1"]})"),
            ErrorCode::kInvalidInput);
  EXPECT_EQ(load(R"({"n":3,"maximal_independent":["0x1","0x3"]})"),
            ErrorCode::kInvalidInput);
  EXPECT_EQ(load(R"({"n":2,"maximal_independent":["0x4"]})"),
            ErrorCode::kInvalidInput);
  EXPECT_EQ(load(R"({"maximal_independent":["0x1"]})"),
            ErrorCode::kInvalidInput);
  EXPECT_EQ(load(R"({"n":4,"maximal_independent":["0x3","0xc"]})", true),
            ErrorCode::kNotAMatroid);
  EXPECT_EQ(MatroidFromJson(Json::parse(R"({"n":2,"maximal_independent":["0x1","0x2"]})"))
                .rank(),
            1);
}

TEST(FamilyJsonTest, RoundTrip) {
  const SetFamily f = *NamedFixture("ex1b").acceptable;
  const Json j = FamilyToJson(f);
  EXPECT_EQ(j.dump(), R"({"n":4,"sets":["0x3","0xc"]})");
  EXPECT_EQ(FamilyFromJson(j), f);
}

TEST(WeightsJsonTest, RoundTrip) {
  const GroundSet g3(3);
  const Weights v(g3, {Rational(1, 2), 0, 3});
  const Json j = WeightsToJson(v);
  EXPECT_EQ(j.dump(), R"({"v":["1/2","0","3"]})");
  EXPECT_EQ(WeightsFromJson(j, g3).values(), v.values());
  EXPECT_EQ(CodeOf([&] { WeightsFromJson(Json::parse(R"({"v":["1","2"]})"), g3); }),
            ErrorCode::kInvalidInput);
  EXPECT_EQ(
      CodeOf([&] { WeightsFromJson(Json::parse(R"({"v":["1","-2","0"]})"), g3); }),
      ErrorCode::kInvalidInput);
}

TEST(TieBreakJsonTest, RoundTrip) {
  const TieBreak tb({3, 1, 2});
  EXPECT_EQ(TieBreakFromJson(TieBreakToJson(tb), 3).perm(), tb.perm());
  EXPECT_EQ(CodeOf([] { TieBreakFromJson(Json::parse(R"({"perm":[1,2]})"), 3); }),
            ErrorCode::kInvalidInput);
  EXPECT_EQ(CodeOf([] { TieBreakFromJson(Json::parse(R"({"perm":[1,1,2]})"), 3); }),
            ErrorCode::kInvalidInput);
}

TEST(JsonFileTest, WriteThenRead) {
  const std::string path =
      (std::filesystem::temp_directory_path() / "matapprox_io_test.json").string();
  const Json j = SystemToJson(PathStableSet(3));
  WriteJsonFile(path, j);
  EXPECT_EQ(ReadJsonFile(path), j);
  std::remove(path.c_str());
  EXPECT_EQ(CodeOf([&] { ReadJsonFile(path); }), ErrorCode::kInvalidInput);
}

}  // namespace
}  // namespace matapprox
