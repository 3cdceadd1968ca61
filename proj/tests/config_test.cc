// Copyright 2026 The Dirichlet Privacy Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "dirichlet_privacy/config.h"

#include <cstdio>
#include <fstream>
#include <random>
#include <string>

#include "gtest/gtest.h"

namespace dirichlet_privacy {
namespace {

TEST(KeyValueConfigTest, ParsesCommentsAndWhitespace) {
  const KeyValueConfig config = *KeyValueConfig::Parse(
      "# header\n"
      "  alpha = 3.5   # trailing\n"
      "\n"
      "name=river swim\n"
      "list = 0.1, 1 ,10\n"
      "alpha = 4\n");
  EXPECT_EQ(*config.GetDouble("alpha", 0.0), 4.0);
  EXPECT_EQ(*config.GetString("name", ""), "river swim");
  EXPECT_EQ(*config.GetDoubleList("list", {}), (std::vector<double>{0.1, 1, 10}));
  EXPECT_EQ(*config.GetDouble("missing", 7.0), 7.0);
  EXPECT_FALSE(config.Has("missing"));
}

TEST(KeyValueConfigTest, RejectsMalformedInput) {
  EXPECT_FALSE(KeyValueConfig::Parse("no equals sign").ok());
  EXPECT_FALSE(KeyValueConfig::Parse(" = value").ok());
  const KeyValueConfig config = *KeyValueConfig::Parse("x = abc\nn = 2.5\nb = maybe");
  EXPECT_FALSE(config.GetDouble("x", 0.0).ok());
  EXPECT_FALSE(config.GetInt("n", 0).ok());
  EXPECT_FALSE(config.GetBool("b", false).ok());
  EXPECT_FALSE(config.GetDoubleList("x", {}).ok());
}

TEST(KeyValueConfigTest, IntegerListsAcceptScientificNotation) {
  EXPECT_EQ(*ParseIntList("100, 1e3, 1E6"),
            (std::vector<int64_t>{100, 1000, 1000000}));
  EXPECT_FALSE(ParseIntList("1.5").ok());
  EXPECT_FALSE(ParseIntList("").ok());
}

TEST(KeyValueConfigTest, MergeOverrides) {
  KeyValueConfig base = *KeyValueConfig::Parse("a = 1\nb = 2");
  base.Merge(*KeyValueConfig::Parse("b = 3\nc = 4"));
  EXPECT_EQ(*base.GetInt("a", 0), 1);
  EXPECT_EQ(*base.GetInt("b", 0), 3);
  EXPECT_EQ(*base.GetInt("c", 0), 4);
}

TEST(KeyValueConfigTest, UnknownKeysAreReported) {
  const KeyValueConfig config = *KeyValueConfig::Parse("trials = 3\ntrails = 4");
  EXPECT_TRUE(config.CheckKnownKeys({"trials", "trails"}).ok());
  const absl::Status status = config.CheckKnownKeys({"trials"});
  EXPECT_FALSE(status.ok());
  EXPECT_NE(status.message().find("trails"), absl::string_view::npos);
}

TEST(KeyValueConfigTest, RoundTripsRandomConfigs) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> letter('a', 'z');
  std::uniform_real_distribution<double> value(-1e6, 1e6);
  for (int trial = 0; trial < 200; ++trial) {
    KeyValueConfig config;
    const int entries = 1 + trial % 12;
    for (int i = 0; i < entries; ++i) {
      std::string key;
      for (int k = 0; k < 6; ++k) key.push_back(static_cast<char>(letter(rng)));
      config.Set(key, std::to_string(value(rng)));
    }
    const KeyValueConfig parsed = *KeyValueConfig::Parse(config.ToString());
    ASSERT_EQ(parsed.entries(), config.entries());
  }
}

TEST(KeyValueConfigTest, LoadsFiles) {
  const std::string path = ::testing::TempDir() + "/kv_config_test.cfg";
  {
    std::ofstream out(path);
    out << "episodes = 12\n";
  }
  EXPECT_EQ(*KeyValueConfig::Load(path)->GetInt("episodes", 0), 12);
  std::remove(path.c_str());
  EXPECT_EQ(KeyValueConfig::Load(path).status().code(),
            absl::StatusCode::kNotFound);
}

}  // namespace
}  // namespace dirichlet_privacy
