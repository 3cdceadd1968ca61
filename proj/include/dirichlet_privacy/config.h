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

// Plain-text "key = value" configuration.
//
// One entry per line. Text after '#' is ignored, as are blank lines.
// Lists are comma separated. Later entries override earlier ones.

#ifndef DIRICHLET_PRIVACY_CONFIG_H_
#define DIRICHLET_PRIVACY_CONFIG_H_

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "absl/strings/string_view.h"

namespace dirichlet_privacy {

class KeyValueConfig {
 public:
  static absl::StatusOr<KeyValueConfig> Parse(absl::string_view text);
  static absl::StatusOr<KeyValueConfig> Load(const std::string& path);

  bool Has(absl::string_view key) const;
  void Set(std::string key, std::string value);
  // Entries of `other` replace entries of this config.
  void Merge(const KeyValueConfig& other);
  const std::map<std::string, std::string, std::less<>>& entries() const {
    return entries_;
  }

  // Typed lookups return `fallback` when the key is absent and an error
  // when the value does not parse.
  absl::StatusOr<std::string> GetString(absl::string_view key,
                                        std::string fallback) const;
  absl::StatusOr<double> GetDouble(absl::string_view key, double fallback) const;
  absl::StatusOr<int64_t> GetInt(absl::string_view key, int64_t fallback) const;
  absl::StatusOr<bool> GetBool(absl::string_view key, bool fallback) const;
  absl::StatusOr<std::vector<double>> GetDoubleList(
      absl::string_view key, std::vector<double> fallback) const;
  absl::StatusOr<std::vector<int64_t>> GetIntList(
      absl::string_view key, std::vector<int64_t> fallback) const;

  // Fails on the first key not in `known`, which catches typos.
  absl::Status CheckKnownKeys(const std::vector<std::string>& known) const;

  // "key = value" lines in key order; Parse(ToString()) round-trips.
  std::string ToString() const;

 private:
  std::map<std::string, std::string, std::less<>> entries_;
};

// Parses a comma-separated list such as "0.1, 1, 10".
absl::StatusOr<std::vector<double>> ParseDoubleList(absl::string_view text);
absl::StatusOr<std::vector<int64_t>> ParseIntList(absl::string_view text);

}  // namespace dirichlet_privacy

#endif  // DIRICHLET_PRIVACY_CONFIG_H_
