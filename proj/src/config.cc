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

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "absl/strings/ascii.h"
#include "absl/strings/numbers.h"
#include "absl/strings/str_format.h"
#include "absl/strings/str_split.h"

namespace dirichlet_privacy {

absl::StatusOr<KeyValueConfig> KeyValueConfig::Parse(absl::string_view text) {
  KeyValueConfig config;
  int line_number = 0;
  for (absl::string_view line : absl::StrSplit(text, '\n')) {
    ++line_number;
    if (const size_t hash = line.find('#'); hash != absl::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = absl::StripAsciiWhitespace(line);
    if (line.empty()) continue;
    const size_t eq = line.find('=');
    if (eq == absl::string_view::npos) {
      return absl::InvalidArgumentError(
          absl::StrFormat("line %d: expected 'key = value'", line_number));
    }
    const absl::string_view key = absl::StripAsciiWhitespace(line.substr(0, eq));
    const absl::string_view value =
        absl::StripAsciiWhitespace(line.substr(eq + 1));
    if (key.empty()) {
      return absl::InvalidArgumentError(
          absl::StrFormat("line %d: empty key", line_number));
    }
    config.Set(std::string(key), std::string(value));
  }
  return config;
}

absl::StatusOr<KeyValueConfig> KeyValueConfig::Load(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    return absl::NotFoundError(absl::StrFormat("cannot open %s", path));
  }
  std::stringstream buffer;
  buffer << in.rdbuf();
  auto config = Parse(buffer.str());
  if (!config.ok()) {
    return absl::InvalidArgumentError(
        absl::StrFormat("%s: %s", path, config.status().message()));
  }
  return config;
}

bool KeyValueConfig::Has(absl::string_view key) const {
  return entries_.find(key) != entries_.end();
}

void KeyValueConfig::Set(std::string key, std::string value) {
  entries_[std::move(key)] = std::move(value);
}

void KeyValueConfig::Merge(const KeyValueConfig& other) {
  for (const auto& [key, value] : other.entries_) entries_[key] = value;
}

absl::StatusOr<std::string> KeyValueConfig::GetString(
    absl::string_view key, std::string fallback) const {
  const auto it = entries_.find(key);
  return it == entries_.end() ? fallback : it->second;
}

absl::StatusOr<double> KeyValueConfig::GetDouble(absl::string_view key,
                                                 double fallback) const {
  const auto it = entries_.find(key);
  if (it == entries_.end()) return fallback;
  double value;
  if (!absl::SimpleAtod(it->second, &value)) {
    return absl::InvalidArgumentError(
        absl::StrFormat("%s: not a number: '%s'", key, it->second));
  }
  return value;
}

absl::StatusOr<int64_t> KeyValueConfig::GetInt(absl::string_view key,
                                               int64_t fallback) const {
  const auto it = entries_.find(key);
  if (it == entries_.end()) return fallback;
  int64_t value;
  if (!absl::SimpleAtoi(it->second, &value)) {
    return absl::InvalidArgumentError(
        absl::StrFormat("%s: not an integer: '%s'", key, it->second));
  }
  return value;
}

absl::StatusOr<bool> KeyValueConfig::GetBool(absl::string_view key,
                                             bool fallback) const {
  const auto it = entries_.find(key);
  if (it == entries_.end()) return fallback;
  bool value;
  if (!absl::SimpleAtob(it->second, &value)) {
    return absl::InvalidArgumentError(
        absl::StrFormat("%s: not a boolean: '%s'", key, it->second));
  }
  return value;
}

absl::StatusOr<std::vector<double>> KeyValueConfig::GetDoubleList(
    absl::string_view key, std::vector<double> fallback) const {
  const auto it = entries_.find(key);
  if (it == entries_.end()) return fallback;
  auto list = ParseDoubleList(it->second);
  if (!list.ok()) {
    return absl::InvalidArgumentError(
        absl::StrFormat("%s: %s", key, list.status().message()));
  }
  return list;
}

absl::StatusOr<std::vector<int64_t>> KeyValueConfig::GetIntList(
    absl::string_view key, std::vector<int64_t> fallback) const {
  const auto it = entries_.find(key);
  if (it == entries_.end()) return fallback;
  auto list = ParseIntList(it->second);
  if (!list.ok()) {
    return absl::InvalidArgumentError(
        absl::StrFormat("%s: %s", key, list.status().message()));
  }
  return list;
}

absl::Status KeyValueConfig::CheckKnownKeys(
    const std::vector<std::string>& known) const {
  for (const auto& [key, value] : entries_) {
    if (std::find(known.begin(), known.end(), key) == known.end()) {
      return absl::InvalidArgumentError(
          absl::StrFormat("unknown config key '%s'", key));
    }
  }
  return absl::OkStatus();
}

std::string KeyValueConfig::ToString() const {
  std::string out;
  for (const auto& [key, value] : entries_) {
    absl::StrAppendFormat(&out, "%s = %s\n", key, value);
  }
  return out;
}

absl::StatusOr<std::vector<double>> ParseDoubleList(absl::string_view text) {
  std::vector<double> values;
  for (absl::string_view item : absl::StrSplit(text, ',')) {
    item = absl::StripAsciiWhitespace(item);
    double value;
    if (!absl::SimpleAtod(item, &value)) {
      return absl::InvalidArgumentError(
          absl::StrFormat("not a number: '%s'", item));
    }
    values.push_back(value);
  }
  return values;
}

absl::StatusOr<std::vector<int64_t>> ParseIntList(absl::string_view text) {
  std::vector<int64_t> values;
  for (absl::string_view item : absl::StrSplit(text, ',')) {
    item = absl::StripAsciiWhitespace(item);
    int64_t value;
    if (!absl::SimpleAtoi(item, &value)) {
      // Accept integral scientific notation such as 1e4.
      double real;
      if (absl::SimpleAtod(item, &real) && real == std::floor(real) &&
          std::abs(real) < 9.2e18) {
        value = static_cast<int64_t>(real);
      } else {
        return absl::InvalidArgumentError(
            absl::StrFormat("not an integer: '%s'", item));
      }
    }
    values.push_back(value);
  }
  return values;
}

}  // namespace dirichlet_privacy
