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

#ifndef DIRICHLET_PRIVACY_STATUS_MACROS_H_
#define DIRICHLET_PRIVACY_STATUS_MACROS_H_

#include <utility>

#include "absl/status/status.h"
#include "absl/status/statusor.h"

#define DP_STATUS_CONCAT_INNER_(x, y) x##y
#define DP_STATUS_CONCAT_(x, y) DP_STATUS_CONCAT_INNER_(x, y)

#define RETURN_IF_ERROR(expr)                     \
  do {                                            \
    const absl::Status dp_status_ = (expr);       \
    if (!dp_status_.ok()) return dp_status_;      \
  } while (false)

#define DP_ASSIGN_OR_RETURN_IMPL_(statusor, lhs, rexpr) \
  auto statusor = (rexpr);                              \
  if (!statusor.ok()) return statusor.status();         \
  lhs = std::move(statusor).value()

#define ASSIGN_OR_RETURN(lhs, rexpr)                                          \
  DP_ASSIGN_OR_RETURN_IMPL_(DP_STATUS_CONCAT_(dp_statusor_, __LINE__), lhs, \
                            rexpr)

#endif  // DIRICHLET_PRIVACY_STATUS_MACROS_H_
