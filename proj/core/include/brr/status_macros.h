// Copyright 2026 The BRR Authors
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

#ifndef BRR_STATUS_MACROS_H_
#define BRR_STATUS_MACROS_H_

#include "absl/status/status.h"
#include "absl/status/statusor.h"

#define BRR_RETURN_IF_ERROR(expr)                \
  do {                                           \
    if (::absl::Status brr_status_ = (expr);     \
        !brr_status_.ok()) {                     \
      return brr_status_;                        \
    }                                            \
  } while (0)

#define BRR_STATUS_CONCAT_INNER_(a, b) a##b
#define BRR_STATUS_CONCAT_(a, b) BRR_STATUS_CONCAT_INNER_(a, b)

#define BRR_ASSIGN_OR_RETURN_IMPL_(statusor, lhs, rexpr) \
  auto statusor = (rexpr);                               \
  if (!statusor.ok()) {                                  \
    return std::move(statusor).status();                 \
  }                                                      \
  lhs = *std::move(statusor)

// Evaluates `rexpr` (an absl::StatusOr<T>) and either assigns the value to
// `lhs` or returns the error status from the enclosing function.
#define BRR_ASSIGN_OR_RETURN(lhs, rexpr) \
  BRR_ASSIGN_OR_RETURN_IMPL_(            \
      BRR_STATUS_CONCAT_(brr_statusor_, __LINE__), lhs, rexpr)

#endif  // BRR_STATUS_MACROS_H_
