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

#ifndef BRR_AUDIT_H_
#define BRR_AUDIT_H_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "brr/binary_codes.h"

namespace brr {

inline constexpr uint32_t kMaxAuditBits = 10;
inline constexpr size_t kMaxAuditVocabulary = 32;
inline constexpr double kAuditTolerance = 1e-9;

// Outcome of checking Pr[M(w) = y] <= e^(eps d(w, w')) Pr[M(w') = y] by
// exhaustive enumeration. Losses are ln(Pr[M(w) = y] / Pr[M(w') = y]).
struct AuditResult {
  double epsilon = 0.0;
  uint32_t bits = 0;
  size_t vocab_size = 0;
  double max_loss_observed = 0.0;
  // eps * p_max over the audited inputs.
  double bound = 0.0;
  double margin = 0.0;  // bound - max_loss_observed
  // max_loss_observed <= bound + kAuditTolerance.
  bool pass = false;

  // Largest loss - eps * d(w, w') over all checked triples; <= tolerance
  // means the inequality holds pair by pair.
  double max_pairwise_excess = 0.0;
  // For each input pair, |max_y loss - eps * d(w, w')|, maximized over
  // pairs. Zero means the bound is achieved. Only filled by AuditRr.
  double tightness_gap = 0.0;
  uint64_t triples_checked = 0;

  bool pairwise_pass() const {
    return max_pairwise_excess <= kAuditTolerance;
  }
  bool ok() const { return pass && pairwise_pass(); }

  std::string ToJson() const;
};

// Audits randomized response over the full {0,1}^bits code space.
// Fails with OutOfRange ("code space too large") above kMaxAuditBits.
absl::StatusOr<AuditResult> AuditRr(uint32_t bits, double epsilon);

// ln Pr[BRR(w) = w'] for every vocabulary pair, row w, column w', computed by
// enumerating all 2^bits perturbed codes and assigning each to its nearest
// word (ties to the smallest id). Never-chosen outputs get -infinity.
absl::StatusOr<std::vector<std::vector<double>>> BrrExactLogDistribution(
    const BinaryCodeMatrix& codes, double epsilon);

// Pr[BRR(word_id) = w'] for every w'.
absl::StatusOr<std::vector<double>> BrrExactDistribution(
    const BinaryCodeMatrix& codes, double epsilon, uint32_t word_id);

// Audits the word-level BRR mechanism. The bound uses p_max over the
// vocabulary codes. Fails with OutOfRange above kMaxAuditBits or
// kMaxAuditVocabulary words.
absl::StatusOr<AuditResult> AuditBrr(const BinaryCodeMatrix& codes,
                                     double epsilon);

}  // namespace brr

#endif  // BRR_AUDIT_H_
