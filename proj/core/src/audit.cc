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

#include "brr/audit.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <utility>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "brr/nn_index.h"
#include "brr/noise.h"
#include "brr/privacy_ratio.h"
#include "nlohmann/json.hpp"

namespace brr {
namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

absl::Status CheckBits(uint32_t bits) {
  if (bits == 0 || bits > kMaxAuditBits) {
    return absl::OutOfRangeError(absl::StrCat(
        "code space too large: ", bits, " bits (audit supports 1..",
        kMaxAuditBits, ")"));
  }
  return absl::OkStatus();
}

// ln(sum exp(values)), stable.
double LogSumExp(std::span<const double> values) {
  double max = kNegInf;
  for (double v : values) max = std::max(max, v);
  if (max == kNegInf) return kNegInf;
  double sum = 0.0;
  for (double v : values) sum += std::exp(v - max);
  return max + std::log(sum);
}

void Finalize(AuditResult& result) {
  result.margin = result.bound - result.max_loss_observed;
  result.pass = result.max_loss_observed <= result.bound + kAuditTolerance;
}

}  // namespace

std::string AuditResult::ToJson() const {
  nlohmann::ordered_json json;
  json["epsilon"] = epsilon;
  json["bits"] = bits;
  json["vocab_size"] = vocab_size;
  json["max_loss_observed"] = max_loss_observed;
  json["bound"] = bound;
  json["margin"] = margin;
  json["pass"] = pass;
  json["max_pairwise_excess"] = max_pairwise_excess;
  json["pairwise_pass"] = pairwise_pass();
  json["tightness_gap"] = tightness_gap;
  json["triples_checked"] = triples_checked;
  return json.dump(2);
}

absl::StatusOr<AuditResult> AuditRr(uint32_t bits, double epsilon) {
  if (absl::Status status = ValidateEpsilon(epsilon); !status.ok()) {
    return status;
  }
  if (absl::Status status = CheckBits(bits); !status.ok()) return status;

  const size_t n = size_t{1} << bits;
  std::vector<std::vector<double>> log_probs(n);
  for (uint64_t w = 0; w < n; ++w) {
    const BinaryCode code = BinaryCode::FromInteger(w, bits);
    auto dist = RrExactLogDistribution(code.view(), epsilon);
    if (!dist.ok()) return dist.status();
    log_probs[w] = *std::move(dist);
  }

  AuditResult result;
  result.epsilon = epsilon;
  result.bits = bits;
  result.vocab_size = n;
  result.bound = epsilon * bits;
  result.max_loss_observed = kNegInf;
  result.max_pairwise_excess = kNegInf;
  for (uint64_t w = 0; w < n; ++w) {
    const std::vector<double>& pw = log_probs[w];
    for (uint64_t w2 = 0; w2 < n; ++w2) {
      const std::vector<double>& pw2 = log_probs[w2];
      const double allowed = epsilon * std::popcount(w ^ w2);
      double pair_max = kNegInf;
      for (size_t y = 0; y < n; ++y) {
        pair_max = std::max(pair_max, pw[y] - pw2[y]);
      }
      result.max_loss_observed = std::max(result.max_loss_observed, pair_max);
      result.max_pairwise_excess =
          std::max(result.max_pairwise_excess, pair_max - allowed);
      result.tightness_gap =
          std::max(result.tightness_gap, std::abs(pair_max - allowed));
    }
  }
  result.triples_checked = uint64_t{n} * n * n;
  Finalize(result);
  return result;
}

absl::StatusOr<std::vector<std::vector<double>>> BrrExactLogDistribution(
    const BinaryCodeMatrix& codes, double epsilon) {
  if (absl::Status status = ValidateEpsilon(epsilon); !status.ok()) {
    return status;
  }
  if (absl::Status status = CheckBits(codes.bits()); !status.ok()) {
    return status;
  }
  if (codes.rows() == 0 || codes.rows() > kMaxAuditVocabulary) {
    return absl::OutOfRangeError(
        absl::StrCat("code space too large: vocabulary of ", codes.rows(),
                     " words (audit supports 1..", kMaxAuditVocabulary, ")"));
  }
  const uint32_t bits = codes.bits();
  const size_t n = size_t{1} << bits;
  const size_t vocab = codes.rows();

  auto index = HammingIndex::Build(codes);
  if (!index.ok()) return index.status();
  // cells[v] lists every perturbed code decoded to word v.
  std::vector<std::vector<uint64_t>> cells(vocab);
  for (uint64_t y = 0; y < n; ++y) {
    cells[index->NearestUnchecked(&y).id].push_back(y);
  }

  std::vector<std::vector<double>> out(vocab,
                                       std::vector<double>(vocab, kNegInf));
  std::vector<double> scratch;
  for (size_t w = 0; w < vocab; ++w) {
    auto dist = RrExactLogDistribution(codes.row(w), epsilon);
    if (!dist.ok()) return dist.status();
    for (size_t v = 0; v < vocab; ++v) {
      scratch.clear();
      for (uint64_t y : cells[v]) scratch.push_back((*dist)[y]);
      out[w][v] = LogSumExp(scratch);
    }
  }
  return out;
}

absl::StatusOr<std::vector<double>> BrrExactDistribution(
    const BinaryCodeMatrix& codes, double epsilon, uint32_t word_id) {
  if (word_id >= codes.rows()) {
    return absl::InvalidArgumentError(
        absl::StrCat("word id ", word_id, " out of range"));
  }
  auto log_dist = BrrExactLogDistribution(codes, epsilon);
  if (!log_dist.ok()) return log_dist.status();
  std::vector<double> out = (*log_dist)[word_id];
  for (double& v : out) v = std::exp(v);
  return out;
}

absl::StatusOr<AuditResult> AuditBrr(const BinaryCodeMatrix& codes,
                                     double epsilon) {
  auto log_dist = BrrExactLogDistribution(codes, epsilon);
  if (!log_dist.ok()) return log_dist.status();
  auto aggregate = AggregateDistancesHamming(codes);
  if (!aggregate.ok()) return aggregate.status();

  const size_t vocab = codes.rows();
  AuditResult result;
  result.epsilon = epsilon;
  result.bits = codes.bits();
  result.vocab_size = vocab;
  result.bound = PrivacyLossBound(epsilon, *aggregate, AggregateKind::kMax);
  result.max_loss_observed = 0.0;
  result.max_pairwise_excess = kNegInf;
  for (size_t w = 0; w < vocab; ++w) {
    for (size_t w2 = 0; w2 < vocab; ++w2) {
      const double allowed =
          epsilon * HammingWords(codes.row_data(w), codes.row_data(w2),
                                 codes.words_per_code());
      for (size_t v = 0; v < vocab; ++v) {
        const double a = (*log_dist)[w][v];
        const double b = (*log_dist)[w2][v];
        // Outputs no input can produce carry no loss.
        const double loss = (a == kNegInf && b == kNegInf) ? 0.0 : a - b;
        result.max_loss_observed = std::max(result.max_loss_observed, loss);
        result.max_pairwise_excess =
            std::max(result.max_pairwise_excess, loss - allowed);
        ++result.triples_checked;
      }
    }
  }
  Finalize(result);
  return result;
}

}  // namespace brr
