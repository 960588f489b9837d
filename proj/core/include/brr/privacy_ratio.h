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

#ifndef BRR_PRIVACY_RATIO_H_
#define BRR_PRIVACY_RATIO_H_

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

#include "absl/status/statusor.h"
#include "brr/binary_codes.h"
#include "brr/embeddings.h"
#include "brr/noise.h"

namespace brr {

enum class AggregateKind { kMax, kAvg };

std::string_view AggregateKindName(AggregateKind kind);

// Pairwise distance aggregates over a finite point set X:
//
//   p_max = max over x, x' in X of d(x, x')
//   p_avg = sum over x, x' in X of d(x, x') / |X|^2
//
// The sum runs over ordered pairs and includes the zero self-pairs. When
// computed with `include_self_pairs = false` the average is instead taken
// over the |X|(|X|-1)/2 unordered pairs of distinct points.
struct DistanceAggregate {
  Metric metric = Metric::kHamming;
  double p_max = 0.0;
  double p_avg = 0.0;
  uint64_t pair_count = 0;
  // False when the aggregates were estimated from sampled pairs.
  bool exact = true;

  double Get(AggregateKind kind) const {
    return kind == AggregateKind::kMax ? p_max : p_avg;
  }
};

struct AggregateOptions {
  // Point sets larger than this are estimated from sampled pairs.
  size_t exact_threshold = 20000;
  uint64_t sample_pairs = 1'000'000;
  uint64_t seed = 0;
  bool include_self_pairs = true;
  // 0 picks std::thread::hardware_concurrency().
  unsigned threads = 0;
};

// Fails with InvalidArgument ("empty input") on zero rows.
absl::StatusOr<DistanceAggregate> AggregateDistancesHamming(
    const BinaryCodeMatrix& codes, const AggregateOptions& options = {});
absl::StatusOr<DistanceAggregate> AggregateDistancesEuclid(
    const RealEmbeddingMatrix& vectors, const AggregateOptions& options = {});

struct RatioReport {
  double ratio = 1.0;
  double epsilon_a = 0.0;
  double epsilon_b = 0.0;
  AggregateKind aggregate_kind = AggregateKind::kAvg;
};

// ratio = P_A / P_B for the chosen aggregate and epsilon_b = ratio *
// epsilon_a, so epsilon_b * P_B equals epsilon_a * P_A.
//
// Fails with FailedPrecondition ("degenerate target space") when P_B is 0,
// and ("degenerate source space") when P_A is 0.
absl::StatusOr<RatioReport> TransferEpsilon(double epsilon_a,
                                            const DistanceAggregate& agg_a,
                                            const DistanceAggregate& agg_b,
                                            AggregateKind kind);

// eps * P. The privacy loss between x and x' is at most eps * d(x, x'),
// which is at most eps * p_max; eps * p_avg is the average-case estimate.
double PrivacyLossBound(double epsilon, const DistanceAggregate& aggregate,
                        AggregateKind kind);

// JSON document with metric_a, metric_b, aggregate_kind, p_a, p_b, ratio,
// epsilon_a, epsilon_b, exact_a, exact_b, pair_counts.
std::string RatioReportJson(const RatioReport& report,
                            const DistanceAggregate& agg_a,
                            const DistanceAggregate& agg_b);

}  // namespace brr

#endif  // BRR_PRIVACY_RATIO_H_
