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

#include "brr/privacy_ratio.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>
#include <vector>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "brr/rng.h"
#include "nlohmann/json.hpp"

namespace brr {
namespace {

constexpr size_t kBlockRows = 64;

// Neumaier's compensated summation.
class CompensatedSum {
 public:
  void Add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      compensation_ += (sum_ - t) + x;
    } else {
      compensation_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  double Total() const { return sum_ + compensation_; }

 private:
  double sum_ = 0.0;
  double compensation_ = 0.0;
};

template <typename Sum>
struct BlockResult {
  Sum sum{};
  double max = 0.0;
};

// Runs block(b) for every row block on `threads` workers. Blocks are fixed
// by kBlockRows, so the per-block results do not depend on thread count.
template <typename Result, typename Fn>
std::vector<Result> ForEachBlock(size_t rows, unsigned threads, Fn&& block) {
  const size_t blocks = (rows + kBlockRows - 1) / kBlockRows;
  std::vector<Result> results(blocks);
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<size_t>(threads, blocks));
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (size_t b = next.fetch_add(1); b < blocks; b = next.fetch_add(1)) {
      results[b] = block(b * kBlockRows, std::min(rows, (b + 1) * kBlockRows));
    }
  };
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (std::thread& th : pool) th.join();
  }
  return results;
}

double EuclidDistance(std::span<const double> a, std::span<const double> b) {
  double sq = 0.0;
  for (size_t k = 0; k < a.size(); ++k) {
    const double diff = a[k] - b[k];
    sq += diff * diff;
  }
  return std::sqrt(sq);
}

DistanceAggregate Finish(Metric metric, size_t n, double unordered_sum,
                         double max, bool include_self_pairs) {
  DistanceAggregate out;
  out.metric = metric;
  out.p_max = max;
  out.exact = true;
  const double dn = static_cast<double>(n);
  if (include_self_pairs) {
    out.pair_count = uint64_t{n} * n;
    out.p_avg = 2.0 * unordered_sum / (dn * dn);
  } else {
    out.pair_count = uint64_t{n} * (n - 1) / 2;
    out.p_avg = out.pair_count == 0
                    ? 0.0
                    : unordered_sum / static_cast<double>(out.pair_count);
  }
  return out;
}

// Uniform pairs; self-pairs are only drawn when they count.
template <typename DistanceFn>
DistanceAggregate SampledAggregate(Metric metric, size_t n,
                                   const AggregateOptions& options,
                                   DistanceFn&& distance) {
  RngStream rng(options.seed, 0);
  CompensatedSum sum;
  double max = 0.0;
  for (uint64_t k = 0; k < options.sample_pairs; ++k) {
    const size_t i = rng.UniformBelow(n);
    size_t j;
    if (options.include_self_pairs) {
      j = rng.UniformBelow(n);
    } else {
      j = rng.UniformBelow(n - 1);
      if (j >= i) ++j;
    }
    const double d = distance(i, j);
    sum.Add(d);
    max = std::max(max, d);
  }
  DistanceAggregate out;
  out.metric = metric;
  out.p_max = max;
  out.p_avg = options.sample_pairs == 0
                  ? 0.0
                  : sum.Total() / static_cast<double>(options.sample_pairs);
  out.pair_count = options.sample_pairs;
  out.exact = false;
  return out;
}

bool UseSampling(size_t n, const AggregateOptions& options) {
  return n > options.exact_threshold && n > 1 && options.sample_pairs > 0;
}

}  // namespace

std::string_view AggregateKindName(AggregateKind kind) {
  return kind == AggregateKind::kMax ? "max" : "avg";
}

absl::StatusOr<DistanceAggregate> AggregateDistancesHamming(
    const BinaryCodeMatrix& codes, const AggregateOptions& options) {
  const size_t n = codes.rows();
  if (n == 0) return absl::InvalidArgumentError("empty input: no codes");
  const size_t stride = codes.words_per_code();
  if (UseSampling(n, options)) {
    return SampledAggregate(
        Metric::kHamming, n, options, [&](size_t i, size_t j) {
          return static_cast<double>(
              HammingWords(codes.row_data(i), codes.row_data(j), stride));
        });
  }
  using Block = BlockResult<uint64_t>;
  const auto blocks =
      ForEachBlock<Block>(n, options.threads, [&](size_t begin, size_t end) {
        Block result;
        uint32_t max = 0;
        for (size_t i = begin; i < end; ++i) {
          const uint64_t* a = codes.row_data(i);
          for (size_t j = i + 1; j < n; ++j) {
            const uint32_t d = HammingWords(a, codes.row_data(j), stride);
            result.sum += d;
            max = std::max(max, d);
          }
        }
        result.max = max;
        return result;
      });
  uint64_t total = 0;
  double max = 0.0;
  for (const Block& block : blocks) {
    total += block.sum;
    max = std::max(max, block.max);
  }
  return Finish(Metric::kHamming, n, static_cast<double>(total), max,
                options.include_self_pairs);
}

absl::StatusOr<DistanceAggregate> AggregateDistancesEuclid(
    const RealEmbeddingMatrix& vectors, const AggregateOptions& options) {
  const size_t n = vectors.rows();
  if (n == 0) return absl::InvalidArgumentError("empty input: no vectors");
  if (UseSampling(n, options)) {
    return SampledAggregate(Metric::kEuclidean, n, options,
                            [&](size_t i, size_t j) {
                              return EuclidDistance(vectors.row(i),
                                                    vectors.row(j));
                            });
  }
  using Block = BlockResult<CompensatedSum>;
  const auto blocks =
      ForEachBlock<Block>(n, options.threads, [&](size_t begin, size_t end) {
        Block result;
        for (size_t i = begin; i < end; ++i) {
          for (size_t j = i + 1; j < n; ++j) {
            const double d = EuclidDistance(vectors.row(i), vectors.row(j));
            result.sum.Add(d);
            result.max = std::max(result.max, d);
          }
        }
        return result;
      });
  CompensatedSum total;
  double max = 0.0;
  for (const Block& block : blocks) {
    total.Add(block.sum.Total());
    max = std::max(max, block.max);
  }
  return Finish(Metric::kEuclidean, n, total.Total(), max,
                options.include_self_pairs);
}

absl::StatusOr<RatioReport> TransferEpsilon(double epsilon_a,
                                            const DistanceAggregate& agg_a,
                                            const DistanceAggregate& agg_b,
                                            AggregateKind kind) {
  if (absl::Status status = ValidateEpsilon(epsilon_a); !status.ok()) {
    return status;
  }
  const double p_a = agg_a.Get(kind);
  const double p_b = agg_b.Get(kind);
  if (!(p_b > 0.0)) {
    return absl::FailedPreconditionError(
        absl::StrCat("degenerate target space: P_",
                     std::string(AggregateKindName(kind)),
                     " of space B is 0"));
  }
  if (!(p_a > 0.0)) {
    return absl::FailedPreconditionError(
        absl::StrCat("degenerate source space: P_",
                     std::string(AggregateKindName(kind)),
                     " of space A is 0"));
  }
  RatioReport report;
  report.ratio = p_a / p_b;
  report.epsilon_a = epsilon_a;
  report.epsilon_b = report.ratio * epsilon_a;
  report.aggregate_kind = kind;
  return report;
}

double PrivacyLossBound(double epsilon, const DistanceAggregate& aggregate,
                        AggregateKind kind) {
  return epsilon * aggregate.Get(kind);
}

std::string RatioReportJson(const RatioReport& report,
                            const DistanceAggregate& agg_a,
                            const DistanceAggregate& agg_b) {
  nlohmann::ordered_json json;
  json["metric_a"] = std::string(MetricName(agg_a.metric));
  json["metric_b"] = std::string(MetricName(agg_b.metric));
  json["aggregate_kind"] = std::string(AggregateKindName(report.aggregate_kind));
  json["p_a"] = agg_a.Get(report.aggregate_kind);
  json["p_b"] = agg_b.Get(report.aggregate_kind);
  json["ratio"] = report.ratio;
  json["epsilon_a"] = report.epsilon_a;
  json["epsilon_b"] = report.epsilon_b;
  json["exact_a"] = agg_a.exact;
  json["exact_b"] = agg_b.exact;
  json["pair_counts"] = {{"a", agg_a.pair_count}, {"b", agg_b.pair_count}};
  return json.dump(2);
}

}  // namespace brr
