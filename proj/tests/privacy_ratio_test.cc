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

#include <cmath>
#include <vector>

#include "boost/multiprecision/cpp_bin_float.hpp"
#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "nlohmann/json.hpp"
#include "test_util.h"

namespace brr {
namespace {

using ::testing::HasSubstr;
using Big = boost::multiprecision::cpp_bin_float_50;

double NaiveEuclid(std::span<const double> a, std::span<const double> b) {
  double sq = 0.0;
  for (size_t k = 0; k < a.size(); ++k) sq += (a[k] - b[k]) * (a[k] - b[k]);
  return std::sqrt(sq);
}

AggregateOptions Serial() {
  AggregateOptions options;
  options.threads = 1;
  return options;
}

TEST(AggregateHammingTest, TwoCodes) {
  std::vector<BinaryCode> codes = {*BinaryCode::FromString("00"),
                                   *BinaryCode::FromString("11")};
  auto agg = AggregateDistancesHamming(*BinaryCodeMatrix::FromCodes(codes));
  ASSERT_TRUE(agg.ok());
  EXPECT_EQ(agg->p_max, 2.0);
  EXPECT_EQ(agg->p_avg, 1.0);
  EXPECT_EQ(agg->pair_count, 4u);
  EXPECT_TRUE(agg->exact);
  EXPECT_EQ(agg->metric, Metric::kHamming);
}

TEST(AggregateHammingTest, Singleton) {
  std::vector<BinaryCode> codes = {*BinaryCode::FromString("0110")};
  auto agg = AggregateDistancesHamming(*BinaryCodeMatrix::FromCodes(codes));
  EXPECT_EQ(agg->p_max, 0.0);
  EXPECT_EQ(agg->p_avg, 0.0);
}

TEST(AggregateHammingTest, Empty) {
  auto agg = AggregateDistancesHamming(*BinaryCodeMatrix::Create(8, 0, {}));
  ASSERT_FALSE(agg.ok());
  EXPECT_THAT(agg.status().message(), HasSubstr("empty input"));
}

TEST(AggregateHammingTest, MatchesOrderedDoubleLoop) {
  RngStream rng(31, 0);
  for (size_t n : {2, 10, 63, 64, 65, 300}) {
    for (uint32_t bits : {5u, 64u, 130u}) {
      const BinaryCodeMatrix codes = testing::RandomCodes(rng, n, bits);
      uint64_t ordered = 0, unordered = 0;
      uint32_t max = 0;
      for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) {
          const uint32_t d = testing::NaiveHamming(codes.row(i), codes.row(j));
          ordered += d;
          if (i < j) unordered += d;
          max = std::max(max, d);
        }
      }
      EXPECT_EQ(ordered, 2 * unordered);
      for (unsigned threads : {1u, 3u}) {
        AggregateOptions options;
        options.threads = threads;
        auto agg = AggregateDistancesHamming(codes, options);
        EXPECT_EQ(agg->p_max, max);
        EXPECT_EQ(agg->p_avg, double(ordered) / double(n * n));
      }
      AggregateOptions unordered_options = Serial();
      unordered_options.include_self_pairs = false;
      auto alt = AggregateDistancesHamming(codes, unordered_options);
      EXPECT_EQ(alt->pair_count, n * (n - 1) / 2);
      EXPECT_EQ(alt->p_avg, double(unordered) / double(n * (n - 1) / 2));
    }
  }
}

TEST(AggregateEuclidTest, ThreeFourFive) {
  auto agg = AggregateDistancesEuclid(*RealEmbeddingMatrix::Create(2, {0, 0, 3, 4}));
  ASSERT_TRUE(agg.ok());
  EXPECT_EQ(agg->p_max, 5.0);
  EXPECT_EQ(agg->p_avg, 2.5);
  EXPECT_EQ(agg->metric, Metric::kEuclidean);
}

TEST(AggregateEuclidTest, DuplicatedPoints) {
  auto agg = AggregateDistancesEuclid(
      *RealEmbeddingMatrix::Create(2, {1, 2, 1, 2, 1, 2}));
  EXPECT_EQ(agg->p_max, 0.0);
  EXPECT_EQ(agg->p_avg, 0.0);
}

TEST(AggregateEuclidTest, TenPointsMatchOracleExactly) {
  RngStream rng(32, 0);
  for (int trial = 0; trial < 50; ++trial) {
    const RealEmbeddingMatrix v = testing::RandomReal(rng, 10, 7);
    Big sum = 0;
    double max = 0.0;
    for (size_t i = 0; i < 10; ++i) {
      for (size_t j = 0; j < 10; ++j) {
        const double d = NaiveEuclid(v.row(i), v.row(j));
        sum += d;
        max = std::max(max, d);
      }
    }
    auto agg = AggregateDistancesEuclid(v, Serial());
    EXPECT_EQ(agg->p_max, max);
    EXPECT_EQ(agg->p_avg, static_cast<double>(sum) / 100.0);
  }
}

TEST(AggregateEuclidTest, TranslationInvariant) {
  RngStream rng(33, 0);
  const RealEmbeddingMatrix v = testing::RandomReal(rng, 200, 5);
  std::vector<double> shifted(v.values().begin(), v.values().end());
  for (size_t i = 0; i < shifted.size(); ++i) shifted[i] += 3.0 + (i % 5);
  auto a = AggregateDistancesEuclid(v);
  auto b = AggregateDistancesEuclid(*RealEmbeddingMatrix::Create(5, shifted));
  EXPECT_NEAR(a->p_avg, b->p_avg, 1e-9);
  EXPECT_NEAR(a->p_max, b->p_max, 1e-9);
}

TEST(AggregateEuclidTest, ThreadCountDoesNotChangeResult) {
  RngStream rng(34, 0);
  const RealEmbeddingMatrix v = testing::RandomReal(rng, 500, 8);
  AggregateOptions four;
  four.threads = 4;
  auto a = AggregateDistancesEuclid(v, Serial());
  auto b = AggregateDistancesEuclid(v, four);
  EXPECT_EQ(a->p_avg, b->p_avg);
  EXPECT_EQ(a->p_max, b->p_max);
}

TEST(AggregateTest, AddingPointNeverLowersMax) {
  RngStream rng(35, 0);
  std::vector<BinaryCode> codes;
  double prev = 0.0;
  for (int i = 0; i < 40; ++i) {
    codes.push_back(testing::RandomCode(rng, 20));
    auto agg = AggregateDistancesHamming(*BinaryCodeMatrix::FromCodes(codes));
    EXPECT_GE(agg->p_max, prev);
    EXPECT_LE(agg->p_avg, agg->p_max);
    prev = agg->p_max;
  }
}

TEST(AggregateTest, SampledEstimateIsCloseAndReproducible) {
  RngStream rng(36, 0);
  const BinaryCodeMatrix codes = testing::RandomCodes(rng, 2000, 64);
  auto exact = AggregateDistancesHamming(codes);
  AggregateOptions sampled;
  sampled.exact_threshold = 100;
  sampled.seed = 9;
  auto a = AggregateDistancesHamming(codes, sampled);
  auto b = AggregateDistancesHamming(codes, sampled);
  EXPECT_FALSE(a->exact);
  EXPECT_EQ(a->pair_count, 1'000'000u);
  EXPECT_EQ(a->p_avg, b->p_avg);
  EXPECT_NEAR(a->p_avg / exact->p_avg, 1.0, 0.01);
  EXPECT_LE(a->p_max, exact->p_max);

  const RealEmbeddingMatrix v = testing::RandomReal(rng, 2000, 10);
  auto exact_v = AggregateDistancesEuclid(v);
  auto sampled_v = AggregateDistancesEuclid(v, sampled);
  EXPECT_NEAR(sampled_v->p_avg / exact_v->p_avg, 1.0, 0.01);
}

TEST(TransferEpsilonTest, Substitution) {
  DistanceAggregate a{Metric::kEuclidean, 10, 10, 4, true};
  DistanceAggregate b{Metric::kHamming, 2, 2, 4, true};
  auto r = TransferEpsilon(1.0, a, b, AggregateKind::kMax);
  ASSERT_TRUE(r.ok());
  EXPECT_EQ(r->ratio, 5.0);
  EXPECT_EQ(r->epsilon_b, 5.0);
}

TEST(TransferEpsilonTest, IdentityAndRoundTrip) {
  RngStream rng(37, 0);
  for (int t = 0; t < 1000; ++t) {
    const double pa = std::exp(20 * rng.UniformDouble() - 10);
    const double pb = std::exp(20 * rng.UniformDouble() - 10);
    const double eps = std::exp(10 * rng.UniformDouble() - 5);
    DistanceAggregate a{Metric::kEuclidean, pa, pa, 1, true};
    DistanceAggregate b{Metric::kHamming, pb, pb, 1, true};
    auto ab = TransferEpsilon(eps, a, b, AggregateKind::kAvg);
    const double lhs = ab->epsilon_b * pb;
    const double rhs = eps * pa;
    EXPECT_LE(std::abs(lhs - rhs), 1e-12 * std::abs(rhs));
    auto ba = TransferEpsilon(ab->epsilon_b, b, a, AggregateKind::kAvg);
    EXPECT_LE(std::abs(ba->epsilon_b - eps), 1e-12 * eps);
    auto self = TransferEpsilon(eps, a, a, AggregateKind::kMax);
    EXPECT_EQ(self->ratio, 1.0);
    EXPECT_EQ(self->epsilon_b, eps);
  }
}

TEST(TransferEpsilonTest, Errors) {
  DistanceAggregate a{Metric::kEuclidean, 3, 1, 4, true};
  DistanceAggregate zero{Metric::kHamming, 0, 0, 1, true};
  auto r = TransferEpsilon(1.0, a, zero, AggregateKind::kAvg);
  ASSERT_FALSE(r.ok());
  EXPECT_THAT(r.status().message(), HasSubstr("degenerate target space"));
  auto s = TransferEpsilon(1.0, zero, a, AggregateKind::kAvg);
  ASSERT_FALSE(s.ok());
  EXPECT_THAT(s.status().message(), HasSubstr("degenerate source space"));
  EXPECT_FALSE(TransferEpsilon(0.0, a, a, AggregateKind::kAvg).ok());
}

TEST(PrivacyLossBoundTest, Product) {
  DistanceAggregate a{Metric::kHamming, 3, 1.5, 4, true};
  EXPECT_EQ(PrivacyLossBound(2.0, a, AggregateKind::kMax), 6.0);
  EXPECT_LE(PrivacyLossBound(2.0, a, AggregateKind::kAvg),
            PrivacyLossBound(2.0, a, AggregateKind::kMax));
}

TEST(RatioReportJsonTest, Fields) {
  DistanceAggregate a{Metric::kEuclidean, 10, 4, 100, true};
  DistanceAggregate b{Metric::kHamming, 2, 1, 50, false};
  auto r = TransferEpsilon(1.0, a, b, AggregateKind::kAvg);
  const auto json = nlohmann::json::parse(RatioReportJson(*r, a, b));
  EXPECT_EQ(json["metric_a"], "euclidean");
  EXPECT_EQ(json["metric_b"], "hamming");
  EXPECT_EQ(json["aggregate_kind"], "avg");
  EXPECT_EQ(json["p_a"], 4.0);
  EXPECT_EQ(json["p_b"], 1.0);
  EXPECT_EQ(json["ratio"], 4.0);
  EXPECT_EQ(json["epsilon_b"], 4.0);
  EXPECT_EQ(json["exact_b"], false);
  EXPECT_EQ(json["pair_counts"]["a"], 100);
}

}  // namespace
}  // namespace brr
