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

#include <cmath>
#include <vector>

#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "nlohmann/json.hpp"
#include "test_util.h"

namespace brr {
namespace {

using ::testing::HasSubstr;

TEST(AuditRrTest, OneBitLossIsExactlyEpsilon) {
  for (double eps : {0.1, 1.0, 3.0, 20.0}) {
    auto r = AuditRr(1, eps);
    ASSERT_TRUE(r.ok());
    EXPECT_NEAR(r->max_loss_observed, eps, 1e-12 * eps);
    EXPECT_NEAR(r->margin, 0.0, 1e-12 * eps);
    EXPECT_TRUE(r->ok());
  }
}

TEST(AuditRrTest, FourBits) {
  for (double eps : {0.5, 1.0, 2.0}) {
    auto r = AuditRr(4, eps);
    ASSERT_TRUE(r.ok());
    EXPECT_TRUE(r->pass);
    EXPECT_TRUE(r->pairwise_pass());
    EXPECT_GE(r->margin, -1e-9);
    EXPECT_LE(std::abs(r->margin), 1e-12);
    EXPECT_LE(r->tightness_gap, 1e-12);
    EXPECT_EQ(r->triples_checked, 16u * 16 * 16);
    EXPECT_DOUBLE_EQ(r->bound, eps * 4);
  }
}

TEST(AuditRrTest, SameInputHasZeroLoss) {
  // Direct check of the d = 0 case on the exact distribution.
  const BinaryCode w = *BinaryCode::FromString("0110");
  auto p = *RrExactLogDistribution(w.view(), 1.3);
  auto q = *RrExactLogDistribution(w.view(), 1.3);
  for (size_t y = 0; y < p.size(); ++y) EXPECT_EQ(p[y] - q[y], 0.0);
}

TEST(AuditRrTest, LargeEpsilonStaysFinite) {
  auto r = AuditRr(10, 200.0);
  ASSERT_TRUE(r.ok());
  EXPECT_TRUE(std::isfinite(r->max_loss_observed));
  EXPECT_TRUE(r->ok());
  EXPECT_LE(r->tightness_gap, 1e-9);
}

TEST(AuditRrTest, Errors) {
  auto big = AuditRr(11, 1.0);
  ASSERT_FALSE(big.ok());
  EXPECT_THAT(big.status().message(), HasSubstr("code space too large"));
  EXPECT_FALSE(AuditRr(0, 1.0).ok());
  EXPECT_FALSE(AuditRr(4, 0.0).ok());
}

TEST(AuditBrrTest, TwoWordsWithTies) {
  std::vector<BinaryCode> codes = {*BinaryCode::FromString("00"),
                                   *BinaryCode::FromString("11")};
  const BinaryCodeMatrix m = *BinaryCodeMatrix::FromCodes(codes);
  const double eps = std::log(3.0);
  // 01 and 10 tie between both words and resolve to id 0.
  auto from0 = BrrExactDistribution(m, eps, 0);
  auto from1 = BrrExactDistribution(m, eps, 1);
  ASSERT_TRUE(from0.ok() && from1.ok());
  EXPECT_NEAR((*from0)[0], 15.0 / 16, 1e-15);
  EXPECT_NEAR((*from0)[1], 1.0 / 16, 1e-15);
  EXPECT_NEAR((*from1)[0], 7.0 / 16, 1e-15);
  EXPECT_NEAR((*from1)[1], 9.0 / 16, 1e-15);
  auto r = AuditBrr(m, eps);
  ASSERT_TRUE(r.ok());
  EXPECT_TRUE(r->ok());
  EXPECT_NEAR(r->max_loss_observed, std::log(9.0), 1e-12);
  EXPECT_NEAR(r->bound, 2 * eps, 1e-15);
}

TEST(AuditBrrTest, SingleWord) {
  std::vector<BinaryCode> codes = {*BinaryCode::FromString("101")};
  const BinaryCodeMatrix m = *BinaryCodeMatrix::FromCodes(codes);
  auto d = BrrExactDistribution(m, 1.0, 0);
  EXPECT_NEAR((*d)[0], 1.0, 1e-15);
  auto r = AuditBrr(m, 1.0);
  EXPECT_EQ(r->max_loss_observed, 0.0);
  EXPECT_TRUE(r->ok());
}

TEST(AuditBrrTest, DistributionsSumToOne) {
  RngStream rng(41, 0);
  const BinaryCodeMatrix m = testing::DistinctRandomCodes(rng, 32, 10);
  auto log_dist = BrrExactLogDistribution(m, 0.7);
  ASSERT_TRUE(log_dist.ok());
  for (const auto& row : *log_dist) {
    double total = 0.0;
    for (double lp : row) total += std::exp(lp);
    EXPECT_NEAR(total, 1.0, 1e-12);
  }
}

TEST(AuditBrrTest, PassesAndRespectsDataProcessing) {
  RngStream rng(42, 0);
  for (uint32_t bits : {3u, 6u, 8u}) {
    for (double eps : {0.25, 1.0, 4.0}) {
      const BinaryCodeMatrix m = testing::DistinctRandomCodes(rng, 8, bits);
      auto brr = AuditBrr(m, eps);
      auto rr = AuditRr(bits, eps);
      ASSERT_TRUE(brr.ok() && rr.ok());
      EXPECT_TRUE(brr->ok()) << bits << " " << eps;
      EXPECT_LE(brr->max_loss_observed, rr->max_loss_observed + 1e-12);
    }
  }
}

TEST(AuditBrrTest, DuplicateCodesStillPass) {
  // Duplicate codes make one word unreachable; its outputs carry no loss.
  std::vector<BinaryCode> codes = {*BinaryCode::FromString("0101"),
                                   *BinaryCode::FromString("0101"),
                                   *BinaryCode::FromString("1110")};
  auto r = AuditBrr(*BinaryCodeMatrix::FromCodes(codes), 1.0);
  ASSERT_TRUE(r.ok());
  EXPECT_TRUE(r->ok());
}

TEST(AuditBrrTest, Errors) {
  RngStream rng(43, 0);
  auto too_many = AuditBrr(testing::DistinctRandomCodes(rng, 33, 8), 1.0);
  ASSERT_FALSE(too_many.ok());
  EXPECT_THAT(too_many.status().message(), HasSubstr("code space too large"));
  auto too_wide = AuditBrr(testing::RandomCodes(rng, 4, 11), 1.0);
  EXPECT_FALSE(too_wide.ok());
  EXPECT_FALSE(BrrExactDistribution(testing::RandomCodes(rng, 4, 4), 1.0, 4).ok());
}

TEST(AuditResultTest, Json) {
  auto r = AuditRr(2, 1.0);
  const auto json = nlohmann::json::parse(r->ToJson());
  EXPECT_EQ(json["bits"], 2);
  EXPECT_EQ(json["pass"], true);
  EXPECT_EQ(json["triples_checked"], 64);
}

}  // namespace
}  // namespace brr
