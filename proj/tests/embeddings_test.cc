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

#include "brr/embeddings.h"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "test_util.h"

namespace brr {
namespace {

using ::testing::ElementsAre;
using ::testing::HasSubstr;

std::vector<double> Vec(std::span<const double> s) {
  return {s.begin(), s.end()};
}

absl::StatusOr<TextEmbeddings> Parse(const std::string& text) {
  std::istringstream in(text);
  return LoadTextEmbeddings(in);
}

RealEmbeddingMatrix Matrix(size_t dim, std::vector<double> values) {
  return *RealEmbeddingMatrix::Create(dim, std::move(values));
}

TEST(LoadTextEmbeddingsTest, ParsesTwoLines) {
  auto e = Parse("a 1.0 0.0\nb 0.0 1.0");
  ASSERT_TRUE(e.ok()) << e.status();
  EXPECT_THAT(e->vocabulary.words(), ElementsAre("a", "b"));
  EXPECT_EQ(e->vectors.dim(), 2u);
  EXPECT_THAT(Vec(e->vectors.row(0)), ElementsAre(1.0, 0.0));
  EXPECT_THAT(Vec(e->vectors.row(1)), ElementsAre(0.0, 1.0));
  EXPECT_EQ(*e->vocabulary.IdOf("b"), 1u);
  EXPECT_FALSE(e->vocabulary.IdOf("c").has_value());
}

TEST(LoadTextEmbeddingsTest, InconsistentDimension) {
  auto e = Parse("a 1.0\nb 2.0 3.0");
  ASSERT_FALSE(e.ok());
  EXPECT_THAT(e.status().message(),
              HasSubstr("inconsistent dimension at line 2"));
}

TEST(LoadTextEmbeddingsTest, DuplicateWord) {
  auto e = Parse("a 1\nb 2\na 3\n");
  ASSERT_FALSE(e.ok());
  EXPECT_THAT(e.status().message(), HasSubstr("duplicate word 'a'"));
}

TEST(LoadTextEmbeddingsTest, UnparsableNumberReportsLineAndColumn) {
  auto e = Parse("a 1 2\nb 3 x4\n");
  ASSERT_FALSE(e.ok());
  EXPECT_THAT(e.status().message(),
              HasSubstr("unparsable number at line 2, column 3"));
  EXPECT_FALSE(Parse("a 1  2\n").ok());
  EXPECT_FALSE(Parse("a nan\n").ok());
  EXPECT_FALSE(Parse("a 1e999\n").ok());
}

TEST(LoadTextEmbeddingsTest, GloveWidthLine) {
  std::string line = "the";
  for (int i = 0; i < 300; ++i) line += " " + std::to_string(0.001 * i);
  auto e = Parse(line + "\n" + "of" + line.substr(3) + "\n");
  ASSERT_TRUE(e.ok()) << e.status();
  EXPECT_EQ(e->vectors.dim(), 300u);
  EXPECT_EQ(e->vectors.rows(), 2u);
}

TEST(LoadTextEmbeddingsTest, SkipsEmptyLinesAndCarriageReturns) {
  auto e = Parse("\na 1 2\r\n\nb 3 4\r\n");
  ASSERT_TRUE(e.ok()) << e.status();
  EXPECT_THAT(Vec(e->vectors.row(1)), ElementsAre(3.0, 4.0));
}

TEST(LoadTextEmbeddingsTest, WordsAreExactBytes) {
  auto e = Parse("caf\xc3\xa9 1\nCaf\xc3\xa9 2\ncafe 3\n");
  ASSERT_TRUE(e.ok()) << e.status();
  EXPECT_EQ(e->vocabulary.size(), 3u);
  EXPECT_EQ(*e->vocabulary.IdOf("Caf\xc3\xa9"), 1u);
}

TEST(LoadTextEmbeddingsTest, EmptyInputFails) {
  EXPECT_FALSE(Parse("").ok());
  EXPECT_FALSE(Parse("lonely\n").ok());
}

TEST(LoadTextEmbeddingsTest, WriteThenLoadRoundTrip) {
  RngStream rng(1, 0);
  const RealEmbeddingMatrix m = testing::RandomReal(rng, 5, 7);
  const Vocabulary v = *Vocabulary::Create({"a", "b", "c", "d", "e"});
  std::ostringstream out;
  WriteTextEmbeddings(out, v, m, 17);
  auto e = Parse(out.str());
  ASSERT_TRUE(e.ok()) << e.status();
  EXPECT_EQ(e->vocabulary, v);
  EXPECT_TRUE(std::equal(m.values().begin(), m.values().end(),
                         e->vectors.values().begin()));
}

TEST(RealEmbeddingMatrixTest, RejectsNonFinite) {
  EXPECT_FALSE(RealEmbeddingMatrix::Create(1, {NAN}).ok());
  EXPECT_FALSE(RealEmbeddingMatrix::Create(2, {1.0, INFINITY}).ok());
  EXPECT_FALSE(RealEmbeddingMatrix::Create(2, {1.0}).ok());
  EXPECT_FALSE(RealEmbeddingMatrix::Create(0, {}).ok());
}

TEST(BinarizeMedianTest, ThreeValueColumn) {
  // Sorted column [1, 2, 3]; lower median 2; only 3 exceeds it.
  auto codes = BinarizeMedian(Matrix(1, {1, 2, 3}));
  ASSERT_TRUE(codes.ok()) << codes.status();
  EXPECT_EQ(CodeToString(codes->row(0)), "0");
  EXPECT_EQ(CodeToString(codes->row(1)), "0");
  EXPECT_EQ(CodeToString(codes->row(2)), "1");
}

TEST(BinarizeMedianTest, ConstantColumnIsAllZero) {
  auto codes = BinarizeMedian(Matrix(2, {5, 1, 5, 2, 5, 3}));
  ASSERT_TRUE(codes.ok());
  for (size_t i = 0; i < 3; ++i) EXPECT_FALSE(codes->row(i).bit(0));
}

TEST(BinarizeMedianTest, IdentityLikeMatrix) {
  auto codes = BinarizeMedian(Matrix(2, {1, 0, 0, 1}));
  ASSERT_TRUE(codes.ok());
  EXPECT_EQ(CodeToString(codes->row(0)), "10");
  EXPECT_EQ(CodeToString(codes->row(1)), "01");
}

TEST(BinarizeMedianTest, NeedsTwoRows) {
  auto codes = BinarizeMedian(Matrix(3, {1, 2, 3}));
  ASSERT_FALSE(codes.ok());
  EXPECT_THAT(codes.status().message(), HasSubstr("empty matrix"));
}

TEST(BinarizeMedianTest, MatchesSortingOracle) {
  RngStream rng(2, 0);
  for (size_t rows : {2, 3, 8, 51}) {
    const RealEmbeddingMatrix m = testing::RandomReal(rng, rows, 70);
    auto codes = BinarizeMedian(m);
    ASSERT_TRUE(codes.ok());
    EXPECT_EQ(codes->bits(), 70u);
    for (size_t j = 0; j < m.dim(); ++j) {
      std::vector<double> column;
      for (size_t i = 0; i < rows; ++i) column.push_back(m.row(i)[j]);
      std::sort(column.begin(), column.end());
      const double median = column[(rows - 1) / 2];
      for (size_t i = 0; i < rows; ++i) {
        EXPECT_EQ(codes->row(i).bit(j), m.row(i)[j] > median);
      }
    }
    EXPECT_EQ(codes->row(0).words[1] & ~LastWordMask(70), 0u);
  }
}

// Output depends only on within-column ranks.
TEST(BinarizeMedianTest, InvariantUnderMonotoneColumnMaps) {
  RngStream rng(3, 0);
  const size_t rows = 20, dim = 16;
  const RealEmbeddingMatrix m = testing::RandomReal(rng, rows, dim);
  std::vector<double> mapped(m.values().begin(), m.values().end());
  for (size_t j = 0; j < dim; ++j) {
    const double scale = 0.1 + rng.UniformDouble() * 10.0;
    const double shift = SampleStandardNormal(rng) * 5.0;
    for (size_t i = 0; i < rows; ++i) {
      double& x = mapped[i * dim + j];
      switch (j % 3) {
        case 0: x = scale * x + shift; break;
        case 1: x = std::exp(x) + shift; break;
        default: x = scale * x * x * x; break;
      }
    }
  }
  EXPECT_EQ(*BinarizeMedian(m), *BinarizeMedian(Matrix(dim, mapped)));
}

TEST(BinarizeHyperplaneTest, ProjectsToTargetWidth) {
  RngStream rng(4, 0);
  const RealEmbeddingMatrix m = testing::RandomReal(rng, 10, 300);
  auto codes = BinarizeHyperplane(m, 256, 9);
  ASSERT_TRUE(codes.ok()) << codes.status();
  EXPECT_EQ(codes->bits(), 256u);
  EXPECT_EQ(codes->words_per_code() * sizeof(uint64_t), 32u);
  EXPECT_EQ(*BinarizeHyperplane(m, 256, 9), *codes);
  EXPECT_NE(*BinarizeHyperplane(m, 256, 10), *codes);
}

TEST(BinarizeHyperplaneTest, ZeroVectorGivesZeroCode) {
  auto codes = BinarizeHyperplane(Matrix(3, {0, 0, 0, 1, 2, 3}), 70, 1);
  ASSERT_TRUE(codes.ok());
  for (uint64_t w : codes->row(0).words) EXPECT_EQ(w, 0u);
  EXPECT_EQ(codes->row(1).words[1] & ~LastWordMask(70), 0u);
}

TEST(BinarizeHyperplaneTest, IdenticalRowsIdenticalCodes) {
  for (uint64_t seed : {0, 1, 77}) {
    auto codes = BinarizeHyperplane(Matrix(2, {0.3, -1, 0.3, -1}), 33, seed);
    ASSERT_TRUE(codes.ok());
    EXPECT_EQ(CodeToString(codes->row(0)), CodeToString(codes->row(1)));
  }
}

TEST(BinarizeHyperplaneTest, Errors) {
  EXPECT_FALSE(BinarizeHyperplane(Matrix(1, {1}), 0, 0).ok());
  EXPECT_FALSE(BinarizeHyperplane(RealEmbeddingMatrix(), 8, 0).ok());
}

}  // namespace
}  // namespace brr
