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

#include "brr/bemb_io.h"

#include <sstream>
#include <string>
#include <vector>

#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "test_util.h"

namespace brr {
namespace {

using ::testing::HasSubstr;

std::string Serialize(const Vocabulary& v, const BinaryCodeMatrix& c) {
  std::ostringstream out;
  EXPECT_TRUE(WriteBemb(out, v, c).ok());
  return out.str();
}

absl::StatusOr<BinaryEmbeddings> Deserialize(const std::string& bytes) {
  std::istringstream in(bytes);
  return ReadBemb(in);
}

TEST(BembTest, ExactByteLayout) {
  const Vocabulary v = *Vocabulary::Create({"a", "\xc3\xa9"});
  const std::vector<BinaryCode> codes = {*BinaryCode::FromString("101"),
                                         *BinaryCode::FromString("010")};
  const std::string bytes = Serialize(v, *BinaryCodeMatrix::FromCodes(codes));
  const std::string expected(
      "BEMB"
      "\x01\x00\x00\x00"
      "\x02\x00\x00\x00"
      "\x03\x00\x00\x00"
      "\x01\x00"
      "a"
      "\x02\x00"
      "\xc3\xa9"
      "\x05\x00\x00\x00\x00\x00\x00\x00"
      "\x02\x00\x00\x00\x00\x00\x00\x00",
      4 + 12 + 3 + 4 + 16);
  EXPECT_EQ(bytes, expected);
  EXPECT_EQ(BembFileBytes(v, 3), expected.size());
}

// Random vocabularies, including multi-byte words and widths that are not
// multiples of 64, survive write -> read -> write bit for bit.
TEST(BembTest, RoundTripIsBitIdentical) {
  RngStream rng(21, 0);
  const std::vector<std::string> alphabet = {"a", "\xc3\xa9", "\xe6\x97\xa5",
                                             "\xf0\x9f\x98\x80", "z", "-"};
  for (uint32_t bits : {1u, 7u, 63u, 64u, 65u, 70u, 128u, 200u, 256u}) {
    std::vector<std::string> words;
    for (int i = 0; i < 40; ++i) {
      std::string word = std::to_string(i);
      const size_t len = rng.UniformBelow(5);
      for (size_t k = 0; k < len; ++k) {
        word += alphabet[rng.UniformBelow(alphabet.size())];
      }
      words.push_back(word);
    }
    const Vocabulary v = *Vocabulary::Create(words);
    const BinaryCodeMatrix c = testing::RandomCodes(rng, words.size(), bits);
    const std::string bytes = Serialize(v, c);
    auto back = Deserialize(bytes);
    ASSERT_TRUE(back.ok()) << back.status();
    EXPECT_EQ(back->vocabulary, v);
    EXPECT_EQ(back->codes, c);
    EXPECT_EQ(Serialize(back->vocabulary, back->codes), bytes);
    EXPECT_EQ(BembFileBytes(v, bits), bytes.size());
  }
}

TEST(BembTest, RejectsBadMagicVersionAndTruncation) {
  const Vocabulary v = *Vocabulary::Create({"x"});
  const std::vector<BinaryCode> codes = {*BinaryCode::FromString("1")};
  const std::string good = Serialize(v, *BinaryCodeMatrix::FromCodes(codes));

  std::string bad_magic = good;
  bad_magic[0] = 'X';
  EXPECT_THAT(Deserialize(bad_magic).status().message(),
              HasSubstr("bad magic"));

  std::string bad_version = good;
  bad_version[4] = 2;
  EXPECT_THAT(Deserialize(bad_version).status().message(),
              HasSubstr("unsupported BEMB version"));

  for (size_t cut = 0; cut < good.size(); ++cut) {
    EXPECT_FALSE(Deserialize(good.substr(0, cut)).ok()) << cut;
  }

  std::string padded = good;
  padded[padded.size() - 8] = 0x03;  // bit 1 of a 1-bit code
  EXPECT_THAT(Deserialize(padded).status().message(), HasSubstr("padding"));
}

TEST(BembTest, RejectsDuplicateWordsOnRead) {
  std::string bytes(
      "BEMB\x01\x00\x00\x00\x02\x00\x00\x00\x01\x00\x00\x00"
      "\x01\x00q\x01\x00q"
      "\x00\x00\x00\x00\x00\x00\x00\x00\x00\x00\x00\x00\x00\x00\x00\x00",
      16 + 6 + 16);
  EXPECT_THAT(Deserialize(bytes).status().message(),
              HasSubstr("duplicate word"));
}

TEST(BembTest, WriteRejectsMismatchedRows) {
  const Vocabulary v = *Vocabulary::Create({"x", "y"});
  const std::vector<BinaryCode> codes = {*BinaryCode::FromString("1")};
  std::ostringstream out;
  EXPECT_FALSE(WriteBemb(out, v, *BinaryCodeMatrix::FromCodes(codes)).ok());
}

}  // namespace
}  // namespace brr
