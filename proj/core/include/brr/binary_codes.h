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

#ifndef BRR_BINARY_CODES_H_
#define BRR_BINARY_CODES_H_

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "absl/status/statusor.h"

namespace brr {

// Bit i of a code lives in machine word i / 64 at position i % 64, least
// significant bit first. Bits at positions >= bits() are always zero.
constexpr size_t WordsForBits(size_t bits) { return (bits + 63) / 64; }

// Mask selecting the valid bits of the last word of a `bits`-wide code.
constexpr uint64_t LastWordMask(size_t bits) {
  const size_t tail = bits % 64;
  return tail == 0 ? ~uint64_t{0} : (uint64_t{1} << tail) - 1;
}

// Non-owning view of one packed code.
struct CodeView {
  std::span<const uint64_t> words;
  uint32_t bits = 0;

  bool bit(size_t i) const { return (words[i / 64] >> (i % 64)) & 1U; }
};

// An owned, packed binary code.
class BinaryCode {
 public:
  BinaryCode() = default;
  explicit BinaryCode(uint32_t bits)
      : bits_(bits), words_(WordsForBits(bits), 0) {}
  explicit BinaryCode(CodeView view)
      : bits_(view.bits), words_(view.words.begin(), view.words.end()) {}

  // Parses a string of '0'/'1' characters; character i becomes bit i.
  static absl::StatusOr<BinaryCode> FromString(std::string_view bits);
  // Builds a code of `bits` bits from the low bits of `value`.
  static BinaryCode FromInteger(uint64_t value, uint32_t bits);

  uint32_t bits() const { return bits_; }
  bool bit(size_t i) const { return view().bit(i); }
  void set_bit(size_t i, bool value);

  std::span<uint64_t> words() { return words_; }
  std::span<const uint64_t> words() const { return words_; }
  CodeView view() const { return CodeView{words_, bits_}; }

  // Inverse of FromString.
  std::string ToString() const;

  friend bool operator==(const BinaryCode&, const BinaryCode&) = default;

 private:
  uint32_t bits_ = 0;
  std::vector<uint64_t> words_;
};

std::string CodeToString(CodeView code);

// Row-major matrix of packed codes sharing one bit width.
class BinaryCodeMatrix {
 public:
  BinaryCodeMatrix() = default;

  // `words` holds rows * WordsForBits(bits) machine words. Fails when a
  // padding bit is set or the size does not match.
  static absl::StatusOr<BinaryCodeMatrix> Create(uint32_t bits, size_t rows,
                                                 std::vector<uint64_t> words);
  // All codes must share the same width.
  static absl::StatusOr<BinaryCodeMatrix> FromCodes(
      std::span<const BinaryCode> codes);

  uint32_t bits() const { return bits_; }
  size_t rows() const { return rows_; }
  size_t words_per_code() const { return words_per_code_; }

  CodeView row(size_t i) const {
    return CodeView{std::span<const uint64_t>(data_).subspan(
                        i * words_per_code_, words_per_code_),
                    bits_};
  }
  const uint64_t* row_data(size_t i) const {
    return data_.data() + i * words_per_code_;
  }
  std::span<const uint64_t> data() const { return data_; }

  size_t PayloadBytes() const { return data_.size() * sizeof(uint64_t); }

  friend bool operator==(const BinaryCodeMatrix&,
                         const BinaryCodeMatrix&) = default;

 private:
  BinaryCodeMatrix(uint32_t bits, size_t rows, std::vector<uint64_t> data)
      : bits_(bits),
        rows_(rows),
        words_per_code_(WordsForBits(bits)),
        data_(std::move(data)) {}

  uint32_t bits_ = 0;
  size_t rows_ = 0;
  size_t words_per_code_ = 0;
  std::vector<uint64_t> data_;
};

inline uint32_t HammingWords(const uint64_t* a, const uint64_t* b,
                             size_t words) {
  uint32_t distance = 0;
  for (size_t i = 0; i < words; ++i) {
    distance += static_cast<uint32_t>(std::popcount(a[i] ^ b[i]));
  }
  return distance;
}

// Number of differing bit positions. Fails with InvalidArgument
// ("bit width mismatch") when the widths differ.
absl::StatusOr<uint32_t> Hamming(CodeView a, CodeView b);

}  // namespace brr

#endif  // BRR_BINARY_CODES_H_
