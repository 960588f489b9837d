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

#include "brr/binary_codes.h"

#include <utility>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"

namespace brr {

absl::StatusOr<BinaryCode> BinaryCode::FromString(std::string_view bits) {
  BinaryCode code(static_cast<uint32_t>(bits.size()));
  for (size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] != '0' && bits[i] != '1') {
      return absl::InvalidArgumentError(
          absl::StrCat("invalid bit character at position ", i));
    }
    code.set_bit(i, bits[i] == '1');
  }
  return code;
}

BinaryCode BinaryCode::FromInteger(uint64_t value, uint32_t bits) {
  BinaryCode code(bits);
  if (bits > 0) {
    code.words_[0] = bits >= 64 ? value : value & LastWordMask(bits);
  }
  return code;
}

void BinaryCode::set_bit(size_t i, bool value) {
  const uint64_t mask = uint64_t{1} << (i % 64);
  if (value) {
    words_[i / 64] |= mask;
  } else {
    words_[i / 64] &= ~mask;
  }
}

std::string BinaryCode::ToString() const { return CodeToString(view()); }

std::string CodeToString(CodeView code) {
  std::string out(code.bits, '0');
  for (size_t i = 0; i < code.bits; ++i) {
    if (code.bit(i)) out[i] = '1';
  }
  return out;
}

absl::StatusOr<BinaryCodeMatrix> BinaryCodeMatrix::Create(
    uint32_t bits, size_t rows, std::vector<uint64_t> words) {
  if (bits == 0) {
    return absl::InvalidArgumentError("code width must be positive");
  }
  const size_t stride = WordsForBits(bits);
  if (words.size() != rows * stride) {
    return absl::InvalidArgumentError(
        absl::StrCat("expected ", rows * stride, " words for ", rows,
                     " codes of ", bits, " bits, got ", words.size()));
  }
  const uint64_t mask = LastWordMask(bits);
  for (size_t r = 0; r < rows; ++r) {
    if ((words[r * stride + stride - 1] & ~mask) != 0) {
      return absl::InvalidArgumentError(
          absl::StrCat("nonzero padding bits in code ", r));
    }
  }
  return BinaryCodeMatrix(bits, rows, std::move(words));
}

absl::StatusOr<BinaryCodeMatrix> BinaryCodeMatrix::FromCodes(
    std::span<const BinaryCode> codes) {
  if (codes.empty()) {
    return absl::InvalidArgumentError("no codes");
  }
  const uint32_t bits = codes.front().bits();
  std::vector<uint64_t> words;
  words.reserve(codes.size() * WordsForBits(bits));
  for (const BinaryCode& code : codes) {
    if (code.bits() != bits) {
      return absl::InvalidArgumentError(
          absl::StrCat("bit width mismatch: ", code.bits(), " vs ", bits));
    }
    words.insert(words.end(), code.words().begin(), code.words().end());
  }
  return Create(bits, codes.size(), std::move(words));
}

absl::StatusOr<uint32_t> Hamming(CodeView a, CodeView b) {
  if (a.bits != b.bits || a.words.size() != b.words.size()) {
    return absl::InvalidArgumentError(
        absl::StrCat("bit width mismatch: ", a.bits, " vs ", b.bits));
  }
  return HammingWords(a.words.data(), b.words.data(), a.words.size());
}

}  // namespace brr
