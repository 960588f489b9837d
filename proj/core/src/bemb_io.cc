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

#include <array>
#include <cstring>
#include <fstream>
#include <limits>
#include <utility>
#include <vector>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"

namespace brr {
namespace {

template <typename T>
void PutLittleEndian(std::ostream& out, T value) {
  std::array<char, sizeof(T)> bytes;
  for (size_t i = 0; i < sizeof(T); ++i) {
    bytes[i] = static_cast<char>((value >> (8 * i)) & 0xff);
  }
  out.write(bytes.data(), bytes.size());
}

template <typename T>
bool GetLittleEndian(std::istream& in, T& value) {
  std::array<unsigned char, sizeof(T)> bytes;
  if (!in.read(reinterpret_cast<char*>(bytes.data()), bytes.size())) {
    return false;
  }
  value = 0;
  for (size_t i = 0; i < sizeof(T); ++i) {
    value |= static_cast<T>(bytes[i]) << (8 * i);
  }
  return true;
}

absl::Status Truncated(std::string_view what) {
  return absl::DataLossError(absl::StrCat("truncated BEMB file: ", std::string(what)));
}

}  // namespace

absl::Status WriteBemb(std::ostream& output, const Vocabulary& vocabulary,
                       const BinaryCodeMatrix& codes) {
  if (vocabulary.size() != codes.rows()) {
    return absl::InvalidArgumentError(
        absl::StrCat("vocabulary mismatch: ", vocabulary.size(), " words, ",
                     codes.rows(), " codes"));
  }
  if (vocabulary.size() > std::numeric_limits<uint32_t>::max()) {
    return absl::InvalidArgumentError("too many words for BEMB");
  }
  for (const std::string& word : vocabulary.words()) {
    if (word.size() > std::numeric_limits<uint16_t>::max()) {
      return absl::InvalidArgumentError(
          absl::StrCat("word longer than 65535 bytes: ", word.substr(0, 32)));
    }
  }
  output.write(kBembMagic, sizeof(kBembMagic));
  PutLittleEndian<uint32_t>(output, kBembVersion);
  PutLittleEndian<uint32_t>(output, static_cast<uint32_t>(vocabulary.size()));
  PutLittleEndian<uint32_t>(output, codes.bits());
  for (const std::string& word : vocabulary.words()) {
    PutLittleEndian<uint16_t>(output, static_cast<uint16_t>(word.size()));
    output.write(word.data(), static_cast<std::streamsize>(word.size()));
  }
  for (uint64_t word : codes.data()) PutLittleEndian<uint64_t>(output, word);
  if (!output) return absl::DataLossError("write failed");
  return absl::OkStatus();
}

absl::Status WriteBembFile(const std::string& path,
                           const Vocabulary& vocabulary,
                           const BinaryCodeMatrix& codes) {
  std::ofstream output(path, std::ios::binary | std::ios::trunc);
  if (!output) {
    return absl::PermissionDeniedError(absl::StrCat("cannot write ", path));
  }
  return WriteBemb(output, vocabulary, codes);
}

absl::StatusOr<BinaryEmbeddings> ReadBemb(std::istream& input) {
  char magic[4];
  if (!input.read(magic, sizeof(magic))) return Truncated("magic");
  if (std::memcmp(magic, kBembMagic, sizeof(magic)) != 0) {
    return absl::InvalidArgumentError("not a BEMB file (bad magic)");
  }
  uint32_t version = 0, count = 0, bits = 0;
  if (!GetLittleEndian(input, version)) return Truncated("version");
  if (version != kBembVersion) {
    return absl::InvalidArgumentError(
        absl::StrCat("unsupported BEMB version ", version));
  }
  if (!GetLittleEndian(input, count)) return Truncated("word count");
  if (!GetLittleEndian(input, bits)) return Truncated("bits per code");
  if (bits == 0) return absl::InvalidArgumentError("zero-width codes");

  std::vector<std::string> words;
  words.reserve(count);
  for (uint32_t i = 0; i < count; ++i) {
    uint16_t length = 0;
    if (!GetLittleEndian(input, length)) return Truncated("word length");
    std::string word(length, '\0');
    if (length > 0 && !input.read(word.data(), length)) {
      return Truncated("word bytes");
    }
    words.push_back(std::move(word));
  }
  std::vector<uint64_t> data(size_t{count} * WordsForBits(bits));
  for (uint64_t& word : data) {
    if (!GetLittleEndian(input, word)) return Truncated("codes");
  }

  auto vocabulary = Vocabulary::Create(std::move(words));
  if (!vocabulary.ok()) return vocabulary.status();
  auto codes = BinaryCodeMatrix::Create(bits, count, std::move(data));
  if (!codes.ok()) return codes.status();
  return BinaryEmbeddings{*std::move(vocabulary), *std::move(codes)};
}

absl::StatusOr<BinaryEmbeddings> ReadBembFile(const std::string& path) {
  std::ifstream input(path, std::ios::binary);
  if (!input) {
    return absl::NotFoundError(absl::StrCat("cannot open ", path));
  }
  return ReadBemb(input);
}

uint64_t BembFileBytes(const Vocabulary& vocabulary, uint32_t bits) {
  return sizeof(kBembMagic) + 3 * sizeof(uint32_t) +
         vocabulary.size() * (sizeof(uint16_t) +
                              WordsForBits(bits) * sizeof(uint64_t)) +
         vocabulary.TextBytes();
}

bool LooksLikeBemb(const std::string& path) {
  std::ifstream input(path, std::ios::binary);
  char magic[4];
  return input.read(magic, sizeof(magic)) &&
         std::memcmp(magic, kBembMagic, sizeof(magic)) == 0;
}

}  // namespace brr
