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

#ifndef BRR_BEMB_IO_H_
#define BRR_BEMB_IO_H_

#include <cstdint>
#include <istream>
#include <ostream>
#include <string>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "brr/binary_codes.h"
#include "brr/embeddings.h"

namespace brr {

// BEMB layout, all integers little-endian:
//
//   "BEMB"                       4 bytes magic
//   version                      u32, always 1
//   word count                   u32
//   bits per code                u32
//   per word: byte length (u16) followed by the UTF-8 bytes
//   per word: WordsForBits(bits) u64 words of packed code
inline constexpr char kBembMagic[4] = {'B', 'E', 'M', 'B'};
inline constexpr uint32_t kBembVersion = 1;

absl::Status WriteBemb(std::ostream& output, const Vocabulary& vocabulary,
                       const BinaryCodeMatrix& codes);
absl::Status WriteBembFile(const std::string& path,
                           const Vocabulary& vocabulary,
                           const BinaryCodeMatrix& codes);

absl::StatusOr<BinaryEmbeddings> ReadBemb(std::istream& input);
absl::StatusOr<BinaryEmbeddings> ReadBembFile(const std::string& path);

// Exact size in bytes of the serialized file.
uint64_t BembFileBytes(const Vocabulary& vocabulary, uint32_t bits);

// True if the file at `path` starts with the BEMB magic.
bool LooksLikeBemb(const std::string& path);

}  // namespace brr

#endif  // BRR_BEMB_IO_H_
