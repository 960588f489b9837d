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

#ifndef BRR_EMBEDDINGS_H_
#define BRR_EMBEDDINGS_H_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <istream>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "absl/status/statusor.h"
#include "brr/binary_codes.h"

namespace brr {

// Ordered set of distinct words with dense ids 0..size()-1. Words are exact
// byte strings; no normalization is applied.
class Vocabulary {
 public:
  Vocabulary() = default;

  // Fails with InvalidArgument ("duplicate word") if a word repeats.
  static absl::StatusOr<Vocabulary> Create(std::vector<std::string> words);

  size_t size() const { return words_.size(); }
  bool empty() const { return words_.empty(); }
  const std::string& word(size_t id) const { return words_[id]; }
  const std::vector<std::string>& words() const { return words_; }
  std::optional<uint32_t> IdOf(std::string_view word) const;

  // Sum of the UTF-8 byte lengths of all words.
  size_t TextBytes() const;

  friend bool operator==(const Vocabulary& a, const Vocabulary& b) {
    return a.words_ == b.words_;
  }

 private:
  struct StringHash {
    using is_transparent = void;
    size_t operator()(std::string_view s) const {
      return std::hash<std::string_view>{}(s);
    }
  };

  std::vector<std::string> words_;
  std::unordered_map<std::string, uint32_t, StringHash, std::equal_to<>> ids_;
};

// Dense row-major matrix of finite reals, one row per vocabulary id.
class RealEmbeddingMatrix {
 public:
  RealEmbeddingMatrix() = default;

  // `values` holds rows * dim entries. Fails on dim == 0, a size mismatch,
  // or any non-finite entry.
  static absl::StatusOr<RealEmbeddingMatrix> Create(size_t dim,
                                                    std::vector<double> values);

  size_t rows() const { return dim_ == 0 ? 0 : values_.size() / dim_; }
  size_t dim() const { return dim_; }
  std::span<const double> row(size_t i) const {
    return std::span<const double>(values_).subspan(i * dim_, dim_);
  }
  std::span<const double> values() const { return values_; }

 private:
  RealEmbeddingMatrix(size_t dim, std::vector<double> values)
      : dim_(dim), values_(std::move(values)) {}

  size_t dim_ = 0;
  std::vector<double> values_;
};

struct TextEmbeddings {
  Vocabulary vocabulary;
  RealEmbeddingMatrix vectors;
};

struct BinaryEmbeddings {
  Vocabulary vocabulary;
  BinaryCodeMatrix codes;
};

// Parses GloVe-style text: one `word v1 v2 ... vn` entry per line, single
// spaces between fields. Empty lines are skipped and a trailing '\r' is
// ignored. The dimension comes from the first entry.
//
// Errors (all InvalidArgument, message prefixed with the error kind):
//   "inconsistent dimension at line N"
//   "duplicate word 'w'"
//   "unparsable number at line N, column C" (C is the 1-based field index)
absl::StatusOr<TextEmbeddings> LoadTextEmbeddings(std::istream& input);
absl::StatusOr<TextEmbeddings> LoadTextEmbeddingsFile(const std::string& path);

// Writes the GloVe text form with `precision` significant digits per value.
void WriteTextEmbeddings(std::ostream& output, const Vocabulary& vocabulary,
                         const RealEmbeddingMatrix& vectors,
                         int precision = 6);

// Bit j of row i is set iff value(i, j) is strictly greater than the lower
// median of column j. Output width equals the input dimension. Requires at
// least two rows ("empty matrix" otherwise).
absl::StatusOr<BinaryCodeMatrix> BinarizeMedian(
    const RealEmbeddingMatrix& real);

// Bit j of row i is set iff dot(row i, h_j) > 0, where h_j is a unit
// direction drawn from RngStream(seed, j). Same seed, same output.
absl::StatusOr<BinaryCodeMatrix> BinarizeHyperplane(
    const RealEmbeddingMatrix& real, uint32_t target_bits, uint64_t seed);

}  // namespace brr

#endif  // BRR_EMBEDDINGS_H_
