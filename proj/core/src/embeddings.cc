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
#include <charconv>
#include <cmath>
#include <fstream>
#include <utility>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_format.h"
#include "brr/noise.h"
#include "brr/rng.h"

namespace brr {

absl::StatusOr<Vocabulary> Vocabulary::Create(std::vector<std::string> words) {
  Vocabulary vocabulary;
  vocabulary.ids_.reserve(words.size());
  for (size_t i = 0; i < words.size(); ++i) {
    auto [it, inserted] =
        vocabulary.ids_.emplace(words[i], static_cast<uint32_t>(i));
    if (!inserted) {
      return absl::InvalidArgumentError(
          absl::StrCat("duplicate word '", words[i], "'"));
    }
  }
  vocabulary.words_ = std::move(words);
  return vocabulary;
}

std::optional<uint32_t> Vocabulary::IdOf(std::string_view word) const {
  auto it = ids_.find(word);
  if (it == ids_.end()) return std::nullopt;
  return it->second;
}

size_t Vocabulary::TextBytes() const {
  size_t total = 0;
  for (const std::string& w : words_) total += w.size();
  return total;
}

absl::StatusOr<RealEmbeddingMatrix> RealEmbeddingMatrix::Create(
    size_t dim, std::vector<double> values) {
  if (dim == 0) {
    return absl::InvalidArgumentError("dimension must be positive");
  }
  if (values.size() % dim != 0) {
    return absl::InvalidArgumentError(absl::StrCat(
        values.size(), " values do not fill rows of dimension ", dim));
  }
  for (size_t i = 0; i < values.size(); ++i) {
    if (!std::isfinite(values[i])) {
      return absl::InvalidArgumentError(absl::StrCat(
          "non-finite value at row ", i / dim, ", column ", i % dim));
    }
  }
  return RealEmbeddingMatrix(dim, std::move(values));
}

absl::StatusOr<TextEmbeddings> LoadTextEmbeddings(std::istream& input) {
  std::vector<std::string> words;
  std::vector<double> values;
  size_t dim = 0;
  std::string line;
  size_t line_no = 0;
  while (std::getline(input, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;

    std::string_view rest(line);
    size_t space = rest.find(' ');
    words.emplace_back(rest.substr(0, space));
    size_t count = 0;
    while (space != std::string_view::npos) {
      rest.remove_prefix(space + 1);
      space = rest.find(' ');
      const std::string_view field = rest.substr(0, space);
      ++count;
      double value = 0.0;
      const char* end = field.data() + field.size();
      auto [ptr, ec] = std::from_chars(field.data(), end, value);
      if (field.empty() || ec != std::errc() || ptr != end ||
          !std::isfinite(value)) {
        return absl::InvalidArgumentError(
            absl::StrCat("unparsable number at line ", line_no, ", column ",
                         count + 1));
      }
      values.push_back(value);
    }
    if (dim == 0) {
      if (count == 0) {
        return absl::InvalidArgumentError(absl::StrCat(
            "inconsistent dimension at line ", line_no, ": no values"));
      }
      dim = count;
    } else if (count != dim) {
      return absl::InvalidArgumentError(
          absl::StrCat("inconsistent dimension at line ", line_no, ": ", count,
                       " values, expected ", dim));
    }
  }
  if (words.empty()) {
    return absl::InvalidArgumentError("empty matrix: no embeddings in input");
  }
  TextEmbeddings out;
  auto vocabulary = Vocabulary::Create(std::move(words));
  if (!vocabulary.ok()) return vocabulary.status();
  auto vectors = RealEmbeddingMatrix::Create(dim, std::move(values));
  if (!vectors.ok()) return vectors.status();
  out.vocabulary = *std::move(vocabulary);
  out.vectors = *std::move(vectors);
  return out;
}

absl::StatusOr<TextEmbeddings> LoadTextEmbeddingsFile(const std::string& path) {
  std::ifstream input(path, std::ios::binary);
  if (!input) {
    return absl::NotFoundError(absl::StrCat("cannot open ", path));
  }
  return LoadTextEmbeddings(input);
}

void WriteTextEmbeddings(std::ostream& output, const Vocabulary& vocabulary,
                         const RealEmbeddingMatrix& vectors, int precision) {
  for (size_t i = 0; i < vocabulary.size(); ++i) {
    output << vocabulary.word(i);
    for (double v : vectors.row(i)) {
      output << ' ' << absl::StrFormat("%.*g", precision, v);
    }
    output << '\n';
  }
}

absl::StatusOr<BinaryCodeMatrix> BinarizeMedian(
    const RealEmbeddingMatrix& real) {
  const size_t rows = real.rows();
  const size_t dim = real.dim();
  if (rows < 2) {
    return absl::InvalidArgumentError(
        "empty matrix: median binarization needs at least two rows");
  }
  const size_t stride = WordsForBits(dim);
  std::vector<uint64_t> words(rows * stride, 0);
  std::vector<double> column(rows);
  const size_t lower_median = (rows - 1) / 2;
  for (size_t j = 0; j < dim; ++j) {
    for (size_t i = 0; i < rows; ++i) column[i] = real.row(i)[j];
    std::nth_element(column.begin(), column.begin() + lower_median,
                     column.end());
    const double median = column[lower_median];
    for (size_t i = 0; i < rows; ++i) {
      if (real.row(i)[j] > median) {
        words[i * stride + j / 64] |= uint64_t{1} << (j % 64);
      }
    }
  }
  return BinaryCodeMatrix::Create(static_cast<uint32_t>(dim), rows,
                                  std::move(words));
}

absl::StatusOr<BinaryCodeMatrix> BinarizeHyperplane(
    const RealEmbeddingMatrix& real, uint32_t target_bits, uint64_t seed) {
  if (target_bits == 0) {
    return absl::InvalidArgumentError("target_bits must be positive");
  }
  const size_t rows = real.rows();
  const size_t dim = real.dim();
  if (rows == 0) {
    return absl::InvalidArgumentError("empty matrix: no rows to binarize");
  }
  std::vector<double> directions(size_t{target_bits} * dim);
  for (uint32_t j = 0; j < target_bits; ++j) {
    RngStream rng(seed, j);
    SampleUnitDirection(
        std::span<double>(directions).subspan(size_t{j} * dim, dim), rng);
  }
  const size_t stride = WordsForBits(target_bits);
  std::vector<uint64_t> words(rows * stride, 0);
  for (size_t i = 0; i < rows; ++i) {
    const std::span<const double> x = real.row(i);
    for (uint32_t j = 0; j < target_bits; ++j) {
      const double* h = directions.data() + size_t{j} * dim;
      double dot = 0.0;
      for (size_t k = 0; k < dim; ++k) dot += x[k] * h[k];
      if (dot > 0.0) words[i * stride + j / 64] |= uint64_t{1} << (j % 64);
    }
  }
  return BinaryCodeMatrix::Create(target_bits, rows, std::move(words));
}

}  // namespace brr
