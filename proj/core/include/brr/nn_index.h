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

#ifndef BRR_NN_INDEX_H_
#define BRR_NN_INDEX_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "absl/status/statusor.h"
#include "brr/binary_codes.h"
#include "brr/embeddings.h"

namespace brr {

struct Acceleration {
  enum class Kind { kLinearScan, kMultiIndex };

  Kind kind = Kind::kLinearScan;
  uint32_t substring_count = 4;

  static Acceleration LinearScan() { return {Kind::kLinearScan, 0}; }
  static Acceleration MultiIndex(uint32_t substring_count = 4) {
    return {Kind::kMultiIndex, substring_count};
  }
};

struct HammingMatch {
  uint32_t id = 0;
  uint32_t distance = 0;

  friend bool operator==(const HammingMatch&, const HammingMatch&) = default;
};

// Instrumentation for multi-index queries.
struct HammingQueryStats {
  // Candidate ids whose full distance was computed (may repeat).
  size_t candidates_checked = 0;
  // Largest per-substring search radius that was enumerated.
  uint32_t radius_reached = 0;
  // True when the search gave up on bucket probing and scanned every code.
  bool fell_back_to_scan = false;
};

// Exact Hamming nearest-neighbour index. Ties go to the smallest id.
//
// The multi-index mode splits each code into contiguous substrings and
// keeps, per substring, the ids sorted by substring value. A query probes
// the buckets within radius s = 0, 1, 2, ... of each query substring. A
// code at distance d matches some substring within floor(d / m), so once the
// best distance found is below m * (s + 1) no unseen code can win. When the
// next radius would probe more buckets than a linear scan touches codes, the
// query finishes with a scan instead.
class HammingIndex {
 public:
  // Fails with InvalidArgument ("empty index") on zero codes.
  static absl::StatusOr<HammingIndex> Build(
      BinaryCodeMatrix codes, Acceleration acceleration = Acceleration{});

  // Fails with InvalidArgument ("bit width mismatch").
  absl::StatusOr<HammingMatch> Nearest(CodeView query) const;

  // `query` must have words_per_code() words with zero padding.
  HammingMatch NearestUnchecked(const uint64_t* query) const;

  // Multi-index query with instrumentation. `candidates`, if non-null,
  // receives every id whose distance was evaluated. Linear-scan indexes
  // report every id.
  HammingMatch NearestWithStats(const uint64_t* query,
                                HammingQueryStats* stats,
                                std::vector<uint32_t>* candidates) const;

  HammingMatch LinearScan(const uint64_t* query) const;

  const BinaryCodeMatrix& codes() const { return codes_; }
  const Acceleration& acceleration() const { return acceleration_; }
  uint32_t bits() const { return codes_.bits(); }
  size_t size() const { return codes_.rows(); }
  size_t words_per_code() const { return codes_.words_per_code(); }
  // Effective substring count; raised so no substring exceeds 64 bits.
  uint32_t substring_count() const {
    return static_cast<uint32_t>(tables_.size());
  }

  // Bytes of packed codes.
  size_t PayloadBytes() const { return codes_.PayloadBytes(); }
  // Bytes of multi-index bucket tables (0 for linear scan).
  size_t BucketBytes() const;

 private:
  // One substring: distinct keys sorted ascending, with ids grouped by key.
  struct SubstringTable {
    uint32_t begin_bit = 0;
    uint32_t width = 0;
    std::vector<uint64_t> keys;
    std::vector<uint32_t> offsets;  // keys.size() + 1 entries
    std::vector<uint32_t> ids;
  };

  HammingIndex(BinaryCodeMatrix codes, Acceleration acceleration)
      : codes_(std::move(codes)), acceleration_(acceleration) {}

  void BuildTables(uint32_t substring_count);
  HammingMatch MultiIndexSearch(const uint64_t* query, HammingQueryStats* stats,
                                std::vector<uint32_t>* candidates) const;

  BinaryCodeMatrix codes_;
  Acceleration acceleration_;
  std::vector<SubstringTable> tables_;
};

struct EuclidMatch {
  uint32_t id = 0;
  double distance = 0.0;
};

// Exact Euclidean nearest-neighbour index over real vectors. Distances are
// compared squared; ties go to the smallest id.
class EuclidIndex {
 public:
  // Fails with InvalidArgument ("empty index") on zero rows.
  static absl::StatusOr<EuclidIndex> Build(RealEmbeddingMatrix vectors);

  // Fails with InvalidArgument ("dimension mismatch").
  absl::StatusOr<EuclidMatch> Nearest(std::span<const double> query) const;
  EuclidMatch NearestUnchecked(std::span<const double> query) const;

  const RealEmbeddingMatrix& vectors() const { return vectors_; }
  size_t dim() const { return vectors_.dim(); }
  size_t size() const { return vectors_.rows(); }

 private:
  explicit EuclidIndex(RealEmbeddingMatrix vectors)
      : vectors_(std::move(vectors)) {}

  RealEmbeddingMatrix vectors_;
};

}  // namespace brr

#endif  // BRR_NN_INDEX_H_
