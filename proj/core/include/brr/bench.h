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

#ifndef BRR_BENCH_H_
#define BRR_BENCH_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "brr/binary_codes.h"
#include "brr/embeddings.h"
#include "brr/mechanisms.h"
#include "brr/nn_index.h"

namespace brr {

// Storage accounting. Real vectors are counted as 32-bit floats, codes as
// packed 64-bit words; both sides add the vocabulary text bytes. The file
// fields are the exact sizes of a GloVe text file (6 significant digits) and
// of the BEMB file for the same data.
struct StorageReport {
  uint64_t real_payload_bytes = 0;
  uint64_t binary_payload_bytes = 0;
  uint64_t vocabulary_bytes = 0;
  uint64_t real_bytes = 0;
  uint64_t binary_bytes = 0;
  double payload_compression_pct = 0.0;
  double compression_pct = 0.0;
  uint64_t real_text_file_bytes = 0;
  uint64_t bemb_file_bytes = 0;
  double file_compression_pct = 0.0;
};

// 100 * (1 - binary / real).
double CompressionPct(uint64_t binary_bytes, uint64_t real_bytes);

// Fails with InvalidArgument ("vocabulary mismatch") when either matrix does
// not have one row per word.
absl::StatusOr<StorageReport> MeasureStorage(const Vocabulary& vocabulary,
                                             const RealEmbeddingMatrix& real,
                                             const BinaryCodeMatrix& codes);

// Bytes of the GloVe text form written with `precision` significant digits.
uint64_t TextEmbeddingBytes(const Vocabulary& vocabulary,
                            const RealEmbeddingMatrix& vectors,
                            int precision = 6);

struct LatencyStats {
  double median_ns = 0.0;
  double mean_ns = 0.0;
  size_t samples = 0;
  // Privatized ids in sample order; deterministic for a fixed seed.
  std::vector<uint32_t> outputs;
};

// Times PrivatizeId once per (repetition, word) pair. Sample k draws from
// RngStream(seed, k); RNG work counts towards the mechanism. The first
// `warmup` calls are run but not recorded. Fails with InvalidArgument
// ("empty sample") when there is nothing to time.
absl::StatusOr<LatencyStats> MeasureLatency(const WordMechanism& mechanism,
                                            std::span<const uint32_t> words,
                                            double epsilon, size_t repetitions,
                                            uint64_t seed, size_t warmup = 16);

// Same loop around a mechanism that returns its input.
absl::StatusOr<LatencyStats> MeasureHarnessOverhead(
    std::span<const uint32_t> words, size_t repetitions, uint64_t seed);

// GloVe-like data: pseudo-words of 3 to 10 lowercase letters and clustered
// Gaussian vectors.
TextEmbeddings SyntheticEmbeddings(size_t vocab_size, size_t dim,
                                   uint64_t seed);

struct BenchConfig {
  size_t vocab_size = 50000;
  size_t real_dim = 300;
  uint32_t binary_bits = 256;
  size_t samples = 200;
  size_t repetitions = 1;
  double epsilon = 1.0;
  uint64_t seed = 0;
  Acceleration acceleration = Acceleration::LinearScan();
  bool measure_text_file = true;
};

struct BenchReport {
  size_t vocab_size = 0;
  size_t real_dim = 0;
  uint32_t binary_bits = 0;
  StorageReport storage;
  double brr_ns_per_word = 0.0;  // median
  double madlib_ns_per_word = 0.0;
  double brr_mean_ns = 0.0;
  double madlib_mean_ns = 0.0;
  double harness_overhead_ns = 0.0;
  double speedup_pct = 0.0;  // 100 * (1 - brr / madlib), on medians
  double brr_index_build_ms = 0.0;
  double madlib_index_build_ms = 0.0;
  size_t samples = 0;
  uint64_t seed = 0;
  double epsilon = 0.0;
  std::string acceleration;
  std::vector<uint32_t> brr_outputs;
  std::vector<uint32_t> madlib_outputs;

  std::string ToJson() const;
  std::string ToTable() const;
  std::string ToCsv() const;
};

absl::StatusOr<BenchReport> RunBench(const BenchConfig& config);

}  // namespace brr

#endif  // BRR_BENCH_H_
