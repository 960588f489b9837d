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

#include "brr/bench.h"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <numeric>
#include <unordered_set>
#include <utility>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_format.h"
#include "brr/bemb_io.h"
#include "brr/noise.h"
#include "brr/rng.h"
#include "nlohmann/json.hpp"

namespace brr {
namespace {

using Clock = std::chrono::steady_clock;

constexpr uint64_t kWarmupStreamBase = uint64_t{1} << 63;

class IdentityMechanism final : public WordMechanism {
 public:
  MechanismKind kind() const override { return MechanismKind::kBrr; }
  const Vocabulary& vocabulary() const override { return vocabulary_; }
  uint32_t PrivatizeId(uint32_t id, double, RngStream&) const override {
    return id;
  }

 private:
  Vocabulary vocabulary_;
};

double Median(std::vector<double> values) {
  const size_t mid = values.size() / 2;
  std::nth_element(values.begin(), values.begin() + mid, values.end());
  if (values.size() % 2 == 1) return values[mid];
  const double upper = values[mid];
  const double lower =
      *std::max_element(values.begin(), values.begin() + mid);
  return 0.5 * (lower + upper);
}

double MillisecondsSince(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start)
      .count();
}

}  // namespace

double CompressionPct(uint64_t binary_bytes, uint64_t real_bytes) {
  if (real_bytes == 0) return 0.0;
  return 100.0 * (1.0 - static_cast<double>(binary_bytes) /
                            static_cast<double>(real_bytes));
}

uint64_t TextEmbeddingBytes(const Vocabulary& vocabulary,
                            const RealEmbeddingMatrix& vectors,
                            int precision) {
  uint64_t total = 0;
  char buffer[64];
  for (size_t i = 0; i < vocabulary.size(); ++i) {
    total += vocabulary.word(i).size() + 1;  // word + '\n'
    for (double v : vectors.row(i)) {
      total += 1 + static_cast<uint64_t>(
                       std::snprintf(buffer, sizeof(buffer), "%.*g",
                                     precision, v));
    }
  }
  return total;
}

absl::StatusOr<StorageReport> MeasureStorage(const Vocabulary& vocabulary,
                                             const RealEmbeddingMatrix& real,
                                             const BinaryCodeMatrix& codes) {
  if (real.rows() != vocabulary.size() || codes.rows() != vocabulary.size()) {
    return absl::InvalidArgumentError(absl::StrCat(
        "vocabulary mismatch: ", vocabulary.size(), " words, ", real.rows(),
        " vectors, ", codes.rows(), " codes"));
  }
  StorageReport report;
  const uint64_t count = vocabulary.size();
  report.real_payload_bytes = count * real.dim() * sizeof(float);
  report.binary_payload_bytes =
      count * codes.words_per_code() * sizeof(uint64_t);
  report.vocabulary_bytes = vocabulary.TextBytes();
  report.real_bytes = report.real_payload_bytes + report.vocabulary_bytes;
  report.binary_bytes = report.binary_payload_bytes + report.vocabulary_bytes;
  report.payload_compression_pct =
      CompressionPct(report.binary_payload_bytes, report.real_payload_bytes);
  report.compression_pct =
      CompressionPct(report.binary_bytes, report.real_bytes);
  report.bemb_file_bytes = BembFileBytes(vocabulary, codes.bits());
  return report;
}

absl::StatusOr<LatencyStats> MeasureLatency(const WordMechanism& mechanism,
                                            std::span<const uint32_t> words,
                                            double epsilon, size_t repetitions,
                                            uint64_t seed, size_t warmup) {
  if (words.empty() || repetitions == 0) {
    return absl::InvalidArgumentError(
        "empty sample: need at least one word and one repetition");
  }
  if (absl::Status status = ValidateEpsilon(epsilon); !status.ok()) {
    return status;
  }
  volatile uint32_t sink = 0;
  for (size_t k = 0; k < warmup; ++k) {
    RngStream rng(seed, kWarmupStreamBase + k);
    sink = mechanism.PrivatizeId(words[k % words.size()], epsilon, rng);
  }
  (void)sink;

  const size_t total = words.size() * repetitions;
  LatencyStats stats;
  stats.samples = total;
  stats.outputs.resize(total);
  std::vector<double> timings(total);
  for (size_t k = 0; k < total; ++k) {
    const uint32_t id = words[k % words.size()];
    const Clock::time_point start = Clock::now();
    RngStream rng(seed, k);
    stats.outputs[k] = mechanism.PrivatizeId(id, epsilon, rng);
    timings[k] =
        std::chrono::duration<double, std::nano>(Clock::now() - start).count();
  }
  stats.mean_ns = std::accumulate(timings.begin(), timings.end(), 0.0) /
                  static_cast<double>(total);
  stats.median_ns = Median(std::move(timings));
  return stats;
}

absl::StatusOr<LatencyStats> MeasureHarnessOverhead(
    std::span<const uint32_t> words, size_t repetitions, uint64_t seed) {
  const IdentityMechanism identity;
  return MeasureLatency(identity, words, 1.0, repetitions, seed);
}

TextEmbeddings SyntheticEmbeddings(size_t vocab_size, size_t dim,
                                   uint64_t seed) {
  RngStream word_rng(seed, 0);
  std::unordered_set<std::string> seen;
  std::vector<std::string> words;
  words.reserve(vocab_size);
  for (size_t i = 0; i < vocab_size; ++i) {
    const size_t length = 3 + word_rng.UniformBelow(8);
    std::string word(length, 'a');
    for (char& c : word) c = static_cast<char>('a' + word_rng.UniformBelow(26));
    if (seen.contains(word)) word = absl::StrCat(word, i);
    seen.insert(word);
    words.push_back(std::move(word));
  }

  const size_t clusters = std::max<size_t>(1, vocab_size / 50);
  RngStream center_rng(seed, 1);
  std::vector<double> centers(clusters * dim);
  for (double& v : centers) v = 0.4 * SampleStandardNormal(center_rng);
  RngStream point_rng(seed, 2);
  std::vector<double> values(vocab_size * dim);
  for (size_t i = 0; i < vocab_size; ++i) {
    const size_t c = point_rng.UniformBelow(clusters);
    for (size_t k = 0; k < dim; ++k) {
      values[i * dim + k] =
          centers[c * dim + k] + 0.25 * SampleStandardNormal(point_rng);
    }
  }
  TextEmbeddings out;
  out.vocabulary = *Vocabulary::Create(std::move(words));
  out.vectors = *RealEmbeddingMatrix::Create(dim, std::move(values));
  return out;
}

absl::StatusOr<BenchReport> RunBench(const BenchConfig& config) {
  if (config.vocab_size == 0 || config.real_dim == 0 ||
      config.binary_bits == 0) {
    return absl::InvalidArgumentError(
        "vocab_size, real_dim and binary_bits must be positive");
  }
  if (config.samples == 0 || config.repetitions == 0) {
    return absl::InvalidArgumentError(
        "empty sample: samples and repetitions must be positive");
  }
  if (absl::Status status = ValidateEpsilon(config.epsilon); !status.ok()) {
    return status;
  }

  TextEmbeddings data =
      SyntheticEmbeddings(config.vocab_size, config.real_dim, config.seed);
  auto codes =
      BinarizeHyperplane(data.vectors, config.binary_bits, config.seed);
  if (!codes.ok()) return codes.status();

  BenchReport report;
  report.vocab_size = config.vocab_size;
  report.real_dim = config.real_dim;
  report.binary_bits = config.binary_bits;
  report.samples = config.samples * config.repetitions;
  report.seed = config.seed;
  report.epsilon = config.epsilon;
  report.acceleration =
      config.acceleration.kind == Acceleration::Kind::kLinearScan
          ? "linear_scan"
          : absl::StrCat("multi_index(", config.acceleration.substring_count,
                         ")");

  auto storage = MeasureStorage(data.vocabulary, data.vectors, *codes);
  if (!storage.ok()) return storage.status();
  report.storage = *storage;
  if (config.measure_text_file) {
    report.storage.real_text_file_bytes =
        TextEmbeddingBytes(data.vocabulary, data.vectors);
    report.storage.file_compression_pct =
        CompressionPct(report.storage.bemb_file_bytes,
                       report.storage.real_text_file_bytes);
  }

  Clock::time_point start = Clock::now();
  auto brr = BrrMechanism::Create(data.vocabulary, *std::move(codes),
                                  config.acceleration);
  if (!brr.ok()) return brr.status();
  report.brr_index_build_ms = MillisecondsSince(start);

  start = Clock::now();
  auto madlib = MadlibMechanism::Create(data.vocabulary, data.vectors);
  if (!madlib.ok()) return madlib.status();
  report.madlib_index_build_ms = MillisecondsSince(start);

  RngStream sample_rng(config.seed, 3);
  std::vector<uint32_t> sample(config.samples);
  for (uint32_t& id : sample) {
    id = static_cast<uint32_t>(sample_rng.UniformBelow(config.vocab_size));
  }

  auto brr_stats = MeasureLatency(*brr, sample, config.epsilon,
                                  config.repetitions, config.seed);
  if (!brr_stats.ok()) return brr_stats.status();
  auto madlib_stats = MeasureLatency(*madlib, sample, config.epsilon,
                                     config.repetitions, config.seed);
  if (!madlib_stats.ok()) return madlib_stats.status();
  auto overhead =
      MeasureHarnessOverhead(sample, config.repetitions, config.seed);
  if (!overhead.ok()) return overhead.status();

  report.brr_ns_per_word = brr_stats->median_ns;
  report.madlib_ns_per_word = madlib_stats->median_ns;
  report.brr_mean_ns = brr_stats->mean_ns;
  report.madlib_mean_ns = madlib_stats->mean_ns;
  report.harness_overhead_ns = overhead->median_ns;
  report.speedup_pct =
      100.0 * (1.0 - report.brr_ns_per_word / report.madlib_ns_per_word);
  report.brr_outputs = std::move(brr_stats->outputs);
  report.madlib_outputs = std::move(madlib_stats->outputs);
  return report;
}

std::string BenchReport::ToJson() const {
  nlohmann::ordered_json json;
  json["vocab_size"] = vocab_size;
  json["real_dim"] = real_dim;
  json["binary_bits"] = binary_bits;
  json["real_bytes"] = storage.real_bytes;
  json["binary_bytes"] = storage.binary_bytes;
  json["compression_pct"] = storage.compression_pct;
  json["real_payload_bytes"] = storage.real_payload_bytes;
  json["binary_payload_bytes"] = storage.binary_payload_bytes;
  json["payload_compression_pct"] = storage.payload_compression_pct;
  json["real_text_file_bytes"] = storage.real_text_file_bytes;
  json["bemb_file_bytes"] = storage.bemb_file_bytes;
  json["file_compression_pct"] = storage.file_compression_pct;
  json["brr_ns_per_word"] = brr_ns_per_word;
  json["madlib_ns_per_word"] = madlib_ns_per_word;
  json["brr_mean_ns"] = brr_mean_ns;
  json["madlib_mean_ns"] = madlib_mean_ns;
  json["harness_overhead_ns"] = harness_overhead_ns;
  json["speedup_pct"] = speedup_pct;
  json["index_build_ms"] = {{"brr", brr_index_build_ms},
                            {"madlib", madlib_index_build_ms}};
  json["samples"] = samples;
  json["seed"] = seed;
  json["epsilon"] = epsilon;
  json["nearest_neighbor"] =
      absl::StrCat("exact for both (brr: ", acceleration, ")");
  return json.dump(2);
}

std::string BenchReport::ToTable() const {
  std::string out;
  auto row = [&out](std::string_view name, const std::string& value) {
    absl::StrAppendFormat(&out, "%-28s %s\n", std::string(name), value);
  };
  row("vocab_size", absl::StrCat(vocab_size));
  row("real_dim / binary_bits", absl::StrCat(real_dim, " / ", binary_bits));
  row("real_bytes", absl::StrCat(storage.real_bytes));
  row("binary_bytes", absl::StrCat(storage.binary_bytes));
  row("compression_pct", absl::StrFormat("%.2f", storage.compression_pct));
  row("payload_compression_pct",
      absl::StrFormat("%.2f", storage.payload_compression_pct));
  row("file_compression_pct",
      absl::StrFormat("%.2f", storage.file_compression_pct));
  row("brr_ns_per_word (median)", absl::StrFormat("%.0f", brr_ns_per_word));
  row("madlib_ns_per_word (median)",
      absl::StrFormat("%.0f", madlib_ns_per_word));
  row("harness_overhead_ns", absl::StrFormat("%.0f", harness_overhead_ns));
  row("speedup_pct", absl::StrFormat("%.2f", speedup_pct));
  row("index_build_ms brr", absl::StrFormat("%.2f", brr_index_build_ms));
  row("index_build_ms madlib", absl::StrFormat("%.2f", madlib_index_build_ms));
  row("samples", absl::StrCat(samples));
  row("seed", absl::StrCat(seed));
  row("nearest_neighbor", absl::StrCat("exact (brr: ", acceleration, ")"));
  return out;
}

std::string BenchReport::ToCsv() const {
  return absl::StrCat(
      "vocab_size,real_dim,binary_bits,real_bytes,binary_bytes,"
      "compression_pct,brr_ns_per_word,madlib_ns_per_word,speedup_pct,"
      "brr_index_build_ms,madlib_index_build_ms,samples,seed\n",
      vocab_size, ",", real_dim, ",", binary_bits, ",", storage.real_bytes,
      ",", storage.binary_bytes, ",",
      absl::StrFormat("%.4f", storage.compression_pct), ",",
      absl::StrFormat("%.1f", brr_ns_per_word), ",",
      absl::StrFormat("%.1f", madlib_ns_per_word), ",",
      absl::StrFormat("%.4f", speedup_pct), ",",
      absl::StrFormat("%.3f", brr_index_build_ms), ",",
      absl::StrFormat("%.3f", madlib_index_build_ms), ",", samples, ",", seed,
      "\n");
}

}  // namespace brr
